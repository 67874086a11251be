#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include "galecross/error.hpp"

namespace galecross {

/// Exact rational scalar. GMP keeps every value in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using Index = Eigen::Index;

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits only, q != 0) and returns the canonical value.
Rational parse_rational(std::string_view text);

/// Canonical text form: lowest terms, no leading '+', denominator omitted when 1.
std::string to_string(const Rational& value);

template <typename Scalar>
inline int sign_of(const Scalar& x) {
  return boost::multiprecision::sign(x);
}

/// Reduced row echelon form plus the pivot column of every nonzero row.
template <typename Scalar>
struct EchelonForm {
  MatrixX<Scalar> reduced;
  std::vector<Index> pivots;
};

/// Gauss-Jordan elimination over an exact field. The pivot of each step is the first
/// nonzero entry of the current column at or below the working row, so the output is
/// the (unique) reduced row echelon form and is reproducible bit for bit.
template <typename Derived>
EchelonForm<typename Derived::Scalar> reduced_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  EchelonForm<Scalar> out{m, {}};
  auto& r = out.reduced;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index pivot = row;
    while (pivot < r.rows() && sign_of(r(pivot, col)) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) r.row(pivot).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || sign_of(r(i, col)) == 0) continue;
      const Scalar factor = r(i, col);
      for (Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(reduced_echelon(m).pivots.size());
}

/// Basis of the right null space, one vector per free column of the reduced echelon form.
/// Vector f has a 1 in free column f, zeros in the other free columns, and the negated
/// echelon entries in the pivot columns.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> nullspace_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto echelon = reduced_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VectorX<Scalar>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(m.cols());
    v(free) = 1;
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
      v(echelon.pivots[r]) = -echelon.reduced(static_cast<Index>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  MatrixX<Scalar> a = m;
  Scalar det = 1;
  for (Index col = 0; col < a.cols(); ++col) {
    Index pivot = col;
    while (pivot < a.rows() && sign_of(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) return Scalar(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Index i = col + 1; i < a.rows(); ++i) {
      if (sign_of(a(i, col)) == 0) continue;
      const Scalar factor = a(i, col) / a(col, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return det;
}

enum class LpStatus { optimal, infeasible, unbounded };

template <typename Scalar>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  VectorX<Scalar> x;
  Scalar objective = 0;
};

namespace detail {

// Dense two-phase tableau simplex with Bland's rule. The last row holds reduced
// costs, the last column the right-hand side; the objective value is -T(m, n).
template <typename Scalar>
class Tableau {
 public:
  Tableau(MatrixX<Scalar> t, std::vector<Index> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  Index rows() const { return t_.rows() - 1; }
  Index rhs() const { return t_.cols() - 1; }
  MatrixX<Scalar>& table() { return t_; }
  std::vector<Index>& basis() { return basis_; }

  void pivot(Index r, Index c) {
    const Scalar inv = Scalar(1) / t_(r, c);
    for (Index j = 0; j < t_.cols(); ++j)
      if (sign_of(t_(r, j)) != 0) t_(r, j) *= inv;
    for (Index i = 0; i < t_.rows(); ++i) {
      if (i == r || sign_of(t_(i, c)) == 0) continue;
      const Scalar factor = t_(i, c);
      for (Index j = 0; j < t_.cols(); ++j)
        if (sign_of(t_(r, j)) != 0) t_(i, j) -= factor * t_(r, j);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  // Runs to optimality over columns [0, allowed). Returns false when unbounded.
  bool optimize(Index allowed) {
    const Index obj = rows();
    for (;;) {
      Index enter = -1;
      for (Index j = 0; j < allowed; ++j)
        if (sign_of(t_(obj, j)) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Index leave = -1;
      Scalar best;
      for (Index i = 0; i < obj; ++i) {
        if (sign_of(t_(i, enter)) <= 0) continue;
        Scalar ratio = t_(i, rhs()) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(Index r) {
    const Index n = t_.rows() - 1;
    for (Index i = r; i < n; ++i) t_.row(i).swap(t_.row(i + 1));
    t_.conservativeResize(n, Eigen::NoChange);
    basis_.erase(basis_.begin() + r);
  }

 private:
  MatrixX<Scalar> t_;
  std::vector<Index> basis_;
};

}  // namespace detail

/// Minimizes c.x subject to a.x = b, x >= 0, exactly.
template <typename Scalar>
LpResult<Scalar> minimize(const MatrixX<Scalar>& a, const VectorX<Scalar>& b, const VectorX<Scalar>& c) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (b.size() != m || c.size() != n) throw InputError("linear program dimension mismatch");

  // Phase I: artificial identity basis, rows flipped so that b >= 0.
  MatrixX<Scalar> t = MatrixX<Scalar>::Zero(m + 1, n + m + 1);
  std::vector<Index> basis(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) {
    const bool flip = sign_of(b(i)) < 0;
    for (Index j = 0; j < n; ++j) t(i, j) = flip ? Scalar(-a(i, j)) : a(i, j);
    t(i, n + m) = flip ? Scalar(-b(i)) : b(i);
    t(i, n + i) = 1;
    basis[static_cast<std::size_t>(i)] = n + i;
    for (Index j = 0; j < n; ++j) t(m, j) -= t(i, j);
    t(m, n + m) -= t(i, n + m);
  }
  detail::Tableau<Scalar> tab(std::move(t), std::move(basis));
  tab.optimize(n + m);

  LpResult<Scalar> result;
  if (sign_of(tab.table()(tab.rows(), tab.rhs())) != 0) return result;  // artificials stuck above 0

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (Index i = 0; i < tab.rows();) {
    if (tab.basis()[static_cast<std::size_t>(i)] < n) {
      ++i;
      continue;
    }
    Index col = -1;
    for (Index j = 0; j < n; ++j)
      if (sign_of(tab.table()(i, j)) != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      tab.pivot(i, col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  // Phase II objective row.
  auto& tt = tab.table();
  const Index obj = tab.rows();
  tt.row(obj).setZero();
  for (Index j = 0; j < n; ++j) tt(obj, j) = c(j);
  for (Index i = 0; i < obj; ++i) {
    const Scalar& cb = c(tab.basis()[static_cast<std::size_t>(i)]);
    if (sign_of(cb) == 0) continue;
    for (Index j = 0; j < n; ++j) tt(obj, j) -= cb * tt(i, j);
    tt(obj, tab.rhs()) -= cb * tt(i, tab.rhs());
  }
  if (!tab.optimize(n)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.x = VectorX<Scalar>::Zero(n);
  for (Index i = 0; i < obj; ++i) result.x(tab.basis()[static_cast<std::size_t>(i)]) = tt(i, tab.rhs());
  result.objective = -tt(obj, tab.rhs());
  return result;
}

/// Some basic solution of a.x = b with x >= 0, if one exists.
template <typename Scalar>
std::optional<VectorX<Scalar>> nonneg_feasible(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  if (b.size() != a.rows()) throw InputError("nonneg_feasible: b has the wrong dimension");
  auto lp = minimize<Scalar>(a, b, VectorX<Scalar>::Zero(a.cols()));
  if (lp.status != LpStatus::optimal) return std::nullopt;
  return lp.x;
}

/// Some x with a.x = b and every coordinate of x strictly positive, if one exists.
///
/// Maximizes the smallest coordinate t (capped at 1) over x = y + t*1, y >= 0; a strictly
/// positive solution exists iff the optimum is positive.
template <typename Scalar>
std::optional<VectorX<Scalar>> strict_feasible(const MatrixX<Scalar>& a, const VectorX<Scalar>& b) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (n < 1) throw InputError("strict_feasible: system has no unknowns");
  if (b.size() != m) throw InputError("strict_feasible: b has the wrong dimension");

  MatrixX<Scalar> lifted = MatrixX<Scalar>::Zero(m + 1, n + 2);
  lifted.topLeftCorner(m, n) = a;
  for (Index i = 0; i < m; ++i) {
    Scalar row_sum = 0;
    for (Index j = 0; j < n; ++j) row_sum += a(i, j);
    lifted(i, n) = row_sum;
  }
  lifted(m, n) = 1;
  lifted(m, n + 1) = 1;
  VectorX<Scalar> rhs(m + 1);
  rhs.head(m) = b;
  rhs(m) = 1;
  VectorX<Scalar> cost = VectorX<Scalar>::Zero(n + 2);
  cost(n) = -1;

  auto lp = minimize<Scalar>(lifted, rhs, cost);
  if (lp.status != LpStatus::optimal) return std::nullopt;
  const Scalar t = lp.x(n);
  if (sign_of(t) <= 0) return std::nullopt;
  VectorX<Scalar> x = lp.x.head(n);
  for (Index j = 0; j < n; ++j) x(j) += t;
  return x;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace galecross
