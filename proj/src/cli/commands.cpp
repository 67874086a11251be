#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "galecross/cli.hpp"
#include "galecross/error.hpp"
#include "galecross/gale.hpp"
#include "galecross/kfacets.hpp"
#include "galecross/simplexcross.hpp"
#include "galecross/witness.hpp"

namespace galecross::cli {
namespace {

std::string join(const IndexSet& s, char sep = ' ') {
  std::string out;
  for (int i : s) out += (out.empty() ? "" : std::string(1, sep)) + std::to_string(i);
  return out;
}

std::string join_labels(const PointConfiguration& p, const IndexSet& s) {
  std::string out;
  for (int i : s) out += (out.empty() ? "" : " ") + p.label(i);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t trial_seed(const VerifyParams& v, int trial) { return v.seed + static_cast<std::uint64_t>(trial); }

std::vector<Rational> parameters(int n, int first) {
  std::vector<Rational> ts;
  for (int i = 0; i < n; ++i) ts.emplace_back(first + i);
  return ts;
}

// Neighborliness by primal face tests: one less than the smallest non-face size.
int neighborliness_direct(const PointConfiguration& p) {
  for (int size = 1; size < p.size(); ++size) {
    bool all_faces = true;
    for_each_combination(p.size(), size, [&](const IndexSet& s) {
      all_faces = is_face(p, s);
      return all_faces;
    });
    if (!all_faces) return size - 1;
  }
  return p.size() - 1;
}

std::string row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }
std::string num(std::uint64_t x) { return std::to_string(x); }

CheckTable check_gale_bijection(const VerifyParams& v) {
  if (v.m - v.d - 1 < 1 || v.m - v.d - 1 > 4) throw InputError("gale-bijection needs 1 <= m-d-1 <= 4");
  CheckTable t{"trial,seed,u,v,separations,crossings,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const auto p = gen_random(v.d, v.m, seed, v.bound);
    std::map<int, std::uint64_t> by_small_side;
    for (const auto& s : enumerate_separations(gale_transform(p))) ++by_small_side[s.min_side()];
    for (int u = 0; 2 * u + 2 <= v.m; ++u) {
      const int w = v.m - 2 - u;
      const auto direct = count_all_crossings(p, u, w).count;
      const auto seps = by_small_side[u + 1];
      t.all_pass = t.all_pass && direct == seps;
      t.rows.push_back(row({std::to_string(trial), num(seed), std::to_string(u), std::to_string(w), num(seps), num(direct),
                            yes(direct == seps)}));
    }
  }
  return t;
}

CheckTable check_radon(const VerifyParams& v) {
  CheckTable t{"trial,seed,d,radon_left,radon_right,gale_positive,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const auto p = gen_random(v.d, v.d + 2, seed, v.bound);
    const auto radon = radon_partition(p);
    const auto g = gale_transform(p);
    IndexSet positive;
    for (int i = 0; i < g.size(); ++i)
      if (sign_of(g.vectors(0, i)) > 0) positive.push_back(i);
    const bool pass = positive == radon.positive || positive == radon.negative;
    t.all_pass = t.all_pass && pass;
    t.rows.push_back(row({std::to_string(trial), num(seed), std::to_string(v.d), join(radon.positive),
                          join(radon.negative), join(positive), yes(pass)}));
  }
  return t;
}

CheckTable check_convexity(const VerifyParams& v) {
  if (v.m - v.d - 1 < 1 || v.m - v.d - 1 > 4) throw InputError("convexity needs 1 <= m-d-1 <= 4");
  CheckTable t{"trial,seed,kind,direct,gale,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const char* kind = trial % 3 == 0 ? "cyclic" : trial % 3 == 1 ? "random" : "planted";
    const auto p = trial % 3 == 0   ? gen_moment_curve(v.d, parameters(v.m, 1 + trial))
                   : trial % 3 == 1 ? gen_random(v.d, v.m, seed, v.bound)
                                    : gen_planted(v.d, v.m, seed, v.bound);
    const bool direct = is_convex_position(p);
    const bool gale = is_convex_position_gale(gale_transform(p));
    t.all_pass = t.all_pass && direct == gale;
    t.rows.push_back(row({std::to_string(trial), num(seed), kind, yes(direct), yes(gale), yes(direct == gale)}));
  }
  return t;
}

CheckTable check_neighborliness(const VerifyParams& v) {
  if (v.m - v.d - 1 < 1 || v.m - v.d - 1 > 4) throw InputError("neighborliness needs 1 <= m-d-1 <= 4");
  CheckTable t{"trial,seed,kind,direct,gale,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const bool cyclic = trial % 2 == 0;
    const auto p = cyclic ? gen_moment_curve(v.d, parameters(v.m, 1 + trial)) : gen_random(v.d, v.m, seed, v.bound);
    const auto g = gale_transform(p);
    if (!is_convex_position(p)) {
      const bool agree = !is_convex_position_gale(g);
      t.all_pass = t.all_pass && agree;
      t.rows.push_back(row({std::to_string(trial), num(seed), "random", "not-convex", agree ? "not-convex" : "convex", yes(agree)}));
      continue;
    }
    const int direct = neighborliness_direct(p);
    const int gale = neighborliness_gale(g);
    const bool pass = direct == gale && (!cyclic || gale == v.d / 2);
    t.all_pass = t.all_pass && pass;
    t.rows.push_back(row({std::to_string(trial), num(seed), cyclic ? "cyclic" : "random", std::to_string(direct),
                          std::to_string(gale), yes(pass)}));
  }
  return t;
}

CheckTable check_balanced_lines(const VerifyParams& v) {
  if (v.r < 2) throw InputError("balanced-lines needs r >= 2");
  CheckTable t{"trial,seed,r,balanced,almost_balanced,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const auto p = gen_random(2, v.r, seed, v.bound);
    ColoredPointSet2D set;
    set.points = p.points();
    for (int i = 0; i < v.r; ++i) set.colors.push_back(i < (v.r + 1) / 2 ? Color::white : Color::black);
    const auto almost = almost_balanced_directed_lines(set).size();
    bool pass = almost >= static_cast<std::size_t>(v.r / 2);
    std::string balanced = "";
    if (v.r % 2 == 0) {
      const auto b = balanced_lines(set).size();
      balanced = num(b);
      pass = pass && b >= static_cast<std::size_t>(v.r / 2);
    }
    t.all_pass = t.all_pass && pass;
    t.rows.push_back(row({std::to_string(trial), num(seed), std::to_string(v.r), balanced, num(almost), yes(pass)}));
  }
  return t;
}

PointSet3D random_3d(int s, std::uint64_t seed, std::int64_t bound) { return PointSet3D{gen_random(3, s, seed, bound).points()}; }

CheckTable check_halving(const VerifyParams& v) {
  if (v.s < 4) throw InputError("halving needs s >= 4");
  CheckTable t{"trial,seed,s,count,bound,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const auto h = halving_stats(random_3d(v.s, seed, v.bound));
    const bool pass = h.count >= h.bound;
    t.all_pass = t.all_pass && pass;
    t.rows.push_back(row({std::to_string(trial), num(seed), std::to_string(v.s), num(h.count), num(h.bound), yes(pass)}));
  }
  return t;
}

CheckTable check_leq_facets(const VerifyParams& v) {
  if (v.s < 4) throw InputError("leq-facets needs s >= 4");
  CheckTable t{"trial,seed,s,j,count,bound,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const auto set = random_3d(v.s, seed, v.bound);
    for (int j = 0; 4 * j < v.s; ++j) {
      const auto count = leq_facet_count(set, j);
      const auto bound = 4 * binomial(j + 3, 3);
      t.all_pass = t.all_pass && count >= bound;
      t.rows.push_back(row({std::to_string(trial), num(seed), std::to_string(v.s), std::to_string(j), num(count), num(bound),
                            yes(count >= bound)}));
    }
  }
  return t;
}

CheckTable check_andrzejak(const VerifyParams& v) {
  if (v.s < 4) throw InputError("andrzejak needs s >= 4");
  CheckTable t{"trial,seed,s,k,e_k,predicted,pass", {}, true};
  for (int trial = 0; trial < v.trials; ++trial) {
    const auto seed = trial_seed(v, trial);
    const auto report = andrzejak_check(random_3d(v.s, seed, v.bound));
    for (const auto& c : report.checks) {
      t.all_pass = t.all_pass && c.holds;
      t.rows.push_back(row({std::to_string(trial), num(seed), std::to_string(v.s), std::to_string(c.k), num(c.e_k),
                            to_string(c.predicted), yes(c.holds)}));
    }
  }
  return t;
}

struct Common {
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::string input_document;
  std::vector<std::string> outputs;
};

void emit(Common& c, const std::string& name, const std::string& content) {
  write_atomic(std::filesystem::path(c.out_dir) / name, content);
  c.outputs.push_back(name);
}

void finish_manifest(Common& c, const std::vector<std::string>& args) {
  RunManifest m;
  for (const auto& a : args) m.command_line += (m.command_line.empty() ? "" : " ") + a;
  m.seed = c.seed;
  m.input_hash = sha256_hex(c.input_document.empty() ? m.command_line : c.input_document);
  m.timestamp = utc_timestamp();
  m.outputs = c.outputs;
  write_atomic(std::filesystem::path(c.out_dir) / "manifest.json", manifest_to_json(m));
}

PointConfiguration generate(const std::string& generator, int d, int n, std::uint64_t seed, std::int64_t bound) {
  if (d < 1) throw InputError("--d must be positive");
  if (n < 1) throw InputError("--n must be positive");
  if (generator == "moment") return gen_moment_curve(d, parameters(n, 0));
  if (generator == "cyclic") return gen_moment_curve(d, parameters(n, 1));
  if (generator == "random") return gen_random(d, n, seed, bound);
  if (generator == "planted") return gen_planted(d, n, seed, bound);
  if (generator == "bipyramid") {
    if (n != 2 * d) throw InputError("the bipyramid generator produces exactly 2d points");
    return gen_bipyramid(d, seed);
  }
  if (generator == "product") {
    if (n != 2 * d) throw InputError("the product generator produces exactly 2d points");
    return gen_product(d, seed);
  }
  throw InputError("unknown generator '" + generator + "'");
}

}  // namespace

std::string CheckTable::csv() const {
  std::string out = header + "\n";
  for (const auto& r : rows) out += r + "\n";
  return out;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names{"gale-bijection", "convexity", "neighborliness", "balanced-lines",
                                              "halving",        "leq-facets", "andrzejak",     "radon"};
  return names;
}

CheckTable run_lemma_check(const std::string& lemma, const VerifyParams& params) {
  if (params.trials < 1) throw InputError("--trials must be positive");
  if (lemma == "gale-bijection") return check_gale_bijection(params);
  if (lemma == "convexity") return check_convexity(params);
  if (lemma == "neighborliness") return check_neighborliness(params);
  if (lemma == "balanced-lines") return check_balanced_lines(params);
  if (lemma == "halving") return check_halving(params);
  if (lemma == "leq-facets") return check_leq_facets(params);
  if (lemma == "andrzejak") return check_andrzejak(params);
  if (lemma == "radon") return check_radon(params);
  throw InputError("unknown lemma '" + lemma + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Gale-transform and crossing-pair toolkit for rectilinear hypergraph drawings"};
  app.require_subcommand(1);
  Common common;

  std::string generator, config_path, lemma, regime;
  int d = 0, n = 0, u = -1, v = -1, t = 1, tprime = 0, s = 8;
  std::optional<int> interior;
  std::int64_t bound = 100;
  bool emit_pairs = false;
  VerifyParams vp;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", common.out_dir, "Output directory");
    sub->add_option("--seed", common.seed, "Seed for every random draw");
  };

  auto* gen = app.add_subcommand("gen", "Generate a point configuration");
  gen->add_option("--generator", generator, "moment | random | planted | cyclic | product | bipyramid")->required();
  gen->add_option("--d", d, "Dimension")->required();
  gen->add_option("--n", n, "Number of points (default 2d)");
  gen->add_option("--bound", bound, "Coordinate bound for random draws");
  add_out(gen);

  auto* count = app.add_subcommand("count", "Count crossing pairs of u- and v-simplices");
  count->add_option("--config", config_path, "Configuration file")->required();
  count->add_option("--u", u, "Dimension of the first simplex")->required();
  count->add_option("--v", v, "Dimension of the second simplex")->required();
  count->add_flag("--emit-pairs", emit_pairs, "Write pairs.csv");
  add_out(count);

  auto* verify = app.add_subcommand("verify", "Run an invariant suite on seeded instances");
  verify->add_option("--lemma", lemma, "gale-bijection | convexity | neighborliness | balanced-lines | halving | leq-facets | andrzejak | radon")->required();
  verify->add_option("--d", vp.d, "Dimension");
  verify->add_option("--m", vp.m, "Number of points");
  verify->add_option("--r", vp.r, "Planar point count");
  verify->add_option("--s", vp.s, "3D point count");
  verify->add_option("--trials", vp.trials, "Number of seeded instances");
  verify->add_option("--bound", vp.bound, "Coordinate bound");
  add_out(verify);

  auto* witness = app.add_subcommand("witness", "Run a lower-bound witness pipeline");
  witness->add_option("--regime", regime, "main | nonconvex | t-neighborly | highly-neighborly")->required();
  witness->add_option("--config", config_path, "Configuration file (otherwise one is generated)");
  witness->add_option("--d", d, "Dimension of the generated drawing");
  witness->add_option("--generator", generator, "Generator for the drawing (default depends on the regime)");
  witness->add_option("--bound", bound, "Coordinate bound for random draws");
  witness->add_option("--t", t, "Neighborliness t");
  witness->add_option("--tprime", tprime, "Neighborliness deficit t'");
  witness->add_option("--interior", interior, "Index of an interior vertex");
  add_out(witness);

  auto* facets = app.add_subcommand("facets", "j-facet and k-set statistics of a 3D point set");
  facets->add_option("--config", config_path, "3D configuration file (otherwise one is generated)");
  facets->add_option("--s", s, "Number of generated points");
  facets->add_option("--bound", bound, "Coordinate bound");
  add_out(facets);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::input_error;
  }

  try {
    auto load = [&]() {
      common.input_document = read_file(config_path);
      return load_config(common.input_document);
    };

    if (*gen) {
      const auto p = generate(generator, d, n > 0 ? n : 2 * d, common.seed, bound);
      emit(common, "config.json", save_config(p));
      out << "wrote " << p.size() << " points in dimension " << p.dim() << " to "
          << (std::filesystem::path(common.out_dir) / "config.json").string() << "\n";
    } else if (*count) {
      const auto p = load();
      const auto result = count_all_crossings(p, u, v, emit_pairs);
      std::ostringstream doc;
      doc << "{\n  \"u\": " << u << ",\n  \"v\": " << v << ",\n  \"count\": " << result.count << "\n}\n";
      emit(common, "count.json", doc.str());
      if (emit_pairs) {
        std::string csv = "left,right\n";
        for (const auto& pair : result.pairs) csv += join_labels(p, pair.left) + "," + join_labels(p, pair.right) + "\n";
        emit(common, "pairs.csv", csv);
      }
      out << result.count << "\n";
    } else if (*verify) {
      vp.seed = common.seed;
      const auto table = run_lemma_check(lemma, vp);
      emit(common, "verify_" + lemma + ".csv", table.csv());
      std::size_t failed = 0;
      for (const auto& r : table.rows) failed += r.ends_with(",false");
      out << lemma << ": " << table.rows.size() - failed << "/" << table.rows.size() << " checks passed\n";
      finish_manifest(common, args);
      return table.all_pass ? ExitCode::ok : ExitCode::invariant_failure;
    } else if (*witness) {
      const Regime which = parse_regime(regime);
      PointConfiguration p = [&] {
        if (!config_path.empty()) return load();
        if (generator.empty())
          generator = which == Regime::main            ? "random"
                      : which == Regime::nonconvex     ? "planted"
                      : which == Regime::t_neighborly  ? "bipyramid"
                                                       : "cyclic";
        return generate(generator, d, 2 * d, common.seed, bound);
      }();
      if (config_path.empty()) emit(common, "config.json", save_config(p));
      WitnessReport report;
      switch (which) {
        case Regime::main: report = main_witnesses(p); break;
        case Regime::nonconvex: report = nonconvex_witnesses(p, interior); break;
        case Regime::t_neighborly: report = t_neighborly_witnesses(p, t); break;
        case Regime::highly_neighborly: report = highly_neighborly_witnesses(p, tprime); break;
      }
      emit(common, "witness.json", report_to_json(p, report));
      const bool valid = verify_report(p, report);
      out << "regime " << to_string(which) << ", d=" << report.d << ": " << report.pairs.size() << " pairs";
      if (report.degenerate_extension)
        out << " (degenerate extension: " << report.note << ")\n";
      else
        out << " >= bound " << report.guaranteed_lower_bound << " (extension factor " << report.extension_factor << ")\n";
      finish_manifest(common, args);
      if (!valid) err << "witness report failed verification\n";
      return valid ? ExitCode::ok : ExitCode::invariant_failure;
    } else if (*facets) {
      PointSet3D set;
      if (!config_path.empty()) {
        const auto p = load();
        if (p.dim() != 3) throw InputError("facets needs a 3D configuration");
        set.points = p.points();
      } else {
        set.points = gen_random(3, s, common.seed, bound).points();
      }
      const auto report = andrzejak_check(set);
      emit(common, "facet_stats.csv", stats_csv(set.size(), report.stats));
      emit(common, "identities.csv", identity_csv(report));
      out << "s=" << set.size() << ": identities " << (report.all_hold() ? "hold" : "FAIL") << "\n";
      finish_manifest(common, args);
      return report.all_hold() ? ExitCode::ok : ExitCode::invariant_failure;
    }
    finish_manifest(common, args);
    return ExitCode::ok;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return ExitCode::input_error;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return ExitCode::input_error;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << "\n";
    return ExitCode::invariant_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::invariant_failure;
  }
}

}  // namespace galecross::cli
