#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "galecross/cli.hpp"
#include "galecross/pointconfig.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using galecross::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("galecross_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen writes configurations and a manifest") {
    const auto dir = scratch("gen");
    CHECK(call({"gen", "--generator", "moment", "--d", "3", "--n", "6", "--out", dir.string()}).code == 0);
    const auto p = galecross::load_config(slurp(dir / "config.json"));
    CHECK(p.size() == 6);
    CHECK(p.dim() == 3);
    const auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["outputs"] == nlohmann::json::array({"config.json"}));
    CHECK(manifest["input_hash"].get<std::string>().size() == 64);
    CHECK(manifest["tool_version"] == galecross::cli::kToolVersion);
  }

  TEST_CASE("random generation is reproducible") {
    const auto a = scratch("gen_a"), b = scratch("gen_b");
    CHECK(call({"gen", "--generator", "random", "--d", "6", "--n", "12", "--seed", "7", "--out", a.string()}).code == 0);
    CHECK(call({"gen", "--generator", "random", "--d", "6", "--n", "12", "--seed", "7", "--out", b.string()}).code == 0);
    CHECK(slurp(a / "config.json") == slurp(b / "config.json"));
  }

  TEST_CASE("planted drawings are not in convex position") {
    const auto dir = scratch("planted");
    CHECK(call({"gen", "--generator", "planted", "--d", "7", "--n", "14", "--seed", "3", "--out", dir.string()}).code == 0);
    CHECK_FALSE(galecross::is_convex_position(galecross::load_config(slurp(dir / "config.json"))));
  }

  TEST_CASE("count") {
    const auto dir = scratch("count");
    std::ofstream(dir / "square.json") << R"({"dimension": 2, "points": [["0","0"],["1","0"],["0","1"],["1","1"]]})";
    const auto r = call({"count", "--config", (dir / "square.json").string(), "--u", "1", "--v", "1", "--emit-pairs",
                         "--out", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(slurp(dir / "pairs.csv") == "left,right\nv1 v4,v2 v3\n");
    CHECK(call({"count", "--config", (dir / "square.json").string(), "--u", "2", "--v", "1", "--out", dir.string()}).code == 2);
    CHECK(call({"count", "--config", (dir / "missing.json").string(), "--u", "1", "--v", "1"}).code == 2);
  }

  TEST_CASE("verify") {
    const auto dir = scratch("verify");
    const auto r = call({"verify", "--lemma", "andrzejak", "--s", "9", "--trials", "5", "--seed", "1", "--out", dir.string()});
    CHECK(r.code == 0);
    const auto csv = slurp(dir / "verify_andrzejak.csv");
    CHECK(csv.rfind("trial,seed,s,k,e_k,predicted,pass\n", 0) == 0);
    CHECK(csv.find(",false") == std::string::npos);
    CHECK(call({"verify", "--lemma", "balanced-lines", "--r", "12", "--trials", "20", "--out", dir.string()}).code == 0);
    CHECK(call({"verify", "--lemma", "gale-bijection", "--d", "4", "--m", "8", "--trials", "3", "--out", dir.string()}).code == 0);
    CHECK(call({"verify", "--lemma", "nonsense", "--out", dir.string()}).code == 2);
  }

  TEST_CASE("witness") {
    const auto dir = scratch("witness");
    const auto r = call({"witness", "--regime", "main", "--d", "6", "--seed", "2", "--out", dir.string()});
    CHECK(r.code == 0);
    const auto report = nlohmann::json::parse(slurp(dir / "witness.json"));
    CHECK(report["guaranteed_lower_bound"] == 5);
    CHECK(report["pair_count"].get<int>() >= 5);
    CHECK(report["pairs"][0][0].size() == 6);

    const auto convex = scratch("witness_convex");
    const auto c = call({"witness", "--regime", "nonconvex", "--d", "7", "--generator", "cyclic", "--out", convex.string()});
    CHECK(c.code == 2);
    CHECK(c.err.find("convex position") != std::string::npos);
    CHECK(call({"witness", "--regime", "sideways", "--d", "6", "--out", dir.string()}).code == 2);
  }

  TEST_CASE("re-running reproduces result files") {
    const auto a = scratch("rerun_a"), b = scratch("rerun_b");
    for (const auto& dir : {a, b})
      CHECK(call({"witness", "--regime", "main", "--d", "6", "--seed", "5", "--out", dir.string()}).code == 0);
    CHECK(slurp(a / "witness.json") == slurp(b / "witness.json"));
    CHECK(slurp(a / "config.json") == slurp(b / "config.json"));
  }

  TEST_CASE("facets") {
    const auto dir = scratch("facets");
    CHECK(call({"facets", "--s", "8", "--seed", "3", "--out", dir.string()}).code == 0);
    CHECK(slurp(dir / "facet_stats.csv").rfind("s,j_or_k,E_j,e_k\n", 0) == 0);
    CHECK(slurp(dir / "identities.csv").find(",false") == std::string::npos);
  }

  TEST_CASE("argument errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"gen", "--d", "3"}).code == 2);
    CHECK(call({"gen", "--generator", "moment", "--d", "x"}).code == 2);
    CHECK(call({"--help"}).code == 0);
  }
}
