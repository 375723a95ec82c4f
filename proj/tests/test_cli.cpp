#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ba/cli_driver.hpp"
#include "ba/serialize.hpp"

namespace fs = std::filesystem;
using ba::io::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bacms");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ba::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "bacms_cli_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("build reports entries and M") {
  auto r = run({"build", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["entries"].size() == 4);
  CHECK(j["M"] == 4);
  auto a = run({"build", "--family", "An2", "--n", "2", "--m", "1"});
  REQUIRE(a.code == 0);
  auto ja = json::parse(a.out);
  CHECK(ja["entries"].size() == 3);
  CHECK(ja["M"] == 3);
}

TEST_CASE("malformed input exits 2 without writing output") {
  fs::path bad = scratch("bad.json");
  std::ofstream(bad) << "{\"family\": \"Cnlm\", \"n\": ";
  fs::path out = scratch("never.json");
  auto r = run({"build", "--config", bad.string(), "--out", out.string()});
  CHECK(r.code == 2);
  CHECK(!fs::exists(out));
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(run({"build", "--family", "Nope", "--n", "2"}).code == 2);
  CHECK(run({"build", "--family", "Cnlm", "--n", "2", "--l", "x", "--m", "1"}).code == 2);
  CHECK(run({"verify", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1", "--checks", "bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", "--config", scratch("missing.json").string()}).code == 2);
  fs::path explicit_cfg = scratch("explicit.json");
  std::ofstream(explicit_cfg) << R"({"weights": ["1","1"], "entries": [{"coords": ["1","0"], "mult": 1}]})";
  CHECK(run({"verify", "--config", explicit_cfg.string(), "--checks", "schrodinger"}).code == 2);
}

TEST_CASE("construct reports the chain") {
  auto r = run({"construct", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["chain_degrees"] == json::array({8, 7, 6, 5, 4}));
  auto a = run({"construct", "--family", "An2", "--n", "2", "--m", "1"});
  REQUIRE(a.code == 0);
  CHECK(json::parse(a.out)["chain_degrees"] == json::array({6, 5, 4, 3}));
  fs::path empty = scratch("empty.json");
  std::ofstream(empty) << R"({"weights": ["1","1"], "entries": []})";
  auto e = run({"construct", "--config", empty.string()});
  REQUIRE(e.code == 0);
  auto je = json::parse(e.out);
  CHECK(je["M"] == 0);
  CHECK(je["psi_numerator"]["text"] == "1");
}

TEST_CASE("max-size guard prints the estimate") {
  auto r = run({"construct", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1", "--max-size", "10"});
  CHECK(r.code == 2);
  CHECK(r.err.find("45") != std::string::npos);  // C(8+2, 2)
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1"}).code == 0);
  auto broken = run({"verify", "--family", "rootA", "--n", "2", "--m", "1", "--mults", "1,1,2", "--checks", "locus-series"});
  CHECK(broken.code == 1);
  auto j = json::parse(broken.out);
  CHECK(j["verdict"] == "fail");
  CHECK(!j["checks"][0]["witnesses"].empty());
  auto ring = run({"verify", "--family", "An1", "--n", "2", "--m", "2", "--checks", "ring", "--poly", "k2"});
  CHECK(ring.code == 0);
}

TEST_CASE("outputs are byte-identical across runs") {
  std::vector<std::string> args{"verify", "--family", "An2", "--n", "2", "--m", "1"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  fs::path o1 = scratch("c1.json"), o2 = scratch("c2.json");
  run({"construct", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1", "--out", o1.string()});
  run({"construct", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1", "--out", o2.string()});
  CHECK(slurp(o1) == slurp(o2));
  CHECK(!slurp(o1).empty());
}

TEST_CASE("build output round-trips as an explicit configuration") {
  fs::path cfg = scratch("roundtrip.json");
  REQUIRE(run({"build", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1", "--out", cfg.string()}).code == 0);
  auto named = run({"construct", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1"});
  auto again = run({"construct", "--config", cfg.string()});
  REQUIRE(again.code == 0);
  CHECK(named.out == again.out);
  // entries only, no family tag: the explicit checks still agree
  auto j = json::parse(slurp(cfg));
  json bare = {{"weights", j["weights"]}, {"entries", j["entries"]}};
  fs::path bare_path = scratch("bare.json");
  std::ofstream(bare_path) << bare.dump();
  auto v1 = run({"verify", "--config", bare_path.string(), "--checks", "compat,locus-series,locus-direct"});
  auto v2 = run({"verify", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1", "--checks", "compat,locus-series,locus-direct"});
  CHECK(v1.code == 0);
  CHECK(json::parse(v1.out)["checks"].size() == json::parse(v2.out)["checks"].size());
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(json::parse(v1.out)["checks"][i]["verdict"] == json::parse(v2.out)["checks"][i]["verdict"]);
}

TEST_CASE("show-operator renders shifts") {
  auto r = run({"show-operator", "--family", "Cnlm", "--n", "2", "--l", "1", "--m", "1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("T[1,0]") != std::string::npos);
}
