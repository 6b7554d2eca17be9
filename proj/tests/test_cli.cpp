#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "xyz/cli.hpp"
#include "xyz/ground_state.hpp"

using namespace xyz;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("xyz_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("compute writes the canonical document") {
  const Run one = run({"compute", "--n", "1"});
  REQUIRE(one.code == kExitPass);
  const json d1 = json::parse(one.out);
  CHECK(d1["entries"].size() == 1);
  CHECK(d1["entries"][0]["coefficients"] == json::array({"1"}));

  const Run seven = run({"compute", "--n", "7"});
  REQUIRE(seven.code == kExitPass);
  const json d7 = json::parse(seven.out);
  CHECK(d7["schema"] == kVectorSchema);
  CHECK(d7["entries"].size() == 10);
  CHECK(d7["entries"][0]["coefficients"] == json::array({"0", "0", "4", "0", "3", "0", "1"}));
  CHECK(d7["provenance"]["held_out_passed"] == true);
  CHECK_FALSE(d7["provenance"].contains("wall_time_seconds"));

  const Run timed = run({"compute", "--n", "3", "--record-timing"});
  CHECK(json::parse(timed.out)["provenance"].contains("wall_time_seconds"));
}

TEST_CASE("compute output is byte-identical across runs and thread counts") {
  const Run a = run({"compute", "--n", "9", "--jobs", "1"});
  const Run b = run({"compute", "--n", "9", "--jobs", "3"});
  REQUIRE(a.code == kExitPass);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["entries"].size() == 30);
}

TEST_CASE("verify selects checks and reports failures") {
  const Run all = run({"verify", "--n", "5", "--conjectures", "all"});
  CHECK(all.code == kExitPass);
  CHECK(all.out.find("FAIL") == std::string::npos);
  CHECK(all.out.find("overall: PASS") != std::string::npos);

  const Run deg = run({"verify", "--n", "3", "--conjectures", "degree", "--json"});
  REQUIRE(deg.code == kExitPass);
  const json r = json::parse(deg.out);
  CHECK(r["schema"] == kVerifySchema);
  REQUIRE(r["checks"].size() == 1);
  CHECK(r["checks"][0]["witness"]["expected_degree"] == 1);
  CHECK(r["settings"].contains("prime_budget"));
  CHECK(r["settings"].contains("rotation_tolerance"));

  CHECK(run({"verify", "--n", "5", "--conjectures", "bogus"}).code == kExitUsage);
}

TEST_CASE("a tampered stored vector fails verification") {
  const auto good = temp_file("good.json"), bad = temp_file("bad.json");
  REQUIRE(run({"compute", "--n", "7", "-o", good.string()}).code == kExitPass);
  CHECK(run({"verify", "--input", good.string()}).code == kExitPass);
  json d = json::parse(slurp(good));
  d["entries"][4]["coefficients"][0] = "2";
  std::ofstream(bad) << d.dump(2);
  const Run r = run({"verify", "--input", bad.string(), "--conjectures", "eigenidentity"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("FAIL eigenidentity") != std::string::npos);

  d["schema"] = "xyz-ground-state/9";
  std::ofstream(bad) << d.dump(2);
  CHECK(run({"verify", "--input", bad.string()}).code == kExitUsage);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
  CHECK(run({"verify", "--input", good.string()}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({"compute", "--n", "4"}).code == kExitUsage);
  CHECK(run({"compute"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"elliptic-check", "--k", "1.5"}).code == kExitUsage);
  CHECK(run({"elliptic-check", "--k", "-0.2"}).code == kExitUsage);
  CHECK(run({"elliptic-check", "--k", "0.3", "--eta", "K/2"}).code == kExitUsage);
  CHECK(run({"verify", "--n", "3", "--input", "x.json"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("elliptic check") {
  const Run r = run({"elliptic-check", "--k", "0.3", "--n", "3", "--json"});
  REQUIRE(r.code == kExitPass);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == kEllipticSchema);
  CHECK(j["tolerances"]["eigenvalue"] == 1e-8);
  CHECK(j["trigonometric_limit"] == false);
  const Run z = run({"elliptic-check", "--k", "0"});
  CHECK(z.code == kExitPass);
  CHECK(z.out.find("trigonometric limit") != std::string::npos);
}

TEST_CASE("report lists components and sums") {
  const Run r = run({"report", "--n", "5"});
  REQUIRE(r.code == kExitPass);
  CHECK(r.out.find("Psi[-----] = a + a^3") != std::string::npos);
  CHECK(r.out.find("Psi[--+-+] = 2") != std::string::npos);
  CHECK(r.out.find("S1 = 15 + 11a + 5a^2 + a^3") != std::string::npos);
  const auto csv = temp_file("sums.csv");
  REQUIRE(run({"report", "--n", "3", "--csv", csv.string()}).code == kExitPass);
  const std::string text = slurp(csv);
  CHECK(text.rfind("quantity,power,coefficient\n", 0) == 0);
  CHECK(text.find("S1,0,3\n") != std::string::npos);
  CHECK(text.find("S1,1,1\n") != std::string::npos);
  std::filesystem::remove(csv);
}

TEST_CASE("listing labels cover each orbit once") {
  for (int n = 1; n <= 7; n += 2) {
    const auto labels = listing_labels(n);
    const SectorBasis b = enumerate_sector(n, Parity::even);
    std::set<std::size_t> seen;
    for (const auto& l : labels) seen.insert(b.index_of(SpinState::parse(l)));
    CHECK(seen.size() == b.size());
    CHECK(labels.size() == b.size());
  }
  CHECK_THROWS_AS(listing_labels(9), std::out_of_range);
}
