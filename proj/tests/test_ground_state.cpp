#include <doctest.h>

#include <map>

#include <Eigen/Eigenvalues>

#include "xyz/enumeration.hpp"
#include "xyz/errors.hpp"
#include "xyz/ground_state.hpp"
#include "xyz/hamiltonian.hpp"

using namespace xyz;

namespace {

IntPolynomial ip(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

const GroundStateVector& cached(int n) {
  static std::map<int, GroundStateVector> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_ground_state(n).vector).first;
  return it->second;
}

void check_table(const GroundStateVector& v, const std::map<std::string, IntPolynomial>& table) {
  // The listed states cover every orbit exactly once.
  CHECK(table.size() == v.entries.size());
  for (const auto& [label, poly] : table) {
    INFO(label);
    CHECK(v.component(SpinState::parse(label)) == poly);
  }
}

}  // namespace

TEST_CASE("degree bound") {
  CHECK(degree_bound(1) == 0);
  CHECK(degree_bound(3) == 1);
  CHECK(degree_bound(5) == 3);
  CHECK(degree_bound(7) == 6);
  CHECK(degree_bound(13) == 21);
}

TEST_CASE("tabulated components for small chains") {
  check_table(cached(1), {{"-", ip({1})}});
  check_table(cached(3), {{"---", ip({0, 1})}, {"-++", ip({1})}});
  check_table(cached(5), {{"-----", ip({0, 1, 0, 1})},
                          {"---++", ip({1, 0, 1})},
                          {"--+-+", ip({2})},
                          {"-++++", ip({0, 2})}});
  check_table(cached(7), {{"-------", ip({0, 0, 4, 0, 3, 0, 1})},
                          {"-----++", ip({0, 4, 0, 3, 0, 1})},
                          {"----+-+", ip({0, 7, 0, 1})},
                          {"---+--+", ip({0, 7, 0, 1})},
                          {"---++++", ip({1, 0, 5, 0, 2})},
                          {"--+-+++", ip({3, 0, 5})},
                          {"--++-++", ip({4, 0, 3, 0, 1})},
                          {"-+--+++", ip({3, 0, 5})},
                          {"-+-+-++", ip({7, 0, 1})},
                          {"-++++++", ip({0, 3, 0, 5})}});
  // Rotated labels hit the same orbit.
  CHECK(cached(5).component(SpinState::parse("+-+--")) == ip({2}));
}

TEST_CASE("every verification passes up to N = 11") {
  for (int n = 1; n <= 11; n += 2) {
    INFO("N = " << n);
    const GroundStateVector& v = cached(n);
    CHECK(v.all_minus().degree() == degree_bound(n));
    for (const Check& c : {verify_degree(v), verify_positivity(v), verify_normalization(v), verify_parity_rule(v),
                           verify_asm_coefficients(v), verify_eigenidentity(v), verify_shift_invariance(v)}) {
      INFO(c.name << " " << c.witness.dump());
      CHECK(c.passed);
    }
  }
}

TEST_CASE("parity of each entry follows the up-spin count") {
  for (int n = 3; n <= 11; n += 2) {
    const GroundStateVector& v = cached(n);
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
      const int u = v.basis->orbits()[i].representative.up_count();
      const int want = (v.degree() + u / 2) % 2;
      for (std::size_t k = 0; k < v.entries[i].coefficients().size(); ++k) {
        if (v.entries[i].coefficients()[k] != 0) CHECK(static_cast<int>(k % 2) == want);
      }
    }
  }
}

TEST_CASE("leading all-minus coefficients against the enumeration counts") {
  // Coefficient at a^m, m = quarter index, is the lowest nonzero one.
  CHECK(cached(5).all_minus().coefficient(1) == vsasm_count(3) * vsasm_count(3));
  CHECK(cached(9).all_minus().coefficient(2) == 9);
  CHECK(cached(9).all_minus().coefficient(2) == vsasm_count(5) * vsasm_count(5));
  CHECK(cached(3).all_minus().coefficient(1) == 1);
  CHECK(cached(7).all_minus().coefficient(2) == 4);
  CHECK(cached(11).all_minus().coefficient(3) == 121);
  CHECK(cached(11).all_minus().coefficient(3) == cstcpp_count(6) * cstcpp_count(6));
  CHECK(cached(11).all_minus().coefficient(2) == 0);
}

TEST_CASE("agreement with a floating-point eigensolver") {
  const int n = 9;
  const double a = 0.37;
  const Eigen::MatrixXd h = dense_hamiltonian(a, n);
  const double e = ground_energy(mpq_class(a), n).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  // Eigenspace at E, projected to the even sector and shift-symmetrized.
  const auto& vals = es.eigenvalues();
  std::vector<Eigen::Index> cols;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (std::abs(vals(i) - e) < 1e-8) cols.push_back(i);
  }
  REQUIRE(!cols.empty());
  const GroundStateVector& v = cached(n);
  const auto exact = evaluate(v, mpq_class(a));
  Eigen::VectorXd psi(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) psi(i) = exact[i].get_d();
  Eigen::MatrixXd basis(h.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) basis.col(j) = es.eigenvectors().col(cols[j]);
  const Eigen::VectorXd proj = basis * (basis.transpose() * psi);
  CHECK((proj - psi).norm() < 1e-9 * psi.norm());
}

TEST_CASE("odd-sector evaluation is the flipped vector") {
  const GroundStateVector& v = cached(5);
  const mpq_class a(3, 7);
  const auto even = evaluate(v, a, Parity::even);
  const auto odd = evaluate(v, a, Parity::odd);
  for (std::uint32_t s = 0; s < 32; ++s) CHECK(odd[s] == even[s ^ 31u]);
  const auto h = apply(a, odd, 5);
  for (std::uint32_t s = 0; s < 32; ++s) CHECK(h[s] == ground_energy(a, 5) * odd[s]);
}

TEST_CASE("negative controls for the exact checks") {
  GroundStateVector bad = cached(7);
  bad.entries[3] += ip({1});
  CHECK_FALSE(verify_eigenidentity(bad).passed);
  CHECK_FALSE(verify_parity_rule(bad).passed);

  GroundStateVector scaled = cached(5);
  for (auto& e : scaled.entries) e *= mpz_class(2);
  CHECK_FALSE(verify_normalization(scaled).passed);
  CHECK_FALSE(verify_degree(scaled).passed);

  GroundStateVector negative = cached(5);
  negative.entries[2] = ip({-2});
  CHECK_FALSE(verify_positivity(negative).passed);
}

TEST_CASE("reconstruction needs enough samples") {
  auto basis = std::make_shared<const SectorBasis>(enumerate_sector(5, Parity::even));
  const SectorStructure st(basis);
  const SampleSet s = collect_samples(st, 2 * degree_bound(5) + 2);
  CHECK_THROWS_AS(reconstruct(s.samples, basis), std::invalid_argument);
  const SampleSet more = collect_samples(st, 2 * degree_bound(5) + 3);
  ReconstructionInfo info;
  CHECK(reconstruct(more.samples, basis, &info).entries == cached(5).entries);
  CHECK(info.held_out_passed);
  CHECK(info.held_out_points == 1);
  // A corrupted held-out sample is caught.
  auto corrupted = more.samples;
  corrupted.back().components[0] += 1;
  CHECK_THROWS_AS(reconstruct(corrupted, basis), ReconstructionFailure);
}

TEST_CASE("document round trip and validation") {
  const GroundStateVector& v = cached(7);
  const json doc = xyz::to_json(v, json{{"note", "kept"}});
  CHECK(doc["schema"] == kVectorSchema);
  CHECK(doc["entries"].size() == 10);
  CHECK(doc["entries"][0]["state"] == "-------");
  CHECK(doc["provenance"]["note"] == "kept");
  const GroundStateVector back = ground_state_from_json(doc);
  CHECK(back.entries == v.entries);
  CHECK(xyz::to_json(back, json{{"note", "kept"}}).dump() == doc.dump());

  auto broken = [&](auto edit) {
    json d = doc;
    edit(d);
    CHECK_THROWS_AS(ground_state_from_json(d), std::invalid_argument);
  };
  broken([](json& d) { d["schema"] = "xyz-ground-state/2"; });
  broken([](json& d) { d["n"] = 8; });
  broken([](json& d) { d["parity"] = "odd"; });
  broken([](json& d) { d["degree_bound"] = 5; });
  broken([](json& d) { d["entries"].erase(d["entries"].begin()); });
  broken([](json& d) { std::swap(d["entries"][1], d["entries"][2]); });
  broken([](json& d) { d["entries"][1]["orbit_size"] = 3; });
  broken([](json& d) { d["entries"][1]["coefficients"][0] = 4; });
  broken([](json& d) { d["entries"][1]["coefficients"].push_back("0"); });
  broken([](json& d) { d["entries"][1]["coefficients"][0] = "x"; });
}
