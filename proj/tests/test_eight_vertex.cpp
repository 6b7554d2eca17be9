#include <doctest.h>

#include <map>
#include <random>

#include "xyz/eight_vertex.hpp"

using namespace xyz;

namespace {

double vertex(const BoltzmannWeights& w, int row, int col) {
  static const int pattern[4][4] = {{0, 4, 4, 3}, {4, 1, 2, 4}, {4, 2, 1, 4}, {3, 4, 4, 0}};
  switch (pattern[row][col]) {
    case 0: return w.a;
    case 1: return w.b;
    case 2: return w.c;
    case 3: return w.d;
    default: return 0;
  }
}

// T_{nu, mu} = sum over auxiliary loops of prod_j R[(beta_j nu_j), (beta_{j+1} mu_j)].
Eigen::MatrixXd literal_transfer(double v, const EllipticParams& p, int n, const std::vector<double>& inhom) {
  const std::uint32_t dim = 1u << n;
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint32_t nu = 0; nu < dim; ++nu) {
    for (std::uint32_t mu = 0; mu < dim; ++mu) {
      for (std::uint32_t loop = 0; loop < dim; ++loop) {
        double prod = 1;
        for (int j = 0; j < n && prod != 0; ++j) {
          const int beta = (loop >> j) & 1, next = (loop >> ((j + 1) % n)) & 1;
          const int nj = (nu >> j) & 1, mj = (mu >> j) & 1;
          prod *= vertex(weights(v - inhom[j], p), 2 * beta + nj, 2 * next + mj);
        }
        t(nu, mu) += prod;
      }
    }
  }
  return t;
}

const GroundStateVector& cached(int n) {
  static std::map<int, GroundStateVector> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_ground_state(n).vector).first;
  return it->second;
}

}  // namespace

TEST_CASE("transfer matrix matches the literal loop sum") {
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (double k : {0.0, 0.3, 0.6}) {
    const EllipticParams p = make_params(k);
    for (int n : {1, 3, 5}) {
      std::vector<double> inhom(n);
      for (auto& x : inhom) x = u(rng);
      const double v = 0.7 * p.bigk;
      const Eigen::MatrixXd lit = literal_transfer(v, p, n, inhom);
      const Eigen::MatrixXd t = transfer_matrix(v, p, n, inhom);
      CHECK((t - lit).norm() < 1e-12 * (1 + lit.norm()));
      const Eigen::MatrixXd h = transfer_matrix(v, p, n);
      CHECK((h - literal_transfer(v, p, n, std::vector<double>(n, 0.0))).norm() < 1e-12 * (1 + h.norm()));
    }
  }
  const EllipticParams p = make_params(0.3);
  CHECK_THROWS_AS(transfer_matrix(0.1, p, 11), std::length_error);
  const std::vector<double> wrong(2, 0.0);
  CHECK_THROWS_AS(transfer_matrix(0.1, p, 3, wrong), std::invalid_argument);
}

TEST_CASE("numeric vector expands orbit values") {
  const Eigen::VectorXd v = numeric_vector(cached(5), 0.5);
  CHECK(v(0) == doctest::Approx(0.5 + 0.125));
  CHECK(v(SpinState::parse("+-+--").bits()) == doctest::Approx(2));
  CHECK(v(SpinState::parse("+----").bits()) == 0);
}

TEST_CASE("sector null vector of a diagonal matrix") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(8, 8);
  m(5, 5) = 0;  // "+-+" has two up spins
  const SectorNullvector nv = sector_nullvector(m, 3, Parity::even);
  CHECK(std::abs(std::abs(nv.vector(5)) - 1) < 1e-12);
  CHECK(nv.smallest < 1e-14);
  CHECK(nv.next == doctest::Approx(1));
}

TEST_CASE("full suite passes on several moduli and lengths") {
  for (double k : {0.0, 0.1, 0.3, 0.6}) {
    for (int n : {3, 5}) {
      EllipticSuite s;
      s.k = k;
      s.n = n;
      for (const Check& c : run_elliptic_suite(s)) {
        INFO("k = " << k << " n = " << n << " " << c.name << " " << c.witness.dump());
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("eigenvalue check detects a wrong vector") {
  const EllipticParams p = make_params(0.3);
  GroundStateVector bad = cached(5);
  bad.entries[1] = IntPolynomial(std::vector<mpz_class>{5});
  CHECK_FALSE(check_eigenvalue(p, bad, 1).passed);
  CHECK(check_eigenvalue(p, cached(7), 1).passed);
}

TEST_CASE("inversion signs at the four crossing choices") {
  const Check c = check_inversion_signs(0.3, 2);
  INFO(c.witness.dump());
  CHECK(c.passed);
}

TEST_CASE("tolerances are reported") {
  const json t = to_json(EllipticTolerances{});
  CHECK(t["eigenvalue"] == 1e-8);
  CHECK(t["condition"] == 1e-12);
  CHECK(t["extrapolation"] == 1e-6);
}
