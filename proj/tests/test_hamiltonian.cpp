#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "xyz/hamiltonian.hpp"

using namespace xyz;

namespace {

mpq_class random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 17);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("couplings lie on the combinatorial surface") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const mpq_class a = random_rational(rng);
    const CouplingConstants j = couplings(a);
    CHECK(j.jx * j.jy + j.jy * j.jz + j.jz * j.jx == 0);
    CHECK(j.jx + j.jy + j.jz == (a * a + 3) / 2);
  }
  CHECK(ground_energy(mpq_class(1), 3) == -3);
  CHECK(ground_energy(mpq_class(0), 5) == mpq_class(-15, 4));
}

TEST_CASE("sparse action matches the dense operator") {
  std::mt19937 rng(2);
  for (int n : {1, 3, 5, 7}) {
    const mpq_class a = random_rational(rng);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<mpq_class> v(dim);
    for (auto& x : v) x = random_rational(rng);
    const auto w = apply(a, v, n);
    const Eigen::MatrixXd h = dense_hamiltonian(a.get_d(), n);
    CHECK((h - h.transpose()).norm() < 1e-12);
    Eigen::VectorXd dv(dim);
    for (std::size_t i = 0; i < dim; ++i) dv(i) = v[i].get_d();
    const Eigen::VectorXd dw = h * dv;
    for (std::size_t i = 0; i < dim; ++i) CHECK(std::abs(dw(i) - w[i].get_d()) < 1e-9 * (1 + std::abs(dw(i))));
  }
}

TEST_CASE("dense xyz form reduces to the Ising chain") {
  const Eigen::MatrixXd h = dense_xyz_hamiltonian(0, 0, 1, 3);
  // All spins equal: three satisfied bonds, energy -3/2.
  CHECK(h(0, 0) == doctest::Approx(-1.5));
  CHECK(h(7, 7) == doctest::Approx(-1.5));
  CHECK((h - Eigen::MatrixXd(h.diagonal().asDiagonal())).norm() == 0);
}

TEST_CASE("the special energy lies in the spectrum") {
  for (int n : {3, 5, 7}) {
    for (double a : {0.3, 1.7, -0.6}) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_hamiltonian(a, n));
      const double e = ground_energy(mpq_class(a), n).get_d();
      CHECK((es.eigenvalues().array() - e).abs().minCoeff() < 1e-9);
    }
  }
}

TEST_CASE("orbit-reduced block agrees with the projected full operator") {
  std::mt19937 rng(4);
  for (int n : {3, 5, 7}) {
    for (Parity par : {Parity::even, Parity::odd}) {
      auto basis = std::make_shared<const SectorBasis>(enumerate_sector(n, par));
      const SectorStructure st(basis);
      const mpq_class a = random_rational(rng);
      const SectorMatrix m(st, a);
      std::vector<mpq_class> c(basis->size());
      for (auto& x : c) x = random_rational(rng);
      // Expand, apply H - E, read off at representatives.
      std::vector<mpq_class> full(std::size_t{1} << n);
      for (std::uint32_t s = 0; s < full.size(); ++s) {
        const SpinState st_s(s, n);
        if ((st_s.up_count() % 2 == 0) != (par == Parity::even)) continue;
        full[s] = c[basis->index_of(st_s)];
      }
      auto hv = apply(a, full, n);
      const mpq_class e = ground_energy(a, n);
      const auto reduced = m.multiply(c);
      for (std::size_t r = 0; r < basis->size(); ++r) {
        const std::uint32_t rep = basis->orbits()[r].representative.bits();
        CHECK(reduced[r] == hv[rep] - e * full[rep]);
      }
      // Modular image of the same block.
      MontgomeryField f(word_primes(1).front());
      const ModMatrix mm = reduced_matrix_mod(st, a, f);
      for (std::size_t r = 0; r < basis->size(); ++r) {
        for (std::size_t col = 0; col < basis->size(); ++col) {
          CHECK(mm.at(r, col) == f.from_rational(m.entry(r, col)));
        }
      }
    }
  }
}

TEST_CASE("full sector block modulo a prime") {
  MontgomeryField f(word_primes(2).back());
  const mpq_class a(2, 3);
  const int n = 5;
  const ModMatrix m = sector_matrix_mod(n, Parity::even, a, f);
  CHECK(m.dim == 16);
  const mpq_class e = ground_energy(a, n);
  std::vector<std::uint32_t> states;
  for (std::uint32_t s = 0; s < 32; ++s) {
    if (SpinState(s, n).up_count() % 2 == 0) states.push_back(s);
  }
  for (std::size_t col = 0; col < states.size(); ++col) {
    std::vector<mpq_class> unit(32);
    unit[states[col]] = 1;
    const auto hv = apply(a, unit, n);
    for (std::size_t r = 0; r < states.size(); ++r) {
      const mpq_class want = hv[states[r]] - (r == col ? e : mpq_class(0));
      CHECK(m.at(r, col) == f.from_rational(want));
    }
  }
}

TEST_CASE("symmetries commute with the dense operator") {
  for (int n : {3, 5, 7, 9}) {
    const std::uint32_t dim = 1u << n;
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim), flip = s, par = s;
    for (std::uint32_t b = 0; b < dim; ++b) {
      const SpinState st(b, n);
      s(shift(st).bits(), b) = 1;
      flip(spin_flip(st).bits(), b) = 1;
      par(b, b) = st.up_count() % 2 ? -1 : 1;
    }
    const Eigen::MatrixXd h = dense_hamiltonian(0.45, n);
    CHECK((h * s - s * h).norm() < 1e-12);
    CHECK((h * flip - flip * h).norm() < 1e-12);
    CHECK((h * par - par * h).norm() < 1e-12);
  }
}

TEST_CASE("at alpha = 1 only the x coupling survives") {
  const CouplingConstants j = couplings(mpq_class(1));
  CHECK(j.jx == 2);
  CHECK(j.jy == 0);
  CHECK(j.jz == 0);
  std::vector<mpq_class> v(8);
  v[0] = 1;
  const auto w = apply(mpq_class(1), v, 3);
  CHECK(w[0] == 0);
  for (std::uint32_t b : {0b011u, 0b110u, 0b101u}) CHECK(w[b] == -1);
  for (std::uint32_t b : {0b001u, 0b010u, 0b100u, 0b111u}) CHECK(w[b] == 0);
}
