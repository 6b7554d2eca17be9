#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "xyz/modular.hpp"
#include "xyz/spin_basis.hpp"

namespace xyz {

// H = -1/2 sum_j [Jx s^x_j s^x_{j+1} + Jy s^y_j s^y_{j+1} + Jz s^z_j s^z_{j+1}], periodic.
struct CouplingConstants {
  mpq_class jx, jy, jz;
};

// Combinatorial-point couplings (1 + a, 1 - a, (a^2 - 1)/2).
CouplingConstants couplings(const mpq_class& alpha);

// E(a) = -(N/4)(3 + a^2).
mpq_class ground_energy(const mpq_class& alpha, int n);

// H(alpha) v on the full 2^N basis (index = SpinState::bits()).
std::vector<mpq_class> apply(const mpq_class& alpha, std::span<const mpq_class> v, int n);

// Dense real matrices for numeric work; n <= 13.
Eigen::MatrixXd dense_xyz_hamiltonian(double jx, double jy, double jz, int n);
Eigen::MatrixXd dense_hamiltonian(double alpha, int n);

// Coupling pattern of H restricted to shift-invariant vectors of one sector,
// independent of alpha. Row r is the representative of orbit r; each term
// counts the pair flips of that representative that land in orbit `col`.
struct OrbitCoupling {
  std::uint32_t col;
  std::uint16_t antiparallel;  // flips of an antiparallel pair, amplitude -1
  std::uint16_t parallel;      // flips of a parallel pair, amplitude -alpha
};

class SectorStructure {
 public:
  explicit SectorStructure(std::shared_ptr<const SectorBasis> basis);

  const SectorBasis& basis() const { return *basis_; }
  std::shared_ptr<const SectorBasis> basis_ptr() const { return basis_; }
  std::size_t size() const { return basis_->size(); }
  // sum_j mu_j mu_{j+1} of representative r.
  int bond_sum(std::size_t r) const { return bond_sum_[r]; }
  const std::vector<OrbitCoupling>& row(std::size_t r) const { return rows_[r]; }

 private:
  std::shared_ptr<const SectorBasis> basis_;
  std::vector<int> bond_sum_;
  std::vector<std::vector<OrbitCoupling>> rows_;
};

// Block of H(alpha) - E(alpha) on orbit-symmetrized vectors, exact.
// For coefficients c_o of sum_o c_o (sum of states in orbit o), row r of the
// product is the component of (H - E) v at the representative of orbit r.
struct SectorEntry {
  std::uint32_t col;
  mpq_class value;
};

class SectorMatrix {
 public:
  SectorMatrix(const SectorStructure& structure, const mpq_class& alpha);

  const SectorBasis& basis() const { return *basis_; }
  std::shared_ptr<const SectorBasis> basis_ptr() const { return basis_; }
  const mpq_class& alpha() const { return alpha_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<SectorEntry>& row(std::size_t r) const { return rows_[r]; }
  mpq_class entry(std::size_t r, std::size_t c) const;

  std::vector<mpq_class> multiply(std::span<const mpq_class> v) const;

 private:
  std::shared_ptr<const SectorBasis> basis_;
  mpq_class alpha_;
  std::vector<std::vector<SectorEntry>> rows_;
};

SectorMatrix reduced_matrix(const mpq_class& alpha, std::shared_ptr<const SectorBasis> basis);

// The same block reduced modulo a prime, dense, entries in Montgomery form.
struct ModMatrix {
  std::size_t dim = 0;
  std::vector<std::uint64_t> data;  // row-major dim x dim
  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

ModMatrix reduced_matrix_mod(const SectorStructure& structure, const mpq_class& alpha,
                             const MontgomeryField& field);

// H(a) - E(a) on every state of one parity sector (no orbit reduction), states in
// ascending bit order; n <= 13.
ModMatrix sector_matrix_mod(int n, Parity parity, const mpq_class& alpha,
                            const MontgomeryField& field);

}  // namespace xyz
