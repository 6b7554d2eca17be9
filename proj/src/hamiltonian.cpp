#include "xyz/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace xyz {

namespace {

std::uint32_t rotate_right(std::uint32_t b, int n) { return (b >> 1) | ((b & 1u) << (n - 1)); }

int bond_sum_of(std::uint32_t b, int n) {
  if (n == 1) return 1;
  return n - 2 * std::popcount(b ^ rotate_right(b, n));
}

std::uint32_t pair_mask(int j, int n) { return (1u << j) | (1u << ((j + 1) % n)); }

bool pair_parallel(std::uint32_t b, int j, int n) {
  return ((b >> j) & 1u) == ((b >> ((j + 1) % n)) & 1u);
}

// Diagonal of H - E at representative bond sum, N > 1.
mpq_class shifted_diagonal(const CouplingConstants& j, const mpq_class& energy, int bond_sum,
                           int n) {
  if (n == 1) return mpq_class(-(j.jx + j.jy + j.jz) / 2) - energy;
  return mpq_class(-j.jz * bond_sum / 2) - energy;
}

}  // namespace

CouplingConstants couplings(const mpq_class& alpha) {
  return CouplingConstants{mpq_class(1 + alpha), mpq_class(1 - alpha),
                           mpq_class((alpha * alpha - 1) / 2)};
}

mpq_class ground_energy(const mpq_class& alpha, int n) {
  return mpq_class(-mpq_class(n, 4) * (3 + alpha * alpha));
}

std::vector<mpq_class> apply(const mpq_class& alpha, std::span<const mpq_class> v, int n) {
  require_odd_length(n);
  const std::size_t dim = std::size_t{1} << n;
  if (v.size() != dim) throw std::invalid_argument("apply: vector dimension mismatch");
  const CouplingConstants j = couplings(alpha);
  const mpq_class anti = -(j.jx + j.jy) / 2;  // -1
  const mpq_class par = -(j.jx - j.jy) / 2;   // -alpha
  std::vector<mpq_class> out(dim, 0);
  for (std::uint32_t s = 0; s < dim; ++s) {
    if (v[s] == 0) continue;
    if (n == 1) {
      out[s] += mpq_class(-(j.jx + j.jy + j.jz) / 2) * v[s];
      continue;
    }
    out[s] += mpq_class(-j.jz * bond_sum_of(s, n) / 2) * v[s];
    for (int b = 0; b < n; ++b) {
      std::uint32_t t = s ^ pair_mask(b, n);
      out[t] += (pair_parallel(s, b, n) ? par : anti) * v[s];
    }
  }
  return out;
}

Eigen::MatrixXd dense_xyz_hamiltonian(double jx, double jy, double jz, int n) {
  require_odd_length(n);
  if (n > 13) throw std::length_error("dense_xyz_hamiltonian: limited to n <= 13");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint32_t s = 0; s < dim; ++s) {
    if (n == 1) {
      h(s, s) = -(jx + jy + jz) / 2;
      continue;
    }
    h(s, s) = -jz * bond_sum_of(s, n) / 2.0;
    for (int b = 0; b < n; ++b) {
      std::uint32_t t = s ^ pair_mask(b, n);
      h(t, s) += pair_parallel(s, b, n) ? -(jx - jy) / 2 : -(jx + jy) / 2;
    }
  }
  return h;
}

Eigen::MatrixXd dense_hamiltonian(double alpha, int n) {
  return dense_xyz_hamiltonian(1 + alpha, 1 - alpha, (alpha * alpha - 1) / 2, n);
}

SectorStructure::SectorStructure(std::shared_ptr<const SectorBasis> basis)
    : basis_(std::move(basis)) {
  const int n = basis_->length();
  const auto& orbits = basis_->orbits();
  bond_sum_.resize(orbits.size());
  rows_.resize(orbits.size());
  std::map<std::uint32_t, OrbitCoupling> acc;
  for (std::size_t r = 0; r < orbits.size(); ++r) {
    const std::uint32_t s = orbits[r].representative.bits();
    bond_sum_[r] = bond_sum_of(s, n);
    if (n == 1) continue;
    acc.clear();
    for (int b = 0; b < n; ++b) {
      std::uint32_t t = s ^ pair_mask(b, n);
      auto col = static_cast<std::uint32_t>(basis_->index_of(SpinState(t, n)));
      auto [it, fresh] = acc.try_emplace(col, OrbitCoupling{col, 0, 0});
      if (pair_parallel(s, b, n)) {
        ++it->second.parallel;
      } else {
        ++it->second.antiparallel;
      }
    }
    rows_[r].reserve(acc.size());
    for (const auto& [col, term] : acc) rows_[r].push_back(term);
  }
}

SectorMatrix::SectorMatrix(const SectorStructure& structure, const mpq_class& alpha)
    : basis_(structure.basis_ptr()), alpha_(alpha), rows_(structure.size()) {
  const int n = basis_->length();
  const CouplingConstants j = couplings(alpha);
  const mpq_class energy = ground_energy(alpha, n);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    mpq_class diag = shifted_diagonal(j, energy, structure.bond_sum(r), n);
    bool diag_done = false;
    for (const auto& term : structure.row(r)) {
      mpq_class value = mpq_class(-term.antiparallel) - alpha * term.parallel;
      if (term.col == r) {
        value += diag;
        diag_done = true;
      }
      if (value != 0) rows_[r].push_back(SectorEntry{term.col, value});
    }
    if (!diag_done && diag != 0) {
      auto pos = std::lower_bound(rows_[r].begin(), rows_[r].end(), r,
                                  [](const SectorEntry& e, std::size_t c) { return e.col < c; });
      rows_[r].insert(pos, SectorEntry{static_cast<std::uint32_t>(r), diag});
    }
  }
}

mpq_class SectorMatrix::entry(std::size_t r, std::size_t c) const {
  for (const auto& e : rows_.at(r)) {
    if (e.col == c) return e.value;
  }
  return 0;
}

std::vector<mpq_class> SectorMatrix::multiply(std::span<const mpq_class> v) const {
  if (v.size() != rows_.size()) throw std::invalid_argument("SectorMatrix::multiply: size");
  std::vector<mpq_class> out(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) out[r] += e.value * v[e.col];
  }
  return out;
}

SectorMatrix reduced_matrix(const mpq_class& alpha, std::shared_ptr<const SectorBasis> basis) {
  return SectorMatrix(SectorStructure(std::move(basis)), alpha);
}

ModMatrix reduced_matrix_mod(const SectorStructure& structure, const mpq_class& alpha,
                             const MontgomeryField& field) {
  const int n = structure.basis().length();
  const CouplingConstants j = couplings(alpha);
  const mpq_class energy = ground_energy(alpha, n);
  ModMatrix m;
  m.dim = structure.size();
  m.data.assign(m.dim * m.dim, 0);
  const std::uint64_t a = field.from_rational(alpha);
  const std::uint64_t minus_one = field.neg(field.one());
  std::map<int, std::uint64_t> diag_cache;
  for (std::size_t r = 0; r < m.dim; ++r) {
    const int bs = structure.bond_sum(r);
    auto it = diag_cache.find(bs);
    if (it == diag_cache.end()) {
      it = diag_cache.emplace(bs, field.from_rational(shifted_diagonal(j, energy, bs, n))).first;
    }
    m.at(r, r) = it->second;
    for (const auto& term : structure.row(r)) {
      std::uint64_t v = 0;
      for (int k = 0; k < term.antiparallel; ++k) v = field.add(v, minus_one);
      for (int k = 0; k < term.parallel; ++k) v = field.sub(v, a);
      m.at(r, term.col) = field.add(m.at(r, term.col), v);
    }
  }
  return m;
}

ModMatrix sector_matrix_mod(int n, Parity parity, const mpq_class& alpha,
                            const MontgomeryField& field) {
  require_odd_length(n);
  if (n > 13) throw std::length_error("sector_matrix_mod: limited to n <= 13");
  const std::uint32_t dim_full = std::uint32_t{1} << n;
  const int want = parity == Parity::even ? 0 : 1;
  std::vector<std::int32_t> position(dim_full, -1);
  std::vector<std::uint32_t> states;
  for (std::uint32_t s = 0; s < dim_full; ++s) {
    if (std::popcount(s) % 2 == want) {
      position[s] = static_cast<std::int32_t>(states.size());
      states.push_back(s);
    }
  }
  const CouplingConstants j = couplings(alpha);
  const mpq_class energy = ground_energy(alpha, n);
  const std::uint64_t a = field.from_rational(alpha);
  const std::uint64_t minus_one = field.neg(field.one());
  ModMatrix m;
  m.dim = states.size();
  m.data.assign(m.dim * m.dim, 0);
  for (std::size_t r = 0; r < states.size(); ++r) {
    const std::uint32_t s = states[r];
    m.at(r, r) = field.from_rational(shifted_diagonal(j, energy, bond_sum_of(s, n), n));
    if (n == 1) continue;
    for (int b = 0; b < n; ++b) {
      auto c = static_cast<std::size_t>(position[s ^ pair_mask(b, n)]);
      m.at(r, c) = field.add(m.at(r, c), pair_parallel(s, b, n) ? field.neg(a) : minus_one);
    }
  }
  return m;
}

}  // namespace xyz
