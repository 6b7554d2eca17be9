#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "xyz/hamiltonian.hpp"
#include "xyz/modular.hpp"
#include "xyz/spin_basis.hpp"

namespace xyz {

enum class ModStatus {
  ok,
  no_nullvector,   // nullity 0
  degenerate,      // nullity >= 2
  reference_zero,  // nullity 1 but the reference coordinate vanishes mod p
};

struct ModNullvector {
  ModStatus status = ModStatus::ok;
  std::size_t nullity = 0;
  // Standard residues (not Montgomery form), reference coordinate equal to 1.
  std::vector<std::uint64_t> values;
};

// Nullspace of a square matrix over Z/pZ by forward elimination, pivoting on the
// sparsest candidate row.
ModNullvector nullvector_mod_p(ModMatrix m, const MontgomeryField& field, std::size_t reference);

struct PrimePlan {
  std::vector<std::uint64_t> primes;
  std::size_t used = 0;
};

PrimePlan make_prime_plan(std::size_t budget);

struct RationalSample {
  mpq_class alpha;
  std::vector<mpq_class> components;  // indexed by orbit
  std::size_t reference = 0;
  std::size_t primes_used = 0;
  std::size_t primes_skipped = 0;  // unlucky primes passed over
};

struct SolverOptions {
  std::size_t prime_budget = 64;
  // Consecutive primes with nullity != 1 (or a vanishing reference) before the
  // sample is declared degenerate.
  std::size_t degenerate_after = 3;
};

// True for sample points excluded up front (alpha = 1, where alpha' is singular).
bool is_blacklisted(const mpq_class& alpha);

// Exact nullvector of H(a) - E(a) on the shift-invariant block at one sample,
// normalized so the single-down orbit is 1. The residual is verified exactly.
RationalSample rational_nullvector(const SectorStructure& structure, const mpq_class& alpha,
                                   const SolverOptions& options = {});
RationalSample rational_nullvector(int n, Parity parity, const mpq_class& alpha,
                                   const SolverOptions& options = {});

struct SampleSet {
  std::vector<RationalSample> samples;
  std::vector<mpq_class> rejected;  // points tried and dropped, in order
};

// The first `count` accepted samples from the integer sequence 2, 3, 4, ...
// Points are solved on `jobs` worker threads; the result does not depend on it.
SampleSet collect_samples(const SectorStructure& structure, std::size_t count,
                          const SolverOptions& options = {}, unsigned jobs = 1);

}  // namespace xyz
