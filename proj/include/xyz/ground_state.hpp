#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "xyz/polynomial.hpp"
#include "xyz/report.hpp"
#include "xyz/solver.hpp"
#include "xyz/spin_basis.hpp"

namespace xyz {

inline constexpr const char* kVectorSchema = "xyz-ground-state/1";

// D_N = (N^2 - 1)/8.
int degree_bound(int n);

// Components of the special eigenvector in the even sector, one integer
// polynomial in alpha per cyclic orbit (orbit order of SectorBasis).
struct GroundStateVector {
  std::shared_ptr<const SectorBasis> basis;
  std::vector<IntPolynomial> entries;

  int length() const { return basis->length(); }
  Parity parity() const { return basis->parity(); }
  int degree() const { return degree_bound(length()); }
  const IntPolynomial& all_minus() const { return entries.front(); }
  const IntPolynomial& component(SpinState s) const { return entries[basis->index_of(s)]; }
};

struct ReconstructionInfo {
  std::size_t interpolation_points = 0;
  std::size_t held_out_points = 0;
  bool held_out_passed = false;
  std::size_t cauchy_solves = 0;  // coordinates that needed a full rational fit
};

// Rational-function fit of every coordinate ratio, common denominator, integer
// normalization with content 1 and positive all-minus leading coefficient.
// Needs at least 2 D_N + 3 samples at distinct points; everything after the
// first 2 D_N + 2 is held out for validation.
GroundStateVector reconstruct(const std::vector<RationalSample>& samples,
                              std::shared_ptr<const SectorBasis> basis,
                              ReconstructionInfo* info = nullptr);

// Samples, reconstruction and validation in one call.
struct ComputeOptions {
  SolverOptions solver;
  std::size_t extra_samples = 0;  // beyond the 2 D_N + 3 minimum
  unsigned jobs = 1;
};

struct ComputeResult {
  GroundStateVector vector;
  SampleSet samples;
  ReconstructionInfo info;
};

ComputeResult compute_ground_state(int n, const ComputeOptions& options = {});

// Orbit values at alpha.
std::vector<mpq_class> evaluate_orbits(const GroundStateVector& v, const mpq_class& alpha);

// Full 2^N vector at alpha: Psi on the even sector, or Psi-bar (the spin-flipped
// vector, odd sector) when `parity` is odd. Entries outside the sector are 0.
std::vector<mpq_class> evaluate(const GroundStateVector& v, const mpq_class& alpha,
                                Parity parity = Parity::even);

Check verify_degree(const GroundStateVector& v);
Check verify_positivity(const GroundStateVector& v);
Check verify_normalization(const GroundStateVector& v);
Check verify_parity_rule(const GroundStateVector& v);
Check verify_asm_coefficients(const GroundStateVector& v);
// (H - E) Psi = 0 exactly at D_N + 3 non-integer rational points.
Check verify_eigenidentity(const GroundStateVector& v);
// Expanded vector fixed by the shift, plus nullity one of the unreduced sector
// block at a sample point; N <= 9.
Check verify_shift_invariance(const GroundStateVector& v);

// Canonical document: schema, n, parity, degree_bound, entries with state string,
// orbit size and ascending decimal coefficients. `provenance` is stored verbatim.
json to_json(const GroundStateVector& v, const json& provenance = json::object());
GroundStateVector ground_state_from_json(const json& doc);

}  // namespace xyz
