#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "xyz/ground_state.hpp"
#include "xyz/polynomial.hpp"
#include "xyz/report.hpp"

namespace xyz {

// S1 = sum of all sector components, S2 = sum of their squares.
IntPolynomial linear_sum(const GroundStateVector& v);
IntPolynomial quadratic_sum(const GroundStateVector& v);

// Same sums taken over the spin-flipped vector in the odd sector.
IntPolynomial linear_sum_flipped(const GroundStateVector& v);
IntPolynomial quadratic_sum_flipped(const GroundStateVector& v);

// m with N = 4m + 1 or N = 4m - 1.
int quarter_index(int n);

// (a + 3)^m S2 = F S1 with F in Z[a]. The quotient, when it exists, is returned
// through `quotient`; the witness records its coefficient signs.
Check check_divisibility(const GroundStateVector& v, std::optional<IntPolynomial>* quotient = nullptr);

// Both Moebius relations between S1 and the all-minus component under
// a -> (a + 3)/(a - 1), cross-multiplied to identities in Z[a].
Check check_moebius_s1(const GroundStateVector& v);

// (a - 1)^{2D} S2((a + 3)/(a - 1)) = 2^{2D} S2(a).
Check check_s2_covariance(const GroundStateVector& v);

// (a + 1) * [sum over mu_1 != mu_2] = 2 * [sum over mu_1 = mu_2].
Check antiferro_ratio(const GroundStateVector& v);

// Sums over the odd sector agree with the even sector; deg S2 = 2D, monic.
Check check_sum_consistency(const GroundStateVector& v);

// Numeric checks of the y-rotated vector Phi = R^y(pi/2) Psi at a fixed list of
// rational points; n <= 11. `tolerance` is relative.
inline constexpr double kRotationTolerance = 1e-9;
Check check_rotation_sum_identities(const GroundStateVector& v, double tolerance = kRotationTolerance);

// R^z H(a) = H(-a) R^z, R^x H(a) = ((1+a)^2/4) H((3-a)/(1+a)) R^x and
// R^y H(a) = ((a-1)^2/4) H((a+3)/(a-1)) R^y as dense matrices; n <= 7.
Check check_rotation_intertwiners(int n, double tolerance = 1e-12);

struct SumRuleReport {
  int n = 0;
  IntPolynomial s1;
  IntPolynomial s2;
  std::optional<IntPolynomial> f_quotient;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

SumRuleReport sum_rule_report(const GroundStateVector& v, bool include_numeric = true);
json to_json(const SumRuleReport& r);

}  // namespace xyz
