#include "xyz/sum_rules.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "xyz/hamiltonian.hpp"

namespace xyz {

namespace {

IntPolynomial weighted_sum(const GroundStateVector& v, bool squared) {
  IntPolynomial acc;
  const auto& orbits = v.basis->orbits();
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    IntPolynomial term = squared ? v.entries[i] * v.entries[i] : v.entries[i];
    acc += term * mpz_class(orbits[i].size);
  }
  return acc;
}

IntPolynomial flipped_sum(const GroundStateVector& v, bool squared) {
  const int n = v.length();
  IntPolynomial acc;
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
    SpinState s(b, n);
    if (s.up_count() % 2 == 0) continue;
    const IntPolynomial& e = v.entries[v.basis->index_of(spin_flip(s))];
    acc += squared ? e * e : e;
  }
  return acc;
}

mpz_class power_of_two(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

mpq_class moebius(const mpq_class& a) { return mpq_class((a + 3) / (a - 1)); }

// Largest |entry| of a - b relative to the largest |entry| of b.
double matrix_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

IntPolynomial linear_sum(const GroundStateVector& v) { return weighted_sum(v, false); }
IntPolynomial quadratic_sum(const GroundStateVector& v) { return weighted_sum(v, true); }
IntPolynomial linear_sum_flipped(const GroundStateVector& v) { return flipped_sum(v, false); }
IntPolynomial quadratic_sum_flipped(const GroundStateVector& v) { return flipped_sum(v, true); }

int quarter_index(int n) {
  require_odd_length(n);
  return n % 4 == 1 ? (n - 1) / 4 : (n + 1) / 4;
}

Check check_divisibility(const GroundStateVector& v, std::optional<IntPolynomial>* quotient) {
  Check c{"s2_over_s1_divisibility"};
  const int m = quarter_index(v.length());
  const IntPolynomial s1 = linear_sum(v);
  const IntPolynomial lifted =
      IntPolynomial(std::vector<mpz_class>{3, 1}).pow(static_cast<unsigned>(m)) * quadratic_sum(v);
  std::optional<IntPolynomial> f = exact_divide(lifted, s1);
  c.witness = {{"m", m}};
  if (f) {
    int negative = 0, zero = 0;
    for (const auto& x : f->coefficients()) {
      if (x < 0) ++negative;
      if (x == 0) ++zero;
    }
    c.passed = true;
    c.witness["F"] = coefficients_json(*f);
    c.witness["F_negative_coefficients"] = negative;
    c.witness["F_zero_coefficients"] = zero;
  } else {
    auto [q, r] = divmod(to_rational(lifted), to_rational(s1));
    c.passed = false;
    c.witness["remainder_is_zero"] = r.is_zero();
    c.witness["reason"] = r.is_zero() ? "quotient has non-integer coefficients" : "nonzero remainder";
  }
  if (quotient) *quotient = f;
  return c;
}

Check check_moebius_s1(const GroundStateVector& v) {
  Check c{"moebius_s1"};
  const int n = v.length();
  const int d = v.degree();
  const IntPolynomial s1 = linear_sum(v);
  const unsigned e1 = static_cast<unsigned>((n - 3) * (n - 1) / 8);
  const unsigned e2 = static_cast<unsigned>((n - 1) * (n + 5) / 8);
  // 2^{(N-3)(N-1)/8} S1(a) = (a - 1)^D Psi(a')
  const bool first = s1 * power_of_two(e1) == moebius_homogenize(v.all_minus(), d);
  // (a - 1)^D S1(a') = 2^{(N-1)(N+5)/8} Psi(a)
  const bool s1_fits = s1.degree() <= d;
  const bool second = s1_fits && moebius_homogenize(s1, d) == v.all_minus() * power_of_two(e2);
  c.passed = first && second;
  c.witness = {{"first_identity", first},
               {"second_identity", second},
               {"exponents", {e1, e2}},
               {"s1_degree", s1.degree()},
               {"D", d}};
  return c;
}

Check check_s2_covariance(const GroundStateVector& v) {
  Check c{"s2_covariance"};
  const int d = v.degree();
  const IntPolynomial s2 = quadratic_sum(v);
  const bool fits = s2.degree() <= 2 * d;
  c.passed = fits && moebius_homogenize(s2, 2 * d) == s2 * power_of_two(2 * d);
  c.witness = {{"s2_degree", s2.degree()}, {"weight", 2 * d}};
  return c;
}

Check antiferro_ratio(const GroundStateVector& v) {
  Check c{"antiferro_ratio"};
  const int n = v.length();
  if (n == 1) {
    c.passed = true;
    c.witness = {{"not_applicable", "a single site has no pair of distinct neighbours"}};
    return c;
  }
  IntPolynomial anti, par;
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) {
    SpinState s(b, n);
    if (s.up_count() % 2 != 0) continue;
    const IntPolynomial& e = v.entries[v.basis->index_of(s)];
    if (s.spin(1) == s.spin(2)) {
      par += e;
    } else {
      anti += e;
    }
  }
  const IntPolynomial lhs = anti * IntPolynomial(std::vector<mpz_class>{1, 1});
  const IntPolynomial rhs = par * mpz_class(2);
  c.passed = !anti.is_zero() && lhs == rhs;
  c.witness = {{"antiparallel_sum", coefficients_json(anti)}, {"parallel_sum", coefficients_json(par)}};
  return c;
}

Check check_sum_consistency(const GroundStateVector& v) {
  Check c{"sum_consistency"};
  const IntPolynomial s1 = linear_sum(v);
  const IntPolynomial s2 = quadratic_sum(v);
  const bool odd_s1 = linear_sum_flipped(v) == s1;
  const bool odd_s2 = quadratic_sum_flipped(v) == s2;
  const bool top = s2.degree() == 2 * v.degree() && s2.leading() == 1;
  c.passed = odd_s1 && odd_s2 && top;
  c.witness = {{"odd_sector_s1_equal", odd_s1},
               {"odd_sector_s2_equal", odd_s2},
               {"s2_degree", s2.degree()},
               {"s2_leading", s2.is_zero() ? "0" : s2.leading().get_str()}};
  return c;
}

Check check_rotation_sum_identities(const GroundStateVector& v, double tolerance) {
  Check c{"rotation_sum_identities"};
  const int n = v.length();
  if (n > 11) {
    c.passed = true;
    c.witness = {{"skipped", "dense rotation limited to N <= 11"}};
    return c;
  }
  const IntPolynomial s1 = linear_sum(v);
  const double root = std::sqrt(std::ldexp(1.0, n));
  const std::vector<mpq_class> candidates{mpq_class(2), mpq_class(3), mpq_class(1, 2), mpq_class(-1, 3),
                                          mpq_class(5, 2)};
  json points = json::array();
  bool ok = true;
  double worst = 0;
  for (const auto& a : candidates) {
    if (a == 1) continue;
    const mpq_class ap = moebius(a);
    const mpq_class top = v.all_minus()(a);
    const mpq_class top_p = v.all_minus()(ap);
    if (top == 0 || top_p == 0) continue;

    std::vector<mpq_class> psi_q = evaluate(v, a);
    std::vector<std::complex<double>> psi(psi_q.size());
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = psi_q[i].get_d();
    std::vector<std::complex<double>> phi = apply_rotation(Axis::y, n, psi);

    std::complex<double> phi_sum = 0;
    double psi_sum = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      phi_sum += phi[i];
      psi_sum += psi[i].real();
    }
    const double g1 = std::abs(phi_sum - root * top.get_d()) / std::max(1.0, root * std::abs(top.get_d()));
    const std::size_t all_up = (std::size_t{1} << n) - 1;
    const double g2 = std::abs(psi_sum - root * phi[all_up]) / std::max(1.0, std::abs(psi_sum));

    // Phi = S1(a)/sqrt(2^N) [Psi(a')/Psi_-(a') + Psibar(a')/Psibar_+(a')], Psibar_+ = Psi_-.
    std::vector<mpq_class> even_p = evaluate(v, ap, Parity::even);
    std::vector<mpq_class> odd_p = evaluate(v, ap, Parity::odd);
    const double scale = s1(a).get_d() / root;
    double diff = 0, norm = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      const double want = scale * mpq_class((even_p[i] + odd_p[i]) / top_p).get_d();
      diff = std::max(diff, std::abs(phi[i] - want));
      norm = std::max(norm, std::abs(phi[i]));
    }
    const double g3 = diff / std::max(norm, 1e-300);

    const mpq_class product = mpq_class(s1(a) / top) * mpq_class(s1(ap) / top_p);
    const bool product_ok = product == mpq_class(power_of_two(static_cast<unsigned>(n - 1)));

    worst = std::max({worst, g1, g2, g3});
    const bool here = g1 < tolerance && g2 < tolerance && g3 < tolerance && product_ok;
    ok = ok && here;
    points.push_back({{"alpha", a.get_str()},
                      {"alpha_prime", ap.get_str()},
                      {"sum_phi_gap", g1},
                      {"sum_psi_gap", g2},
                      {"phi_combination_gap", g3},
                      {"s1_product", product.get_str()}});
  }
  c.passed = ok && !points.empty();
  c.witness = {{"tolerance", tolerance}, {"max_gap", worst}, {"points", points}};
  return c;
}

Check check_rotation_intertwiners(int n, double tolerance) {
  Check c{"rotation_intertwiners"};
  require_odd_length(n);
  if (n > 7) throw std::length_error("check_rotation_intertwiners: limited to n <= 7");
  const Eigen::MatrixXcd rx = rotation_matrix(Axis::x, n);
  const Eigen::MatrixXcd ry = rotation_matrix(Axis::y, n);
  const Eigen::MatrixXcd rz = rotation_matrix(Axis::z, n);
  auto h = [n](double a) -> Eigen::MatrixXcd { return dense_hamiltonian(a, n).cast<std::complex<double>>(); };
  double worst = 0;
  for (double a : {0.3, 2.0, -0.7, 4.5}) {
    worst = std::max(worst, matrix_gap(rz * h(a), h(-a) * rz));
    worst = std::max(worst, matrix_gap(rx * h(a), (1 + a) * (1 + a) / 4 * h((3 - a) / (1 + a)) * rx));
    worst = std::max(worst, matrix_gap(ry * h(a), (a - 1) * (a - 1) / 4 * h((a + 3) / (a - 1)) * ry));
  }
  c.passed = worst < tolerance;
  c.witness = {{"n", n}, {"tolerance", tolerance}, {"max_gap", worst}};
  return c;
}

SumRuleReport sum_rule_report(const GroundStateVector& v, bool include_numeric) {
  SumRuleReport r;
  r.n = v.length();
  r.s1 = linear_sum(v);
  r.s2 = quadratic_sum(v);
  r.checks.push_back(check_divisibility(v, &r.f_quotient));
  r.checks.push_back(check_moebius_s1(v));
  r.checks.push_back(check_s2_covariance(v));
  r.checks.push_back(antiferro_ratio(v));
  r.checks.push_back(check_sum_consistency(v));
  if (include_numeric) r.checks.push_back(check_rotation_sum_identities(v));
  return r;
}

json to_json(const SumRuleReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json doc{{"n", r.n},
           {"s1", coefficients_json(r.s1)},
           {"s2", coefficients_json(r.s2)},
           {"f_quotient", r.f_quotient ? coefficients_json(*r.f_quotient) : json(nullptr)},
           {"checks", checks},
           {"passed", r.passed()}};
  return doc;
}

}  // namespace xyz
