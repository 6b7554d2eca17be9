#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace xyz {

// Dense univariate polynomial, coefficient index = power of the variable.
// The highest stored coefficient is nonzero unless the polynomial is zero,
// in which case no coefficients are stored.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Coeff& c) { return Polynomial(std::vector<Coeff>{c}); }
  static Polynomial monomial(const Coeff& c, std::size_t power) {
    std::vector<Coeff> v(power + 1, Coeff(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }
  // (x - root)
  static Polynomial linear(const Coeff& root) {
    return Polynomial(std::vector<Coeff>{Coeff(-root), Coeff(1)});
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
  const Coeff& leading() const { return c_.back(); }

  mpq_class operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += mpq_class(*it);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(Coeff(1));
    for (unsigned i = 0; i < e; ++i) result *= *this;
    return result;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

RatPolynomial to_rational(const IntPolynomial& p);

// Quotient and remainder in Q[x]; divisor must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial make_monic(const RatPolynomial& p);
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);  // monic, or zero
RatPolynomial lcm(const RatPolynomial& a, const RatPolynomial& b);  // monic

// Greatest common divisor of all coefficients (nonnegative; 0 for the zero polynomial).
mpz_class content(const IntPolynomial& p);

// Quotient a/b when b divides a in Z[x] (quotient with integer coefficients).
std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// Substitution x -> (x + 3)/(x - 1) with the denominator cleared by (x - 1)^weight:
// sum_k p_k (x + 3)^k (x - 1)^(weight - k). Requires deg p <= weight.
IntPolynomial moebius_homogenize(const IntPolynomial& p, unsigned weight);

// True when every nonzero coefficient sits at a power of one parity; reports that
// parity (0 even, 1 odd) through `parity`. The zero polynomial counts as both.
bool has_definite_parity(const IntPolynomial& p, int* parity = nullptr);

// Newton-form interpolation through distinct nodes.
RatPolynomial interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

// Rational function r/t with deg r <= num_degree and deg t <= den_degree matching
// every (x, y) pair, found by the extended Euclidean algorithm on the node
// polynomial and the interpolant. The result has t monic and gcd(r, t) = 1.
// Empty when no such function exists.
struct RationalFunction {
  RatPolynomial numerator;
  RatPolynomial denominator;
};
std::optional<RationalFunction> cauchy_interpolate(const std::vector<mpq_class>& xs,
                                                   const std::vector<mpq_class>& ys,
                                                   int num_degree, int den_degree);

// "3 + 5a^2" style rendering in ascending powers.
std::string to_string(const IntPolynomial& p, const std::string& var = "a");

}  // namespace xyz
