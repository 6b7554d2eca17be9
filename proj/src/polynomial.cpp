#include "xyz/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace xyz {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<mpq_class> rem = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  const mpq_class lead_inv = 1 / mpq_class(b.leading());
  std::vector<mpq_class> quot(a.degree() - db + 1, 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    mpq_class f = rem[k + db] * lead_inv;
    if (f == 0) continue;
    quot[k] = f;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * d[j];
  }
  rem.resize(db);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return p * mpq_class(1 / p.leading());
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

RatPolynomial lcm(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return make_monic(divmod(a * b, gcd(a, b)).first);
}

mpz_class content(const IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return std::nullopt;
  std::vector<mpz_class> out;
  out.reserve(q.coefficients().size());
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial moebius_homogenize(const IntPolynomial& p, unsigned weight) {
  if (p.degree() > static_cast<int>(weight)) {
    throw std::invalid_argument("moebius_homogenize: degree exceeds the homogenizing weight");
  }
  const IntPolynomial up = IntPolynomial(std::vector<mpz_class>{3, 1});    // x + 3
  const IntPolynomial down = IntPolynomial(std::vector<mpz_class>{-1, 1});  // x - 1
  std::vector<IntPolynomial> up_pow{IntPolynomial::constant(1)};
  std::vector<IntPolynomial> down_pow{IntPolynomial::constant(1)};
  for (unsigned k = 1; k <= weight; ++k) {
    up_pow.push_back(up_pow.back() * up);
    down_pow.push_back(down_pow.back() * down);
  }
  IntPolynomial out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (p.coefficients()[k] == 0) continue;
    out += (up_pow[k] * down_pow[weight - k]) * p.coefficients()[k];
  }
  return out;
}

bool has_definite_parity(const IntPolynomial& p, int* parity) {
  int seen = -1;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    if (p.coefficients()[k] == 0) continue;
    int par = static_cast<int>(k % 2);
    if (seen == -1) {
      seen = par;
    } else if (seen != par) {
      return false;
    }
  }
  if (parity) *parity = seen;
  return true;
}

RatPolynomial interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  // Divided differences in place.
  std::vector<mpq_class> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      mpq_class dx = xs[i] - xs[i - level];
      if (dx == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  // Horner on the Newton form.
  std::vector<mpq_class> acc;
  for (std::size_t i = n; i-- > 0;) {
    // acc = acc * (x - xs[i]) + dd[i]
    std::vector<mpq_class> next(acc.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * xs[i];
    }
    next[0] += dd[i];
    acc = std::move(next);
  }
  return RatPolynomial(std::move(acc));
}

std::optional<RationalFunction> cauchy_interpolate(const std::vector<mpq_class>& xs,
                                                   const std::vector<mpq_class>& ys,
                                                   int num_degree, int den_degree) {
  RatPolynomial nodes = RatPolynomial::constant(1);
  for (const auto& x : xs) nodes *= RatPolynomial::linear(x);
  RatPolynomial r0 = nodes;
  RatPolynomial r1 = interpolate(xs, ys);
  RatPolynomial t0;
  RatPolynomial t1 = RatPolynomial::constant(1);
  while (r1.degree() > num_degree) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (t1.is_zero() || t1.degree() > den_degree) return std::nullopt;
  RatPolynomial g = gcd(r1, t1);
  RatPolynomial num = divmod(r1, g).first;
  RatPolynomial den = divmod(t1, g).first;
  mpq_class scale = 1 / mpq_class(den.leading());
  num *= scale;
  den *= scale;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mpq_class dv = den(xs[i]);
    if (dv == 0 || num(xs[i]) != ys[i] * dv) return std::nullopt;
  }
  return RationalFunction{std::move(num), std::move(den)};
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const mpz_class& c = p.coefficients()[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace xyz
