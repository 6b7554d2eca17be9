#include "xyz/modular.hpp"

#include <stdexcept>

namespace xyz {

MontgomeryField::MontgomeryField(std::uint64_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("MontgomeryField: modulus must be an odd prime below 2^62");
  }
  std::uint64_t inv = p;  // correct to 3 bits for odd p
  for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
  pinv_neg_ = ~inv + 1;
  unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
  one_ = static_cast<std::uint64_t>(r);
  r2_ = static_cast<std::uint64_t>((r * r) % p);
}

std::uint64_t MontgomeryField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = one_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t MontgomeryField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("MontgomeryField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

std::uint64_t MontgomeryField::from_rational(const mpq_class& q) const {
  std::uint64_t den = mod_of(q.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator vanishes modulo the prime");
  return mul(to_mont(mod_of(q.get_num(), p_)), inv(to_mont(den)));
}

std::uint64_t mod_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::vector<std::uint64_t> word_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  std::uint64_t candidate = (std::uint64_t{1} << 62) - 1;
  mpz_class z;
  while (primes.size() < count) {
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(candidate), 0, 0, &candidate);
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) > 0) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

void CrtAccumulator::add(std::uint64_t p, const std::vector<std::uint64_t>& images) {
  if (images.size() != residues_.size()) {
    throw std::invalid_argument("CrtAccumulator::add: image size mismatch");
  }
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (primes_ == 0) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      mpz_import(residues_[i].get_mpz_t(), 1, 1, sizeof(p), 0, 0, &images[i]);
    }
    modulus_ = pz;
    primes_ = 1;
    return;
  }
  // x = r + M * ((a - r) * M^{-1} mod p)
  mpz_class minv;
  if (mpz_invert(minv.get_mpz_t(), modulus_.get_mpz_t(), pz.get_mpz_t()) == 0) {
    throw std::invalid_argument("CrtAccumulator::add: prime reused");
  }
  mpz_class a, t;
  for (std::size_t i = 0; i < images.size(); ++i) {
    mpz_import(a.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &images[i]);
    t = a - residues_[i];
    t *= minv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
    residues_[i] += modulus_ * t;
  }
  modulus_ *= pz;
  ++primes_;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& modulus) {
  mpz_class bound;
  mpz_class half = modulus / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());

  mpz_class r0 = modulus, r1;
  mpz_fdiv_r(r1.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
  mpz_class t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class result(r1, t1);
  result.canonicalize();
  return result;
}

}  // namespace xyz
