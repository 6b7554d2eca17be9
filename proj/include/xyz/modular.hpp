#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace xyz {

// Arithmetic in Z/pZ for an odd prime p < 2^62, values kept in Montgomery form.
class MontgomeryField {
 public:
  explicit MontgomeryField(std::uint64_t p);

  std::uint64_t prime() const { return p_; }

  std::uint64_t to_mont(std::uint64_t x) const { return mul(x % p_, r2_); }
  std::uint64_t from_mont(std::uint64_t x) const { return reduce(x); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t one() const { return one_; }

  // Inverse of a Montgomery-form element; a must be nonzero.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // Image of a rational number a/b in Montgomery form. The denominator must be
  // a unit mod p.
  std::uint64_t from_rational(const mpq_class& q) const;

 private:
  std::uint64_t reduce(unsigned __int128 t) const {
    std::uint64_t m = static_cast<std::uint64_t>(t) * pinv_neg_;
    unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    std::uint64_t r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_;
  std::uint64_t pinv_neg_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;        // 2^128 mod p
  std::uint64_t one_;       // 2^64 mod p
};

std::uint64_t mod_of(const mpz_class& z, std::uint64_t p);

// Deterministic list of the `count` largest primes below 2^62, descending.
std::vector<std::uint64_t> word_primes(std::size_t count);

// Incremental Chinese remaindering of a vector of residues.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t size) : residues_(size) {}

  void add(std::uint64_t p, const std::vector<std::uint64_t>& images);

  const mpz_class& modulus() const { return modulus_; }
  const std::vector<mpz_class>& residues() const { return residues_; }
  std::size_t primes_used() const { return primes_; }

 private:
  std::vector<mpz_class> residues_;
  mpz_class modulus_ = 1;
  std::size_t primes_ = 0;
};

// Balanced rational reconstruction: the unique r/s with |r|, 0 < s <= floor(sqrt(M/2))
// and r = s*u mod M, when it exists.
std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& modulus);

}  // namespace xyz
