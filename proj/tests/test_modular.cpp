#include <doctest.h>

#include <random>

#include "xyz/modular.hpp"

using namespace xyz;

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

}  // namespace

TEST_CASE("word primes are distinct, descending and prime") {
  const auto primes = word_primes(40);
  REQUIRE(primes.size() == 40);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    CHECK(primes[i] < (std::uint64_t{1} << 62));
    CHECK(mpz_probab_prime_p(mpz_class(std::to_string(primes[i])).get_mpz_t(), 40) > 0);
    if (i > 0) CHECK(primes[i] < primes[i - 1]);
  }
  CHECK(word_primes(5) == std::vector<std::uint64_t>(primes.begin(), primes.begin() + 5));
}

TEST_CASE("montgomery arithmetic matches 128-bit reference") {
  std::mt19937_64 rng(20240611);
  for (std::uint64_t p : word_primes(3)) {
    MontgomeryField f(p);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::uint64_t a = rng() % p, b = rng() % p;
      const std::uint64_t ma = f.to_mont(a), mb = f.to_mont(b);
      CHECK(f.from_mont(ma) == a);
      CHECK(f.from_mont(f.mul(ma, mb)) == mulmod(a, b, p));
      CHECK(f.from_mont(f.add(ma, mb)) == (a + b) % p);
      CHECK(f.from_mont(f.sub(ma, mb)) == (a + p - b) % p);
      CHECK(f.add(ma, f.neg(ma)) == 0);
      if (a != 0) CHECK(f.mul(ma, f.inv(ma)) == f.one());
    }
    CHECK(f.from_mont(f.pow(f.to_mont(3), p - 1)) == 1);
  }
  MontgomeryField small(101);
  CHECK(small.from_mont(small.mul(small.to_mont(57), small.to_mont(88))) == 57 * 88 % 101);
  CHECK_THROWS_AS(MontgomeryField(100), std::invalid_argument);
  CHECK_THROWS_AS(small.inv(0), std::domain_error);
}

TEST_CASE("rational images and integer reduction") {
  MontgomeryField f(word_primes(1).front());
  const mpq_class q(-7, 12);
  const std::uint64_t img = f.from_rational(q);
  CHECK(f.mul(img, f.to_mont(12)) == f.neg(f.to_mont(7)));
  MontgomeryField g(13);
  CHECK_THROWS_AS(g.from_rational(mpq_class(1, 26)), std::domain_error);
  CHECK(mod_of(mpz_class(-1), 13) == 12);
  CHECK(mod_of(mpz_class("123456789012345678901234567890"), 1000003) ==
        mpz_class(mpz_class("123456789012345678901234567890") % 1000003).get_ui());
}

TEST_CASE("crt and rational reconstruction round trip random fractions") {
  std::mt19937_64 rng(99);
  const auto primes = word_primes(6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<mpq_class> values;
    for (int i = 0; i < 4; ++i) {
      mpz_class num(std::to_string(rng() % 1000000007));
      mpz_class den(std::to_string(1 + rng() % 999983));
      if (rng() % 2) num = -num;
      values.emplace_back(num, den);
      values.back().canonicalize();
    }
    CrtAccumulator crt(values.size());
    for (std::uint64_t p : primes) {
      MontgomeryField f(p);
      std::vector<std::uint64_t> images;
      for (const auto& v : values) images.push_back(f.from_mont(f.from_rational(v)));
      crt.add(p, images);
    }
    CHECK(crt.primes_used() == primes.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      CHECK(crt.residues()[i] >= 0);
      CHECK(crt.residues()[i] < crt.modulus());
      auto r = rational_reconstruct(crt.residues()[i], crt.modulus());
      REQUIRE(r.has_value());
      CHECK(*r == values[i]);
    }
  }
}

TEST_CASE("reconstruction refuses residues without a small fraction") {
  const mpz_class m = 1000003;
  // 1/2 reconstructs; a residue whose only small preimages are too large does not.
  CHECK(rational_reconstruct(mpz_class(500002), m) == mpq_class(1, 2));
  int failures = 0;
  for (int u = 1; u < 2000; ++u) {
    if (!rational_reconstruct(mpz_class(u * 517), m)) ++failures;
  }
  CHECK(failures > 0);
  CrtAccumulator crt(1);
  crt.add(13, {5});
  CHECK_THROWS_AS(crt.add(13, {5}), std::invalid_argument);
  CHECK_THROWS_AS(crt.add(17, {1, 2}), std::invalid_argument);
}
