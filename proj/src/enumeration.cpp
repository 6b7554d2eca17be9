#include "xyz/enumeration.hpp"

#include <stdexcept>
#include <string>

#include "xyz/errors.hpp"

namespace xyz {

namespace {

mpq_class factorial_ratio(unsigned long num_a, unsigned long num_b, unsigned long den_a,
                          unsigned long den_b) {
  mpz_class a, b, c, d;
  mpz_fac_ui(a.get_mpz_t(), num_a);
  mpz_fac_ui(b.get_mpz_t(), num_b);
  mpz_fac_ui(c.get_mpz_t(), den_a);
  mpz_fac_ui(d.get_mpz_t(), den_b);
  mpq_class r(a * b, c * d);
  r.canonicalize();
  return r;
}

mpz_class require_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) {
    throw Error(std::string(what) + ": product formula did not yield an integer");
  }
  return q.get_num();
}

}  // namespace

mpz_class vsasm_count(int order) {
  if (order < 1 || order % 2 == 0) {
    throw std::invalid_argument("vsasm_count: order must be a positive odd integer");
  }
  const int m = (order - 1) / 2;
  mpq_class product = 1;
  for (int i = 0; i < m; ++i) {
    product *= factorial_ratio(6 * i + 4, 2 * i + 1, 4 * i + 3, 4 * i + 2);
    product /= 2;
  }
  return require_integer(product, "vsasm_count");
}

mpz_class cstcpp_count(int order) {
  if (order < 2 || order % 2 != 0) {
    throw std::invalid_argument("cstcpp_count: order must be a positive even integer");
  }
  const int m = order / 2;
  mpq_class product = 1;
  for (int i = 0; i < m; ++i) {
    product *= factorial_ratio(6 * i, 2 * i, 4 * i + 1, 4 * i);
    product *= 3 * i + 1;
  }
  return require_integer(product, "cstcpp_count");
}

}  // namespace xyz
