#pragma once

#include <gmpxx.h>

namespace xyz {

// Number of vertically symmetric alternating-sign matrices of odd order 2m+1:
// 2^{-m} prod_{i<m} (6i+4)!(2i+1)! / ((4i+3)!(4i+2)!).
mpz_class vsasm_count(int order);

// Number of cyclically symmetric transpose complement plane partitions in a
// (2m)^3 box: prod_{i<m} (3i+1)(6i)!(2i)! / ((4i+1)!(4i)!).
mpz_class cstcpp_count(int order);

}  // namespace xyz
