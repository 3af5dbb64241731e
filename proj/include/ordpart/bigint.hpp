#ifndef ORDPART_BIGINT_HPP
#define ORDPART_BIGINT_HPP

#include <gmpxx.h>

namespace ordpart {

// All counting is exact; table entries overflow 64 bits quickly.
using BigInt = mpz_class;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// multinomial(total; parts) with sum(parts) == total
BigInt multinomial(int total, const std::vector<int>& parts);

}  // namespace ordpart

#endif
