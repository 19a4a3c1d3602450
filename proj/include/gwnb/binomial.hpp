#pragma once

#include <gwnb/rational.hpp>

#include <algorithm>
#include <stdexcept>

namespace gwnb {

// binom(n, k) with the two generalized rows the coefficient identities need:
// binom(-1, k) = (-1)^k and binom(-2, k) = (-1)^k (k+1).  k < 0 gives 0.
// Upper indices below -2 never occur in any identity here and are rejected.
inline BigInt binom(long long n, long long k) {
  if (k < 0) return BigInt(0);
  if (n >= 0) {
    if (k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt acc(1);
    for (long long i = 1; i <= k; ++i) {
      acc *= (n - k + i);
      acc /= i;  // exact: acc is binom(n-k+i, i) after each step
    }
    return acc;
  }
  if (n == -1) return neg1pow(k);
  if (n == -2) return neg1pow(k) * (k + 1);
  throw std::domain_error("binom: upper index below -2 is not defined here");
}

inline BigRat binom_q(long long n, long long k) { return BigRat(binom(n, k)); }

}  // namespace gwnb
