#pragma once

#include <gwnb/binomial.hpp>
#include <gwnb/rational.hpp>

#include <optional>
#include <stdexcept>

namespace gwnb {

// Closed forms and summation routes for the power-series coefficients of the
// transformed gap polynomial
//
//   gt(u) = sum_{k=1}^{r-1} sum_{n=0}^{2r-3-k} cgt(r,k,n) u^k zeta^n.
//
// Three independent routes compute the same table: these closed forms, the
// m-summations below, and polynomial expansion of the gap numerator (see
// verify.hpp).  All arithmetic is exact.

namespace detail {
inline void need(bool ok, const char* msg) {
  if (!ok) throw std::out_of_range(msg);
}
}  // namespace detail

// branch formulas, evaluable slightly beyond their nominal ranges so the
// difference/zero checks can probe them
inline BigRat cgt_case_a(int r, int k, int n) {
  (void)r;
  return BigRat(k) * binom_q(n + k + 2, k + 2);
}

inline BigRat cgt_case_b(int r, int k, int n) {
  const long long num = static_cast<long long>(2 * r - k) * (k + 1) - static_cast<long long>(n + 1) * (k + 2);
  return binom_q(r, k + 1) * BigRat(num, k + 2);
}

inline BigRat cgt_case_c_extra(int r, int k, int n) {
  const long long num = static_cast<long long>(2 * r - k) * (k + 1) - static_cast<long long>(n + 1) * k;
  return binom_q(k + (n - r) + 1, k + 1) * BigRat(num, k + 2);
}

// cgt(r,k,n); zero outside 1 <= k <= r-1, 0 <= n <= 2r-3-k
inline BigRat cgt_closed(int r, int k, int n) {
  detail::need(r >= 2, "cgt_closed: r >= 2 required");
  if (k < 1 || k > r - 1 || n < 0 || n > 2 * r - 3 - k) return BigRat(0);
  if (n <= r - 1 - k) return cgt_case_a(r, k, n);
  if (n <= r - 1) return cgt_case_b(r, k, n);
  return cgt_case_b(r, k, n) + cgt_case_c_extra(r, k, n);
}

// special values stated separately: n = r and the top coefficient
inline BigRat cgt_at_n_r(int r, int k) {
  return binom_q(r, k + 1) * BigRat(static_cast<long long>(r - k - 2) * k - 2, k + 2) + BigRat(r - k);
}

inline BigRat cgt_top(int r, int k) {
  // equals binom(r-2, k-1)
  return binom_q(r, k + 1) * BigRat(static_cast<long long>(k) * (k + 1)) / BigRat(static_cast<long long>(r) * (r - 1));
}

// ---- summation route -------------------------------------------------------
//
// cgt(r,k,n) = sum_m binom(m+k,k) binom(r,m+k+1) cgt1(r,k,n,m)      0 <= n <= r-1
//            = sum_m binom(m+k,k) binom(r,m+k+1) cgt2(r,k,n,m)      r <= n <= 2r-3-k
// with m running over [0, r-1-k] resp. [n-r+1, r-1-k].

inline BigRat cgt1_coeff(int r, int k, int n, int m) {
  detail::need(n >= 0 && n <= r - 1, "cgt1_coeff: n out of range");
  detail::need(m >= 0, "cgt1_coeff: m out of range");
  const BigRat tail = BigRat(r) - BigRat(r + 1, k + m + 2);
  if (n == 0) return BigRat(neg1pow(m)) * tail;
  return BigRat(neg1pow(m - n)) * (binom_q(m - 1, n) * tail + binom_q(m - 2, n - 1));
}

inline BigRat cgt2_coeff(int r, int k, int n, int m) {
  detail::need(n >= r, "cgt2_coeff: n out of range");
  detail::need(m >= 1, "cgt2_coeff: m out of range");
  if (n == r) {
    if (m == 1) return BigRat(1) - BigRat(r + 1, k + 3);
    return BigRat(neg1pow(m)) * BigRat(r + 1, k + 2 + m);
  }
  const int s = n - r;
  return BigRat(neg1pow(m - s)) * (binom_q(m - 1, s) * BigRat(r + 1, k + m + 2) - binom_q(m - 2, s - 1));
}

inline BigRat cgt_summation(int r, int k, int n) {
  detail::need(r >= 2, "cgt_summation: r >= 2 required");
  if (k < 1 || k > r - 1 || n < 0) return BigRat(0);
  BigRat acc(0);
  if (n <= r - 1) {
    for (int m = 0; m <= r - 1 - k; ++m)
      acc += binom_q(m + k, k) * binom_q(r, m + k + 1) * cgt1_coeff(r, k, n, m);
  } else {
    for (int m = std::max(1, n - r + 1); m <= r - 1 - k; ++m)
      acc += binom_q(m + k, k) * binom_q(r, m + k + 1) * cgt2_coeff(r, k, n, m);
  }
  return acc;
}

// ---- gamma sums ------------------------------------------------------------
//
// The four inner sums that collapse the double summation, each with a closed
// form.  Literal sums are kept deliberately naive; they are the oracle.

inline BigRat gamma1_sum(int n, int i) {
  BigRat acc(0);
  for (int l = std::max(0, n - i); l <= n; ++l) acc += BigRat(neg1pow(i - n + l) * binom(i, i - n + l));
  return acc;
}

inline BigRat gamma1_closed(int n, int i) { return BigRat(neg1pow(i - n) * binom(i - 1, n)); }

inline BigRat gamma2_sum(int n, int i) {
  BigRat acc(0);
  for (int l = std::max(0, n - i); l <= n; ++l) acc += BigRat(l) * BigRat(neg1pow(i - n + l) * binom(i, i - n + l));
  return acc;
}

inline BigRat gamma2_closed(int n, int i) {
  if (n == 0) return BigRat(0);
  return BigRat(neg1pow(i - n - 1) * binom(i - 2, n - 1));
}

inline BigRat gamma3_sum(int r, int n, int i) {
  BigRat acc(0);
  for (int l = std::max(0, n - i); l <= r - 1; ++l) acc += BigRat(neg1pow(i - n + l) * binom(i, i - n + l));
  return acc;
}

inline BigRat gamma3_closed(int r, int n, int i) {
  if (i == 0) return BigRat(0);
  return BigRat(neg1pow(r - 1 - (n - i)) * binom(i - 1, n - r));
}

inline BigRat gamma4_sum(int r, int n, int i) {
  BigRat acc(0);
  for (int l = std::max(0, n - i); l <= r - 1; ++l) acc += BigRat(l) * BigRat(neg1pow(i - n + l) * binom(i, i - n + l));
  return acc;
}

inline BigRat gamma4_closed(int r, int n, int i) {
  if (i == 0) return BigRat(0);
  if (i == 1) return n == r ? BigRat(r - 1) : BigRat(0);
  return BigRat(neg1pow(r - 1 - (n - i))) * BigRat(static_cast<long long>(r) * i - n, i - 1) * binom_q(i - 1, n - r);
}

// Aggregate view with the range discipline of the derivation: gamma1/gamma2
// live on 0 <= n <= r-1, gamma3/gamma4 on r <= n <= r-1+i.
struct GammaValues {
  std::optional<BigRat> g1, g2, g3, g4;
};

inline GammaValues gamma_sums(int r, int n, int i) {
  detail::need(r >= 2, "gamma_sums: r >= 2 required");
  detail::need(i >= 0, "gamma_sums: i >= 0 required");
  GammaValues out;
  if (n >= 0 && n <= r - 1) {
    out.g1 = gamma1_sum(n, i);
    out.g2 = gamma2_sum(n, i);
  } else if (n >= r && n <= r - 1 + i) {
    out.g3 = gamma3_sum(r, n, i);
    out.g4 = gamma4_sum(r, n, i);
  } else {
    throw std::out_of_range("gamma_sums: n outside both index ranges");
  }
  return out;
}

}  // namespace gwnb
