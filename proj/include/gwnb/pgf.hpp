#pragma once

#include <gwnb/binomial.hpp>
#include <gwnb/bipoly.hpp>
#include <gwnb/coeffs.hpp>
#include <gwnb/params.hpp>

#include <stdexcept>
#include <string>

namespace gwnb {

// y(x) = (zeta^r - x) / zhat; the change of variable both pgfs are written in
template <class S>
S y_of_x(const Params<S>& p, const S& x) {
  if (!(x >= S(0) && x <= S(1))) throw std::domain_error("y_of_x: x in [0,1] required");
  return (p_inf(p) - x) / zhat(p);
}

// negative binomial pgf, fixed-point form: phi(x) = zeta^r / (1+y)^r
template <class S>
S phi_nb(const Params<S>& p, const S& x) {
  if (x == S(1)) return S(1);
  const S y = y_of_x(p, x);
  return p_inf(p) / pow_int(S(1) + y, p.r);
}

// same pgf in the textbook form (p/(1-(1-p)x))^r; used as a cross-check and
// as the contract for the sampler
template <class S>
S phi_nb_standard(const Params<S>& p, const S& x) {
  const S s = nb_success(p);
  return pow_int(s / (S(1) - (S(1) - s) * x), p.r);
}

// fractional linear lower bound phi_FL(x) = zeta^r (1-x-ry) / (1-x-r zeta^r y).
// Both numerator and denominator are strictly positive on [0,1); a violation
// means a bug, not bad input.
template <class S>
S phi_fl(const Params<S>& p, const S& x) {
  if (x == S(1)) return S(1);
  const S y = y_of_x(p, x);
  const S zr = p_inf(p);
  const S num = S(1) - x - S(p.r) * y;
  const S den = S(1) - x - S(p.r) * zr * y;
  if (!(num > S(0)) || !(den > S(0)))
    throw std::logic_error("phi_fl: positivity of numerator/denominator failed (bug)");
  return zr * num / den;
}

// f(x) = zeta^r (1/phi_FL - 1/phi_NB) >= 0 with zeros exactly at x = zeta^r
template <class S>
S f_nb(const Params<S>& p, const S& x) {
  if (!(x >= S(0) && x < S(1))) throw std::domain_error("f_nb: x in [0,1) required");
  return p_inf(p) * (S(1) / phi_fl(p, x) - S(1) / phi_nb(p, x));
}

// gap polynomial in the y variable:
// g(y) = [ y((1+y)^r - 1)(r(1-z) - (1-z^r)) - (1-z)(1-z^r)((1+y)^r - 1 - ry) ] / (1-z)^3
template <class S>
S g_nb(const Params<S>& p, const S& y) {
  const S one(1);
  const S z = p.zeta;
  const S zr = p_inf(p);
  const S pr = pow_int(one + y, p.r);
  const S a = pr - one;
  const S num = y * a * (S(p.r) * (one - z) - (one - zr)) - (one - z) * (one - zr) * (a - S(p.r) * y);
  return num / pow_int(one - z, 3);
}

// series coefficient of g: g(y) = y^2 sum_{j=0}^{r-1} y^j binom(r,j+1) c_g(r,j,zeta)
template <class S>
S c_g(int r, int j, const S& zeta) {
  if (r < 2) throw std::domain_error("c_g: r >= 2 required");
  if (j < 0 || j > r - 1) throw std::out_of_range("c_g: 0 <= j <= r-1 required");
  S acc(0);
  S pw(1);
  for (int k = 0; k <= r - 2; ++k) {
    const long long w = 2LL * r * (1 + j) - static_cast<long long>(2 + j) * k - 2;
    acc = acc + pw * S(k + 1) * S(w);
    pw = pw * zeta;
  }
  if (j > 0)  // the simple-pole term at zeta = 1 only enters for j >= 1
    acc = acc + pw * S(r) * S(r + 1) * S(j) / (S(1) - zeta);
  return acc / S(2 * (j + 2));
}

// c_g as an exact rational function of zeta: num(zeta) / (1-zeta)^denom_pow,
// numerator coefficients rational, normalized so (1-zeta) does not divide num
struct ZetaRatFun {
  BiPoly num;
  int denom_pow;

  template <class S>
  S eval(const S& zeta) const {
    return num.eval(S(1), zeta) / pow_int(S(1) - zeta, denom_pow);
  }
};

inline ZetaRatFun c_g_exact(int r, int j) {
  if (r < 2) throw std::domain_error("c_g_exact: r >= 2 required");
  if (j < 0 || j > r - 1) throw std::out_of_range("c_g_exact: 0 <= j <= r-1 required");
  const std::string y = "y", z = "zeta";
  const BiPoly one = BiPoly::constant(1, y, z);
  const BiPoly zeta = BiPoly::monomial(1, 0, 1, y, z);
  // (1-zeta) * sum_k zeta^k (k+1)(2r(1+j)-(2+j)k-2)  +  zeta^{r-1} r(r+1) j
  BiPoly acc = BiPoly::zero(y, z);
  for (int k = 0; k <= r - 2; ++k) {
    const long long w = 2LL * r * (1 + j) - static_cast<long long>(2 + j) * k - 2;
    acc.add_term(0, k, BigRat(k + 1) * BigRat(w));
  }
  acc = (one - zeta) * acc;
  acc.add_term(0, r - 1, BigRat(r) * BigRat(r + 1) * BigRat(j));
  ZetaRatFun f{acc * BigRat(1, 2 * (j + 2)), 1};
  while (f.denom_pow > 0) {
    auto q = f.num.try_divexact(one - zeta);
    if (!q) break;
    f.num = *q;
    --f.denom_pow;
  }
  return f;
}

// gt(u) = (1-z) g(u - (1-z)) / (u - (1-z))^2, the quotient route.
// Singular exactly at u = 1-z, where the series route below still works.
template <class S>
S g_tilde(const Params<S>& p, const S& u) {
  const S y = u - (S(1) - p.zeta);
  if (y == S(0)) throw std::domain_error("g_tilde: quotient route singular at u = 1 - zeta");
  return (S(1) - p.zeta) * g_nb(p, y) / (y * y);
}

// series route via the coefficient table; total degree <= 2r-3 in (u, zeta)
template <class S>
S g_tilde_series(const Params<S>& p, const S& u) {
  S acc(0);
  S upow = u;
  for (int k = 1; k <= p.r - 1; ++k) {
    S inner(0);
    S zpow(1);
    for (int n = 0; n <= 2 * p.r - 3 - k; ++n) {
      inner = inner + zpow * scalar_cast<S>(cgt_closed(p.r, k, n));
      zpow = zpow * p.zeta;
    }
    acc = acc + upow * inner;
    upow = upow * u;
  }
  return acc;
}

// u(x) = (1-x)(1-z)/(1-z^r); maps [zeta^r, 1] onto [0, 1-zeta]
template <class S>
S u_of_x(const Params<S>& p, const S& x) {
  return (S(1) - x) * (S(1) - p.zeta) / (S(1) - p_inf(p));
}

}  // namespace gwnb
