#pragma once

#include <gwnb/params.hpp>
#include <gwnb/rational.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>

namespace gwnb {

// x -> (a x + b) / (c x + d), composed by 2x2 matrix multiplication.
// Entries are only meaningful up to a common scale, so squaring steps
// renormalize: exact mode divides out the rational content, float mode
// divides by the largest magnitude entry.
template <class S>
struct MobiusMap {
  S a, b, c, d;

  static MobiusMap identity() { return {S(1), S(0), S(0), S(1)}; }

  S det() const { return a * d - b * c; }

  S operator()(const S& x) const {
    const S den = c * x + d;
    if (den == S(0)) throw std::domain_error("MobiusMap: pole hit");
    return (a * x + b) / den;
  }

  // composition: (*this) after o
  MobiusMap operator*(const MobiusMap& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }

  void normalize() {
    if constexpr (std::is_same_v<S, BigRat>) {
      using boost::multiprecision::abs;
      using boost::multiprecision::gcd;
      using boost::multiprecision::lcm;
      const BigInt g = gcd(gcd(abs(numer(a)), abs(numer(b))), gcd(abs(numer(c)), abs(numer(d))));
      const BigInt l = lcm(lcm(denom(a), denom(b)), lcm(denom(c), denom(d)));
      if (g != 0) {
        const BigRat s(l, g);
        a *= s; b *= s; c *= s; d *= s;
      }
    } else {
      const S m = std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
      if (m > S(0)) {
        a /= m; b /= m; c /= m; d /= m;
      }
    }
  }

  MobiusMap pow(std::uint64_t n) const {
    MobiusMap acc = identity();
    MobiusMap base = *this;
    while (n > 0) {
      if (n & 1) {
        acc = acc * base;
        acc.normalize();
      }
      n >>= 1;
      if (n > 0) {
        base = base * base;
        base.normalize();
      }
    }
    return acc;
  }
};

// The fractional linear lower bound as a Mobius map.  Derived from
// phi_FL(x) = zeta^r (1-x-ry)/(1-x-r zeta^r y) with y = (zeta^r - x)/zhat;
// clearing zhat gives the integer-in-zeta entries below.  Fixed points are
// zeta^r and 1.
template <class S>
MobiusMap<S> mobius_from_params(const Params<S>& p) {
  const S zr = p_inf(p);
  const S zh = zhat(p);
  const S r = S(p.r);
  MobiusMap<S> m{zr * (r - zh), zr * (zh - r * zr), r * zr - zh, zh - r * zr * zr};
  if (m.det() == S(0)) throw std::domain_error("mobius_from_params: degenerate map");
  return m;
}

// n-fold self-composition of phi_FL evaluated at x, via the matrix power
template <class S>
S iterate_fl(const Params<S>& p, std::uint64_t n, const S& x) {
  if (n == 0) return x;
  return mobius_from_params(p).pow(n)(x);
}

// reference implementation: sequential composition
template <class S>
S iterate_fl_sequential(const Params<S>& p, std::uint64_t n, const S& x) {
  const MobiusMap<S> m = mobius_from_params(p);
  S v = x;
  for (std::uint64_t i = 0; i < n; ++i) v = m(v);
  return v;
}

}  // namespace gwnb
