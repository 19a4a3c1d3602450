#pragma once

#include <gwnb/rational.hpp>

#include <stdexcept>

namespace gwnb {

// Offspring family: negative binomial with integer shape r >= 2 whose pgf has
// the explicit fixed point zeta^r, parameterized by zeta in (0,1).  S is the
// scalar: double for fast paths, BigRat for exact ones.
template <class S>
struct Params {
  int r;
  S zeta;
};

using ParamsD = Params<double>;
using ParamsQ = Params<BigRat>;

template <class S>
Params<S> make_params(int r, const S& zeta) {
  if (r < 2) throw std::domain_error("make_params: r >= 2 required");
  if (!(zeta > S(0) && zeta < S(1))) throw std::domain_error("make_params: zeta in (0,1) required");
  return Params<S>{r, zeta};
}

template <class S>
S p_inf(const Params<S>& p) {
  return pow_int(p.zeta, p.r);
}

// zhat = 1 + zeta + ... + zeta^{r-1} = (1 - zeta^r)/(1 - zeta)
template <class S>
S zhat(const Params<S>& p) {
  S acc(0);
  S pw(1);
  for (int k = 0; k < p.r; ++k) {
    acc = acc + pw;
    pw = pw * p.zeta;
  }
  return acc;
}

// success parameter of the standard negative binomial form:
// p = zeta (1 - zeta^r) / (1 - zeta^{r+1}); satisfies phi(0) = p^r = zeta^r / (1+y(0))^r
template <class S>
S nb_success(const Params<S>& p) {
  const S zr = p_inf(p);
  return p.zeta * (S(1) - zr) / (S(1) - zr * p.zeta);
}

// offspring mean r(1-p)/p = r(1-zeta)/(zeta(1-zeta^r)); always > 1 here
template <class S>
S mean_offspring(const Params<S>& p) {
  const S s = nb_success(p);
  return S(p.r) * (S(1) - s) / s;
}

template <class S>
bool supercritical(const Params<S>& p) {
  return mean_offspring(p) > S(1);
}

inline ParamsD to_double_params(const ParamsQ& p) { return ParamsD{p.r, to_double(p.zeta)}; }

}  // namespace gwnb
