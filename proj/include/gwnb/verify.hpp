#pragma once

#include <gwnb/binomial.hpp>
#include <gwnb/bipoly.hpp>
#include <gwnb/coeffs.hpp>
#include <gwnb/pgf.hpp>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gwnb {

enum class CheckStatus { pass, fail, vacuous };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "vacuous";
  }
}

// One line of the verification ledger.  k/n are the first counterexample's
// indices when a check over a range fails; absent otherwise.
struct IdentityReport {
  std::string id;
  int r = 0;
  std::string range;
  CheckStatus status = CheckStatus::pass;
  std::optional<int> k, n;
  std::string counterexample;
};

namespace detail {

class RangeCheck {
 public:
  RangeCheck(std::string id, int r, std::string range)
      : rep_{std::move(id), r, std::move(range), CheckStatus::vacuous, {}, {}, ""} {}

  template <class MakeDetail>
  void require(bool ok, int k, int n, MakeDetail&& detail) {
    if (rep_.status == CheckStatus::vacuous) rep_.status = CheckStatus::pass;
    if (ok || rep_.status == CheckStatus::fail) return;
    rep_.status = CheckStatus::fail;
    rep_.k = k;
    rep_.n = n;
    rep_.counterexample = detail();
  }

  IdentityReport done() const { return rep_; }

 private:
  IdentityReport rep_;
};

inline std::string eq_detail(const std::string& label, const BigRat& lhs, const BigRat& rhs) {
  return label + ": lhs=" + lhs.str() + " rhs=" + rhs.str();
}

}  // namespace detail

// ---- oracle: polynomial expansion -------------------------------------------

// numerator of the gap polynomial g, before division by (1-z)^3:
// B(y,z) = y((1+y)^r - 1)(r(1-z) - (1-z^r)) - (1-z)(1-z^r)((1+y)^r - 1 - ry)
inline BiPoly gnb_numerator_poly(int r) {
  const std::string yv = "y", zv = "zeta";
  const BiPoly one = BiPoly::constant(1, yv, zv);
  const BiPoly y = BiPoly::monomial(1, 1, 0, yv, zv);
  const BiPoly z = BiPoly::monomial(1, 0, 1, yv, zv);
  const BiPoly zr = BiPoly::monomial(1, 0, r, yv, zv);
  const BiPoly a = (one + y).pow(r) - one;
  return y * a * (BigRat(r) * (one - z) - (one - zr)) - (one - z) * (one - zr) * (a - BigRat(r) * y);
}

// gt as a polynomial in (u, zeta), obtained by substituting y = u - (1-z)
// into B, then dividing exactly by (1-z)^2 (u-(1-z))^2.  The (1-z)^2 division
// uses two of B's three (1-z) factors; the third is the prefactor in gt.
inline BiPoly gtilde_poly_from_gap(int r) {
  const std::string uv = "u", zv = "zeta";
  const BiPoly one = BiPoly::constant(1, uv, zv);
  const BiPoly u = BiPoly::monomial(1, 1, 0, uv, zv);
  const BiPoly z = BiPoly::monomial(1, 0, 1, uv, zv);
  const BiPoly shift = u - (one - z);  // y = u - (1-z)
  const BiPoly p = gnb_numerator_poly(r).with_vars(uv, zv).subst(uv, shift);
  const BiPoly omz = one - z;
  return p.divexact(omz).divexact(omz).divexact(shift).divexact(shift);
}

// ---- coefficient tables ------------------------------------------------------

struct CoeffTable {
  int r = 0;
  std::string source;
  std::map<std::pair<int, int>, BigRat> entries;  // (k, n) -> cgt

  BigRat at(int k, int n) const {
    auto it = entries.find({k, n});
    return it == entries.end() ? BigRat(0) : it->second;
  }
};

inline CoeffTable build_closed_table(int r) {
  CoeffTable t{r, "closed_form", {}};
  for (int k = 1; k <= r - 1; ++k)
    for (int n = 0; n <= 2 * r - 3 - k; ++n) {
      BigRat v = cgt_closed(r, k, n);
      if (v != 0) t.entries[{k, n}] = std::move(v);
    }
  return t;
}

inline CoeffTable oracle_expand_summation(int r) {
  CoeffTable t{r, "summation", {}};
  for (int k = 1; k <= r - 1; ++k)
    for (int n = 0; n <= 2 * r - 3 - k; ++n) {
      BigRat v = cgt_summation(r, k, n);
      if (v != 0) t.entries[{k, n}] = std::move(v);
    }
  return t;
}

inline CoeffTable oracle_expand_gap(int r) {
  CoeffTable t{r, "gap_expansion", {}};
  const BiPoly g = gtilde_poly_from_gap(r);
  for (const auto& [key, c] : g.terms()) t.entries[{key.first, key.second}] = c;
  return t;
}

// ---- checks ------------------------------------------------------------------

// all three routes agree everywhere, and the expansion stays inside the box
inline IdentityReport check_table_agreement(int r) {
  detail::RangeCheck chk("table_triple_agreement", r, "k=1..r-1, n=0..2r-3-k");
  const CoeffTable closed = build_closed_table(r);
  const CoeffTable summed = oracle_expand_summation(r);
  const CoeffTable gap = oracle_expand_gap(r);
  for (const auto& [key, c] : gap.entries) {
    const auto [k, n] = key;
    const bool inside = k >= 1 && k <= r - 1 && n >= 0 && n <= 2 * r - 3 - k;
    chk.require(inside, k, n, [&, k = k, n = n, c = c] {
      std::ostringstream os;
      os << "expansion term u^" << k << " zeta^" << n << " = " << c.str() << " outside the index box";
      return os.str();
    });
  }
  for (int k = 1; k <= r - 1; ++k)
    for (int n = 0; n <= 2 * r - 3 - k; ++n) {
      const BigRat a = closed.at(k, n), b = summed.at(k, n), c = gap.at(k, n);
      chk.require(a == b && b == c, k, n, [&] {
        return "closed=" + a.str() + " summation=" + b.str() + " expansion=" + c.str();
      });
    }
  return chk.done();
}

inline IdentityReport check_integrality(int r) {
  detail::RangeCheck chk("table_integrality", r, "k=1..r-1, n=0..2r-3-k");
  for (int k = 1; k <= r - 1; ++k)
    for (int n = 0; n <= 2 * r - 3 - k; ++n) {
      const BigRat v = cgt_closed(r, k, n);
      chk.require(is_integer(v), k, n, [&] { return "cgt = " + v.str() + " is not an integer"; });
    }
  return chk.done();
}

inline IdentityReport check_positivity_table(int r) {
  detail::RangeCheck chk("table_positivity", r, "k=1..r-1, n=0..2r-3-k");
  for (int k = 1; k <= r - 1; ++k)
    for (int n = 0; n <= 2 * r - 3 - k; ++n) {
      const BigRat v = cgt_closed(r, k, n);
      chk.require(v > 0, k, n, [&] { return "cgt = " + v.str() + " is not positive"; });
    }
  return chk.done();
}

// special stated values: cgt(r,k,0) = k, cgt at n = r, top coefficient
inline IdentityReport check_special_values(int r) {
  detail::RangeCheck chk("special_values", r, "k=1..r-1");
  for (int k = 1; k <= r - 1; ++k) {
    const BigRat at0 = cgt_closed(r, k, 0);
    chk.require(at0 == k, k, 0, [&] { return detail::eq_detail("cgt(r,k,0) vs k", at0, BigRat(k)); });
    const BigRat top = cgt_closed(r, k, 2 * r - 3 - k);
    const BigRat top_formula = cgt_top(r, k);
    const BigRat top_binom = binom_q(r - 2, k - 1);
    chk.require(top == top_formula && top == top_binom, k, 2 * r - 3 - k, [&] {
      return "table=" + top.str() + " formula=" + top_formula.str() + " binom(r-2,k-1)=" + top_binom.str();
    });
    if (r <= 2 * r - 3 - k) {  // n = r lies inside the table for k <= r-3
      const BigRat at_r = cgt_closed(r, k, r);
      const BigRat at_r_formula = cgt_at_n_r(r, k);
      chk.require(at_r == at_r_formula, k, r,
                  [&] { return detail::eq_detail("cgt(r,k,r) vs special form", at_r, at_r_formula); });
    }
  }
  return chk.done();
}

// the linear+shifted-binomial split vanishes at n = 2r-k, 2r-k-1, 2r-k-2
inline IdentityReport check_zero_pattern(int r) {
  detail::RangeCheck chk("zero_pattern", r, "k=1..r-1, n=2r-k-2..2r-k");
  for (int k = 1; k <= r - 1; ++k)
    for (int i = 0; i <= 2; ++i) {
      const int n = 2 * r - i - k;
      const BigRat v = cgt_case_b(r, k, n) + cgt_case_c_extra(r, k, n);
      chk.require(v == 0, k, n, [&] { return "case_b + case_c = " + v.str() + " (expected 0)"; });
    }
  return chk.done();
}

inline IdentityReport check_gamma_identities(int r) {
  detail::RangeCheck chk("gamma_sums", r, "i=0..r-1; n=0..r-1 (g1,g2), n=r..r-1+i (g3,g4)");
  for (int i = 0; i <= r - 1; ++i) {
    for (int n = 0; n <= r - 1; ++n) {
      const BigRat s1 = gamma1_sum(n, i), c1 = gamma1_closed(n, i);
      chk.require(s1 == c1, i, n, [&] { return detail::eq_detail("gamma1", s1, c1); });
      const BigRat s2 = gamma2_sum(n, i), c2 = gamma2_closed(n, i);
      chk.require(s2 == c2, i, n, [&] { return detail::eq_detail("gamma2", s2, c2); });
    }
    for (int n = r; n <= r - 1 + i; ++n) {
      const BigRat s3 = gamma3_sum(r, n, i), c3 = gamma3_closed(r, n, i);
      chk.require(s3 == c3, i, n, [&] { return detail::eq_detail("gamma3", s3, c3); });
      const BigRat s4 = gamma4_sum(r, n, i), c4 = gamma4_closed(r, n, i);
      chk.require(s4 == c4, i, n, [&] { return detail::eq_detail("gamma4", s4, c4); });
    }
  }
  return chk.done();
}

// m = 0 row of the first-case coefficients: cgt1(r,k,n,0) = r - n - (r+1)/(k+2)
inline IdentityReport check_cgt1_base_row(int r) {
  detail::RangeCheck chk("cgt1_base_row", r, "k=1..r-1, n=0..r-1");
  for (int k = 1; k <= r - 1; ++k)
    for (int n = 0; n <= r - 1; ++n) {
      const BigRat got = cgt1_coeff(r, k, n, 0);
      const BigRat want = BigRat(r - n) - BigRat(r + 1, k + 2);
      chk.require(got == want, k, n, [&] { return detail::eq_detail("cgt1 at m=0", got, want); });
    }
  return chk.done();
}

// step 2: collapsing the double sum for 0 <= n <= r-1-k.
// The three partial sums have the closed forms below, and their combination
// r*S_a - S_b + S_c equals the case-(a) table value k*binom(n+k+2,k+2).
inline IdentityReport check_step2_identities(int r, int k, int n) {
  std::ostringstream rng;
  rng << "k=" << k << ", n=" << n;
  detail::RangeCheck chk("step2", r, rng.str());
  BigRat sa(0), sb(0), sc(0);
  for (int m = 0; m <= r - 1 - k; ++m) {
    const BigRat sgn(neg1pow(m - n));
    sa += sgn * binom_q(m + k, k) * binom_q(r, m + k + 1) * binom_q(m - 1, n);
    sb += sgn * binom_q(m + k, k) * binom_q(r + 1, m + k + 2) * binom_q(m - 1, n);
    sc += sgn * binom_q(m + k, k) * binom_q(r, m + k + 1) * binom_q(m - 2, n - 1);
  }
  const BigRat sa_closed = binom_q(k + n + 1, k + 1);
  const BigRat sb_closed = binom_q(k + n + 2, k + 2) *
                           BigRat(static_cast<long long>(r) * (k + 2) - static_cast<long long>(k) * (k + n + 2) - n, k + n + 2);
  const BigRat sc_closed = binom_q(k + n + 2, k + 2) * BigRat(-n, k + n + 2);
  chk.require(sa == sa_closed, k, n, [&] { return detail::eq_detail("step2 sum A", sa, sa_closed); });
  chk.require(sb == sb_closed, k, n, [&] { return detail::eq_detail("step2 sum B", sb, sb_closed); });
  chk.require(sc == sc_closed, k, n, [&] { return detail::eq_detail("step2 sum C", sc, sc_closed); });
  const BigRat combined = BigRat(r) * sa - sb + sc;
  const BigRat target = cgt_case_a(r, k, n);
  chk.require(combined == target, k, n, [&] { return detail::eq_detail("step2 combined", combined, target); });
  return chk.done();
}

// step 3: for r-k <= n <= r-1 only m = 0 contributes to the first two sums
// and m <= 1 to the third; the collapsed values combine to the case-(b) form.
inline IdentityReport check_step3_identities(int r, int k, int n) {
  std::ostringstream rng;
  rng << "k=" << k << ", n=" << n;
  detail::RangeCheck chk("step3", r, rng.str());
  BigRat sa(0), sb(0), sc(0);
  for (int m = 0; m <= r - 1 - k; ++m) {
    const BigRat sgn(neg1pow(m - n));
    sa += sgn * binom_q(m + k, k) * binom_q(r, m + k + 1) * binom_q(m - 1, n);
    sb += sgn * binom_q(m + k, k) * binom_q(r + 1, m + k + 2) * binom_q(m - 1, n);
    sc += sgn * binom_q(m + k, k) * binom_q(r, m + k + 1) * binom_q(m - 2, n - 1);
  }
  // with n >= r-k >= 1 only the generalized rows fire: m = 0 for the first
  // two sums, m = 0 and m = 1 for the third, and the signs cancel pairwise
  const BigRat sa_closed = binom_q(r, k + 1);
  const BigRat sb_closed = binom_q(r + 1, k + 2);
  const BigRat sc_closed = BigRat(k + 1) * binom_q(r, k + 2) - BigRat(n) * binom_q(r, k + 1);
  chk.require(sa == sa_closed, k, n, [&] { return detail::eq_detail("step3 sum A", sa, sa_closed); });
  chk.require(sb == sb_closed, k, n, [&] { return detail::eq_detail("step3 sum B", sb, sb_closed); });
  chk.require(sc == sc_closed, k, n, [&] { return detail::eq_detail("step3 sum C", sc, sc_closed); });
  const BigRat combined = BigRat(r) * sa - sb + sc;
  const BigRat target = cgt_case_b(r, k, n);
  chk.require(combined == target, k, n, [&] { return detail::eq_detail("step3 combined", combined, target); });
  return chk.done();
}

// step 4: the second-case sums for r <= n <= 2r-3-k equal the case-(b) plus
// case-(c) split.  The n = r boundary (the "left to the reader" case) runs
// through the same machinery.
inline IdentityReport check_step4_identities(int r, int k, int n) {
  std::ostringstream rng;
  rng << "k=" << k << ", n=" << n;
  detail::RangeCheck chk("step4", r, rng.str());
  const BigRat total = cgt_summation(r, k, n);
  const BigRat split = cgt_case_b(r, k, n) + cgt_case_c_extra(r, k, n);
  chk.require(total == split, k, n, [&] { return detail::eq_detail("step4 split", total, split); });
  const BigRat table = cgt_closed(r, k, n);
  chk.require(total == table, k, n, [&] { return detail::eq_detail("step4 vs table", total, table); });
  return chk.done();
}

// the coefficient at the top index n = 2r-2-k of the second-case machinery
// cancels to zero (single surviving term m = r-1-k)
inline IdentityReport check_top_cancellation(int r) {
  detail::RangeCheck chk("cgt2_top_cancellation", r, "k=1..r-3, n=2r-2-k");
  for (int k = 1; k <= r - 3; ++k) {
    const int n = 2 * r - 2 - k;
    const int m = r - 1 - k;
    const BigRat c = cgt2_coeff(r, k, n, m);
    chk.require(c == 0, k, n, [&] { return "cgt2(m=" + std::to_string(m) + ") = " + c.str(); });
    const BigRat s = cgt_summation(r, k, n);
    chk.require(s == 0, k, n, [&] { return "summation = " + s.str() + " (expected 0)"; });
  }
  return chk.done();
}

// sign alternation of the m-rows, scoped to where it actually holds: for the
// first-case coefficients the nonzero entries alternate from m = 1 on when
// n >= 1 (the m = 0 -> 1 boundary can repeat a sign), from m = 0 for n = 0,
// and the second-case coefficients alternate on their whole range.
inline IdentityReport check_sign_alternation(int r) {
  detail::RangeCheck chk("sign_alternation", r, "k=1..r-1, both coefficient families");
  auto scan = [&chk](int k, int n, int m_from, int m_to, auto&& coeff) {
    int last_sign = 0;
    int last_m = -1;
    for (int m = m_from; m <= m_to; ++m) {
      const BigRat c = coeff(m);
      if (c == 0) continue;
      const int sign = c > 0 ? 1 : -1;
      chk.require(last_sign == 0 || sign != last_sign, k, n, [&] {
        return "entries m=" + std::to_string(last_m) + " and m=" + std::to_string(m) +
               " share sign " + std::to_string(sign);
      });
      last_sign = sign;
      last_m = m;
    }
    if (last_sign == 0) chk.require(true, k, n, [] { return std::string(); });
  };
  for (int k = 1; k <= r - 1; ++k) {
    for (int n = 0; n <= r - 1; ++n)
      scan(k, n, n == 0 ? 0 : 1, r - 1 - k, [&](int m) { return cgt1_coeff(r, k, n, m); });
    for (int n = r; n <= 2 * r - 3 - k; ++n)
      scan(k, n, std::max(1, n - r + 1), r - 1 - k, [&](int m) { return cgt2_coeff(r, k, n, m); });
  }
  return chk.done();
}

// the difference/convexity argument behind positivity on the high-n branch:
//   (a) the linear part drops by exactly binom(r,k+1) per step;
//   (b) the shifted-binomial part has second difference
//       binom(k+(n-r)+1, k) * k (2r-n-k-2) / (n-r+2);
//   (c) that second difference is positive below n = 2r-k-2 and zero there;
//   (d) the first difference of the shifted part reaches binom(r,k+1) exactly
//       at n = 2r-k-2, cancelling the linear drop;
//   (e) both endpoints of the table range are positive;
//   (f) with convexity that forces positivity across the whole range.
inline IdentityReport check_positivity_argument(int r, int k) {
  std::ostringstream rng;
  rng << "k=" << k << ", n=r..2r-3-k";
  detail::RangeCheck chk("positivity_argument", r, rng.str());
  if (r < 4 || k > r - 3) return chk.done();  // empty high-n branch: vacuous
  const int n_top = 2 * r - 3 - k;
  auto ca = [&](int n) { return cgt_case_b(r, k, n); };
  auto cb = [&](int n) { return cgt_case_c_extra(r, k, n); };
  for (int n = r; n <= 2 * r - k - 2; ++n) {
    const BigRat da = ca(n + 1) - ca(n);
    chk.require(da == -binom_q(r, k + 1), k, n,
                [&] { return detail::eq_detail("linear drop", da, -binom_q(r, k + 1)); });
    const BigRat d2 = cb(n + 2) - 2 * cb(n + 1) + cb(n);
    const BigRat d2_closed =
        binom_q(k + (n - r) + 1, k) * BigRat(static_cast<long long>(k) * (2 * r - n - k - 2), n - r + 2);
    chk.require(d2 == d2_closed, k, n, [&] { return detail::eq_detail("second difference", d2, d2_closed); });
    if (n < 2 * r - k - 2)
      chk.require(d2 > 0, k, n, [&] { return "second difference " + d2.str() + " not positive"; });
    else
      chk.require(d2 == 0, k, n, [&] { return "second difference " + d2.str() + " at the zero index"; });
  }
  {
    const int n = 2 * r - k - 2;
    const BigRat db = cb(n + 1) - cb(n);
    chk.require(db == binom_q(r, k + 1), k, n,
                [&] { return detail::eq_detail("top first difference", db, binom_q(r, k + 1)); });
  }
  const BigRat left = cgt_closed(r, k, r), right = cgt_closed(r, k, n_top);
  chk.require(left > 0, k, r, [&] { return "left endpoint " + left.str() + " not positive"; });
  chk.require(right > 0, k, n_top, [&] { return "right endpoint " + right.str() + " not positive"; });
  for (int n = r; n <= n_top; ++n) {
    const BigRat v = ca(n) + cb(n);
    chk.require(v > 0, k, n, [&] { return "combined coefficient " + v.str() + " not positive"; });
  }
  return chk.done();
}

// series coefficients of the gap in the y variable: positive, and the exact
// rational-function form agrees with direct evaluation
inline IdentityReport check_cg_route(int r) {
  detail::RangeCheck chk("cg_positive_and_consistent", r, "j=0..r-1, zeta=1/10..9/10");
  for (int j = 0; j <= r - 1; ++j) {
    const ZetaRatFun f = c_g_exact(r, j);
    for (int t = 1; t <= 9; ++t) {
      const BigRat zeta(t, 10);
      const BigRat direct = c_g(r, j, zeta);
      const BigRat via_ratfun = f.eval(zeta);
      chk.require(direct == via_ratfun, j, t, [&] { return detail::eq_detail("c_g routes", direct, via_ratfun); });
      chk.require(direct > 0, j, t, [&] { return "c_g = " + direct.str() + " not positive"; });
    }
  }
  return chk.done();
}

// the series form with the c_g coefficients reproduces the gap numerator:
// sum_j y^{j+2} binom(r,j+1) c_g(r,j,z) == B(y,z) / (1-z)^3  as rational functions
inline IdentityReport check_cg_poly_route(int r) {
  detail::RangeCheck chk("cg_series_vs_gap", r, "polynomial identity");
  const std::string yv = "y", zv = "zeta";
  const BiPoly one = BiPoly::constant(1, yv, zv);
  const BiPoly z = BiPoly::monomial(1, 0, 1, yv, zv);
  const BiPoly omz = one - z;
  BiPoly lhs = BiPoly::zero(yv, zv);  // times (1-z): common denominator of the c_g
  for (int j = 0; j <= r - 1; ++j) {
    const ZetaRatFun f = c_g_exact(r, j);
    BiPoly num = f.num;
    if (f.denom_pow == 0) num = num * omz;
    lhs += BiPoly::monomial(binom_q(r, j + 1), j + 2, 0, yv, zv) * num;
  }
  const BiPoly rhs = gnb_numerator_poly(r).divexact(omz).divexact(omz);
  chk.require(lhs == rhs, 0, 0, [&] {
    return "series form and gap numerator differ; diff = " + (lhs - rhs).to_string();
  });
  return chk.done();
}

// ---- driver ------------------------------------------------------------------

inline std::vector<IdentityReport> verify_r(int r) {
  std::vector<IdentityReport> out;
  out.push_back(check_table_agreement(r));
  out.push_back(check_integrality(r));
  out.push_back(check_positivity_table(r));
  out.push_back(check_special_values(r));
  out.push_back(check_zero_pattern(r));
  out.push_back(check_gamma_identities(r));
  out.push_back(check_cgt1_base_row(r));
  out.push_back(check_top_cancellation(r));
  out.push_back(check_sign_alternation(r));
  {
    detail::RangeCheck agg("step2", r, "k=1..r-1, n=0..r-1-k");
    for (int k = 1; k <= r - 1; ++k)
      for (int n = 0; n <= r - 1 - k; ++n) {
        const IdentityReport rep = check_step2_identities(r, k, n);
        agg.require(rep.status != CheckStatus::fail, k, n, [&] { return rep.counterexample; });
      }
    out.push_back(agg.done());
  }
  {
    detail::RangeCheck agg("step3", r, "k=1..r-1, n=r-k..r-1");
    for (int k = 1; k <= r - 1; ++k)
      for (int n = r - k; n <= r - 1; ++n) {
        const IdentityReport rep = check_step3_identities(r, k, n);
        agg.require(rep.status != CheckStatus::fail, k, n, [&] { return rep.counterexample; });
      }
    out.push_back(agg.done());
  }
  {
    detail::RangeCheck agg("step4", r, "k=1..r-3, n=r..2r-3-k");
    for (int k = 1; k <= r - 3; ++k)
      for (int n = r; n <= 2 * r - 3 - k; ++n) {
        const IdentityReport rep = check_step4_identities(r, k, n);
        agg.require(rep.status != CheckStatus::fail, k, n, [&] { return rep.counterexample; });
      }
    out.push_back(agg.done());
  }
  {
    detail::RangeCheck agg("positivity_argument", r, "k=1..r-3");
    for (int k = 1; k <= r - 3; ++k) {
      const IdentityReport rep = check_positivity_argument(r, k);
      if (rep.status == CheckStatus::vacuous) continue;
      agg.require(rep.status != CheckStatus::fail, k, rep.n.value_or(-1), [&] { return rep.counterexample; });
    }
    out.push_back(agg.done());
  }
  out.push_back(check_cg_route(r));
  out.push_back(check_cg_poly_route(r));
  return out;
}

inline std::vector<IdentityReport> verify_all(int r_max) {
  if (r_max < 2) throw std::domain_error("verify_all: r_max >= 2 required");
  std::vector<IdentityReport> out;
  for (int r = 2; r <= r_max; ++r) {
    std::vector<IdentityReport> part = verify_r(r);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

inline bool all_pass(const std::vector<IdentityReport>& reports) {
  for (const auto& rep : reports)
    if (rep.status == CheckStatus::fail) return false;
  return true;
}

}  // namespace gwnb
