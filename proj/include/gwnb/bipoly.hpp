#pragma once

#include <gwnb/rational.hpp>

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gwnb {

struct NonzeroRemainder : std::runtime_error {
  explicit NonzeroRemainder(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// dense-enough univariate helper: exponent -> coefficient, zeros never stored
using UniPoly = std::map<int, BigRat>;

inline int uni_degree(const UniPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

inline void uni_add_term(UniPoly& p, int e, const BigRat& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

// long division in Q[w]; nullopt unless it comes out exact
inline std::optional<UniPoly> uni_divexact(UniPoly a, const UniPoly& b) {
  if (b.empty()) return std::nullopt;
  const int db = uni_degree(b);
  const BigRat lead_b = b.rbegin()->second;
  UniPoly q;
  while (!a.empty() && uni_degree(a) >= db) {
    const int e = uni_degree(a) - db;
    const BigRat c = a.rbegin()->second / lead_b;
    uni_add_term(q, e, c);
    for (const auto& [eb, cb] : b) uni_add_term(a, eb + e, -c * cb);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

}  // namespace detail

// Sparse polynomial in two named variables over BigRat.  The variable names
// are part of the value: mixing rings is a bug and throws.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (exponent of v, exponent of w)
  using TermMap = std::map<Key, BigRat>;

  BiPoly(std::string v, std::string w) : v_(std::move(v)), w_(std::move(w)) {}

  static BiPoly zero(const std::string& v, const std::string& w) { return BiPoly(v, w); }

  static BiPoly constant(const BigRat& c, const std::string& v, const std::string& w) {
    BiPoly p(v, w);
    p.add_term(0, 0, c);
    return p;
  }

  static BiPoly monomial(const BigRat& c, int i, int j, const std::string& v, const std::string& w) {
    if (i < 0 || j < 0) throw std::domain_error("BiPoly: negative exponent");
    BiPoly p(v, w);
    p.add_term(i, j, c);
    return p;
  }

  const std::string& var0() const { return v_; }
  const std::string& var1() const { return w_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  BigRat coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  int degree0() const {
    int d = -1;
    for (const auto& kv : terms_) d = std::max(d, kv.first.first);
    return d;
  }

  int degree1() const {
    int d = -1;
    for (const auto& kv : terms_) d = std::max(d, kv.first.second);
    return d;
  }

  void add_term(int i, int j, const BigRat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Key{i, j}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BiPoly operator-() const {
    BiPoly r(v_, w_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  BiPoly& operator+=(const BiPoly& o) {
    same_ring(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }

  BiPoly& operator-=(const BiPoly& o) {
    same_ring(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.same_ring(b);
    BiPoly r(a.v_, a.w_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }

  friend BiPoly operator*(const BigRat& s, const BiPoly& p) {
    BiPoly r(p.v_, p.w_);
    if (s == 0) return r;
    for (const auto& [k, c] : p.terms_) r.terms_.emplace(k, s * c);
    return r;
  }

  friend BiPoly operator*(const BiPoly& p, const BigRat& s) { return s * p; }

  BiPoly pow(int e) const {
    if (e < 0) throw std::domain_error("BiPoly::pow: negative exponent");
    BiPoly acc = constant(1, v_, w_);
    BiPoly b = *this;
    while (e > 0) {
      if (e & 1) acc = acc * b;
      e >>= 1;
      if (e > 0) b = b * b;
    }
    return acc;
  }

  bool operator==(const BiPoly& o) const {
    return v_ == o.v_ && w_ == o.w_ && terms_ == o.terms_;
  }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  // Same coefficients, new variable names.
  BiPoly with_vars(const std::string& v, const std::string& w) const {
    BiPoly r(v, w);
    r.terms_ = terms_;
    return r;
  }

  // Substitute `expr` (same ring) for the named variable.
  BiPoly subst(const std::string& name, const BiPoly& expr) const {
    same_ring(expr);
    const bool first = (name == v_);
    if (!first && name != w_)
      throw std::invalid_argument("BiPoly::subst: unknown variable '" + name + "'");
    // group by the substituted exponent, walk it upward with a running power
    std::map<int, BiPoly> slices;
    for (const auto& [k, c] : terms_) {
      const int e = first ? k.first : k.second;
      auto it = slices.try_emplace(e, BiPoly(v_, w_)).first;
      it->second.add_term(first ? 0 : k.first, first ? k.second : 0, c);
    }
    BiPoly result(v_, w_);
    BiPoly power = constant(1, v_, w_);
    int at = 0;
    for (const auto& [e, slice] : slices) {
      for (; at < e; ++at) power = power * expr;
      result += power * slice;
    }
    return result;
  }

  // Exact division; nullopt when *this is not a multiple of b.
  std::optional<BiPoly> try_divexact(const BiPoly& b) const {
    same_ring(b);
    if (b.is_zero()) throw std::domain_error("BiPoly: division by zero polynomial");
    // long division in v with coefficients in Q[w]; exactness of every
    // leading-slice division is forced whenever the global quotient exists
    std::map<int, detail::UniPoly> rem, div;
    for (const auto& [k, c] : terms_) rem[k.first][k.second] = c;
    for (const auto& [k, c] : b.terms_) div[k.first][k.second] = c;
    const int db = div.rbegin()->first;
    const detail::UniPoly& lead_b = div.rbegin()->second;
    BiPoly q(v_, w_);
    while (!rem.empty() && rem.rbegin()->first >= db) {
      const int da = rem.rbegin()->first;
      auto qs = detail::uni_divexact(rem.rbegin()->second, lead_b);
      if (!qs) return std::nullopt;
      const int e = da - db;
      for (const auto& [j, c] : *qs) q.add_term(e, j, c);
      for (const auto& [i, pb] : div) {
        detail::UniPoly& target = rem[i + e];
        for (const auto& [jb, cb] : pb)
          for (const auto& [jq, cq] : *qs) detail::uni_add_term(target, jb + jq, -cb * cq);
      }
      for (auto it = rem.begin(); it != rem.end();)
        it = it->second.empty() ? rem.erase(it) : std::next(it);
    }
    if (!rem.empty()) return std::nullopt;
    return q;
  }

  BiPoly divexact(const BiPoly& b) const {
    auto q = try_divexact(b);
    if (!q) throw NonzeroRemainder("BiPoly::divexact: " + to_string() + " not divisible by " + b.to_string());
    return *q;
  }

  template <class S>
  S eval(const S& x0, const S& x1) const {
    S acc(0);
    for (const auto& [k, c] : terms_)
      acc = acc + scalar_cast<S>(c) * pow_int(x0, k.first) * pow_int(x1, k.second);
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool head = true;
    for (const auto& [k, c] : terms_) {
      if (!head) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      head = false;
      BigRat a = c > 0 ? c : BigRat(-c);
      bool wrote = false;
      if (a != 1 || (k.first == 0 && k.second == 0)) {
        os << a.str();
        wrote = true;
      }
      auto var = [&](const std::string& n, int e) {
        if (e == 0) return;
        if (wrote) os << "*";
        os << n;
        if (e > 1) os << "^" << e;
        wrote = true;
      };
      var(v_, k.first);
      var(w_, k.second);
    }
    return os.str();
  }

 private:
  void same_ring(const BiPoly& o) const {
    if (v_ != o.v_ || w_ != o.w_)
      throw std::invalid_argument("BiPoly: variable mismatch (" + v_ + "," + w_ + ") vs (" + o.v_ + "," + o.w_ + ")");
  }

  std::string v_, w_;
  TermMap terms_;
};

}  // namespace gwnb
