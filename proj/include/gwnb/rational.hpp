#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gwnb {

// Expression templates are switched off so values compose cleanly with
// generic code (deduced template parameters, std::max, ...).
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Exact rational scalar, kept in lowest terms with a positive denominator,
// which is the normalization everything here relies on.
using BigRat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt numer(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const BigRat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const BigRat& q) { return denom(q) == 1; }

inline double to_double(const BigRat& q) { return q.template convert_to<double>(); }

template <class S>
S scalar_cast(const BigRat& q);

template <>
inline BigRat scalar_cast<BigRat>(const BigRat& q) { return q; }

template <>
inline double scalar_cast<double>(const BigRat& q) { return to_double(q); }

// base^e for integer e >= 0, works for double and BigRat alike
template <class S>
S pow_int(const S& base, long long e) {
  if (e < 0) throw std::domain_error("pow_int: negative exponent");
  S acc(1);
  S b = base;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return acc;
}

inline BigInt neg1pow(long long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

inline bool is_fraction_literal(const std::string& s) {
  return s.find('/') != std::string::npos;
}

// Accepts "p", "-p", "p/q"; rejects decimals so exact-mode inputs cannot
// smuggle in rounded values.
inline BigRat parse_rational(const std::string& text) {
  const auto bad = [&]() {
    throw std::invalid_argument("parse_rational: expected integer or p/q fraction, got '" + text + "'");
  };
  if (text.empty()) bad();
  std::string::size_type slash = text.find('/');
  auto check_int = [&](std::string::size_type from, std::string::size_type to) {
    if (from >= to) bad();
    std::string::size_type i = from;
    if (text[i] == '-') ++i;
    if (i >= to) bad();
    for (; i < to; ++i)
      if (text[i] < '0' || text[i] > '9') bad();
  };
  if (slash == std::string::npos) {
    check_int(0, text.size());
    return BigRat(BigInt(text));
  }
  check_int(0, slash);
  check_int(slash + 1, text.size());
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  return BigRat(num, den);
}

// Exact value of a finite double (every finite double is a dyadic rational).
inline BigRat rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite input");
  if (x == 0.0) return BigRat(0);
  int e2 = 0;
  double m = std::frexp(x, &e2);  // x = m * 2^e2 with 0.5 <= |m| < 1
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  int shift = e2 - 53;
  BigRat q(mant);
  if (shift >= 0)
    q *= BigRat(BigInt(1) << shift);
  else
    q /= BigRat(BigInt(1) << -shift);
  return q;
}

inline std::string to_fraction_string(const BigRat& q) { return q.str(); }

}  // namespace gwnb
