#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uforge {

using BigInt = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(BigInt n, BigInt d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  return Rational(std::move(n)) / Rational(std::move(d));
}

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline Rational half(const Rational& r) { return r / 2; }

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

// "n" or "n/d"
inline std::string rational_to_string(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    return make_rational(std::move(n), std::move(d));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  }
}

inline int cmp(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  return a == b ? 0 : 1;
}

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational conj(const Rational& r) { return r; }

}  // namespace uforge
