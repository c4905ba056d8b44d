#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidcong {

/// Arbitrary-precision signed integer used for every exact computation.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt parse_bigint(const std::string& text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw std::invalid_argument("malformed integer: '" + text + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer: '" + text + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

inline bool fits_i64(const BigInt& value) {
  return value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_i64(const BigInt& value) {
  if (!fits_i64(value)) throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  return static_cast<std::int64_t>(value);
}

/// Floor division and the matching non-negative remainder (b != 0).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& b) { return a - b * floor_div(a, b); }

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return std::get<0>(ext_gcd(a, b)); }

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

}  // namespace braidcong
