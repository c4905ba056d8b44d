#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "braidcong/bigint.hpp"

namespace braidcong {

/// Element of Z[t, t^-1], stored sparsely as exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& constant) { add_term(0, constant); }  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& coefficient, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
  }

  static LaurentPoly t() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  /// Substitutes t = -1; exact for every exponent sign.
  BigInt eval_at_minus_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += (e % 2 == 0) ? c : BigInt(-c);
    return sum;
  }

  /// Substitutes t = 1.
  BigInt eval_at_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Renders highest exponent first, e.g. "-t+1", "2t^-1", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (c < 0) {
        out << '-';
      } else if (!first) {
        out << '+';
      }
      if (e == 0) {
        out << mag;
      } else {
        if (mag != 1) out << mag;
        out << 't';
        if (e != 1) out << '^' << e;
      }
      first = false;
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  void add_term(int exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

}  // namespace braidcong
