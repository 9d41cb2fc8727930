#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cmath>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "mfpoly/errors.hpp"

namespace mfpoly {

using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero stored as 0/1. Values are immutable in spirit -- every
/// operation returns a fresh canonical value.
class BigRational {
 public:
  BigRational() : q_(0) {}
  BigRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor): numeric literal convenience
  explicit BigRational(const BigInt& n) : q_(n) {}

  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("BigRational: zero denominator");
    // mpq arithmetic keeps operands canonical, so route through a division.
    q_ = Rep(num);
    q_ /= Rep(den);
  }

  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

  BigInt numerator() const { return boost::multiprecision::numerator(q_); }
  BigInt denominator() const { return boost::multiprecision::denominator(q_); }

  bool is_zero() const { return q_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return q_.sign(); }

  BigRational operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
  }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

  BigRational pow(unsigned n) const {
    BigRational out(1);
    BigRational base = *this;
    while (n > 0) {
      if (n & 1u) out *= base;
      base *= base;
      n >>= 1;
    }
    return out;
  }

  double to_double() const {
    const double num = numerator().convert_to<double>();
    const double den = denominator().convert_to<double>();
    if (std::isfinite(num) && std::isfinite(den)) return num / den;
    return q_.convert_to<double>();
  }

  /// "num/den" in decimal, "num" alone when the denominator is 1.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Exact inverse of str(). Accepts "-3", "5/7", "-5/7"; the sign always
  /// sits on the numerator.
  static BigRational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return BigRational(parse_int(text, /*allow_sign=*/true));
    }
    BigInt num = parse_int(text.substr(0, slash), /*allow_sign=*/true);
    BigInt den = parse_int(text.substr(slash + 1), /*allow_sign=*/false);
    if (den == 0) throw ParseError("rational with zero denominator: " + std::string(text));
    return BigRational(num, den);
  }

 private:
  using Rep = boost::multiprecision::mpq_rational;

  static BigInt parse_int(std::string_view text, bool allow_sign) {
    if (text.empty()) throw ParseError("empty integer");
    std::size_t i = allow_sign && text[0] == '-' ? 1 : 0;
    if (i == text.size()) throw ParseError("bare sign is not an integer");
    for (; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw ParseError("invalid integer: " + std::string(text));
      }
    }
    return BigInt(std::string(text));
  }

  Rep q_;
};

inline BigRational rat(long num, long den = 1) { return BigRational(num, den); }

}  // namespace mfpoly
