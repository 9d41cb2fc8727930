#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "mfpoly/rational.hpp"

namespace mfpoly {

/// Element of Q(i): a complex number with rational real and imaginary parts.
/// The imaginary unit lives here, never as a polynomial symbol, so real/
/// imaginary splits of polynomials are per-coefficient projections.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long n) : re_(n) {}                      // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2 = re^2 + im^2, a nonnegative rational.
  BigRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    BigRational re = re_ * o.re_ - im_ * o.im_;
    BigRational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero("GaussianRational: division by zero");
    const BigRational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// "(re)+(im)i", both components in BigRational::str() form.
  std::string str() const { return "(" + re_.str() + ")+(" + im_.str() + ")i"; }

  /// Exact inverse of str().
  static GaussianRational parse(std::string_view text) {
    auto expect = [&text](char c) {
      if (text.empty() || text.front() != c) {
        throw ParseError(std::string("expected '") + c + "' in Gaussian rational");
      }
      text.remove_prefix(1);
    };
    auto component = [&text, &expect]() {
      expect('(');
      const auto close = text.find(')');
      if (close == std::string_view::npos) throw ParseError("unterminated component");
      BigRational value = BigRational::parse(text.substr(0, close));
      text.remove_prefix(close + 1);
      return value;
    };
    BigRational re = component();
    expect('+');
    BigRational im = component();
    expect('i');
    if (!text.empty()) throw ParseError("trailing characters after Gaussian rational");
    return {std::move(re), std::move(im)};
  }

 private:
  BigRational re_;
  BigRational im_;
};

}  // namespace mfpoly
