#pragma once

#include <complex>
#include <map>
#include <utility>

#include "mfpoly/laurent.hpp"

namespace mfpoly {

/// Polynomial in lambda whose coefficients are polynomials in a over Q:
/// sum over c[j][m] * lambda^j * a^m with real rational c. Canonical form
/// stores no zero coefficients. This is the output representation for the
/// k, r/(2l+1) and p polynomials.
class LambdaPoly {
 public:
  // key: (lambda_power, a_power)
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, BigRational>;

  LambdaPoly() = default;

  static LambdaPoly zero() { return {}; }
  static LambdaPoly one() { return monomial(BigRational(1), 0, 0); }

  static LambdaPoly monomial(BigRational coeff, int lambda_exp, int a_exp) {
    LambdaPoly p;
    if (!coeff.is_zero()) p.coeffs_.emplace(Key{lambda_exp, a_exp}, std::move(coeff));
    return p;
  }

  const TermMap& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  BigRational coeff(int lambda_exp, int a_exp) const {
    auto it = coeffs_.find(Key{lambda_exp, a_exp});
    return it == coeffs_.end() ? BigRational() : it->second;
  }

  int degree_lambda() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first.first; }

  friend bool operator==(const LambdaPoly& lhs, const LambdaPoly& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }
  friend bool operator!=(const LambdaPoly& lhs, const LambdaPoly& rhs) { return !(lhs == rhs); }

  LambdaPoly operator-() const {
    LambdaPoly out;
    for (const auto& [key, c] : coeffs_) out.coeffs_.emplace(key, -c);
    return out;
  }

  LambdaPoly& operator+=(const LambdaPoly& o) {
    for (const auto& [key, c] : o.coeffs_) add_term(key, c);
    return *this;
  }
  LambdaPoly& operator-=(const LambdaPoly& o) {
    for (const auto& [key, c] : o.coeffs_) add_term(key, -c);
    return *this;
  }
  friend LambdaPoly operator+(LambdaPoly lhs, const LambdaPoly& rhs) { return lhs += rhs; }
  friend LambdaPoly operator-(LambdaPoly lhs, const LambdaPoly& rhs) { return lhs -= rhs; }

  friend LambdaPoly operator*(const LambdaPoly& lhs, const LambdaPoly& rhs) {
    LambdaPoly out;
    for (const auto& [kl, cl] : lhs.coeffs_) {
      for (const auto& [kr, cr] : rhs.coeffs_) {
        out.add_term(Key{kl.first + kr.first, kl.second + kr.second}, cl * cr);
      }
    }
    return out;
  }
  LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }

  LambdaPoly scaled(const BigRational& c) const {
    LambdaPoly out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : coeffs_) out.coeffs_.emplace(key, coeff * c);
    return out;
  }

  /// Multiplies by a^n (n >= 0).
  LambdaPoly shifted_a(int n) const {
    LambdaPoly out;
    for (const auto& [key, c] : coeffs_) out.coeffs_.emplace(Key{key.first, key.second + n}, c);
    return out;
  }

  /// Multiplies by lambda^n (n >= 0).
  LambdaPoly shifted_lambda(int n) const {
    LambdaPoly out;
    for (const auto& [key, c] : coeffs_) out.coeffs_.emplace(Key{key.first + n, key.second}, c);
    return out;
  }

  /// The coefficient of lambda^j, itself a polynomial in a (lambda-free).
  LambdaPoly lambda_coefficient(int j) const {
    LambdaPoly out;
    for (auto it = coeffs_.lower_bound(Key{j, 0}); it != coeffs_.end() && it->first.first == j; ++it) {
      out.coeffs_.emplace(Key{0, it->first.second}, it->second);
    }
    return out;
  }

  /// Substitutes a = 0: keeps only the a^0 part.
  LambdaPoly at_zero_coupling() const {
    LambdaPoly out;
    for (const auto& [key, c] : coeffs_) {
      if (key.second == 0) out.coeffs_.emplace(key, c);
    }
    return out;
  }

  bool all_a_powers_odd() const {
    for (const auto& [key, c] : coeffs_) {
      if (key.second % 2 == 0) return false;
    }
    return true;
  }

  /// True when a divides the polynomial, i.e. every term carries a^1 or more.
  bool divisible_by_a() const {
    for (const auto& [key, c] : coeffs_) {
      if (key.second < 1) return false;
    }
    return true;
  }

  bool has_constant_lambda_term() const {
    return !coeffs_.empty() && coeffs_.begin()->first.first == 0;
  }

  /// Horner evaluation, descending lambda powers; the inner coefficient
  /// polynomials in a are likewise evaluated by Horner in descending order.
  std::complex<double> eval(std::complex<double> a_val, std::complex<double> lambda_val) const {
    if (coeffs_.empty()) return 0.0;
    // bucket a-coefficients per lambda power (map order: ascending lambda)
    std::map<int, std::map<int, double>> per_lambda;
    for (const auto& [key, c] : coeffs_) per_lambda[key.first][key.second] = c.to_double();
    std::complex<double> total = 0.0;
    int prev_pow = per_lambda.rbegin()->first;
    for (auto it = per_lambda.rbegin(); it != per_lambda.rend(); ++it) {
      for (int step = 0; step < prev_pow - it->first; ++step) total *= lambda_val;
      total += horner_a(it->second, a_val);
      prev_pow = it->first;
    }
    for (int step = 0; step < prev_pow; ++step) total *= lambda_val;
    return total;
  }

 private:
  static std::complex<double> horner_a(const std::map<int, double>& coeffs,
                                       std::complex<double> a_val) {
    std::complex<double> acc = 0.0;
    int prev = coeffs.rbegin()->first;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      for (int step = 0; step < prev - it->first; ++step) acc *= a_val;
      acc += it->second;
      prev = it->first;
    }
    for (int step = 0; step < prev; ++step) acc *= a_val;
    return acc;
  }

  void add_term(const Key& key, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  TermMap coeffs_;
};

/// Embeds a lambda-polynomial into the Laurent ring via lambda^j -> s^(2j).
inline LaurentPoly to_laurent(const LambdaPoly& p) {
  LaurentPoly out;
  for (const auto& [key, c] : p.terms()) {
    out += LaurentPoly::monomial(GaussianRational(c), key.second, 2 * key.first);
  }
  return out;
}

/// Collapses s^(2j) -> lambda^j. Fails loudly when the input is not a real
/// polynomial in lambda; those failures are the signal that an expected
/// real-valuedness identity broke.
inline LambdaPoly to_lambda_poly(const LaurentPoly& p) {
  LambdaPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (!c.is_real()) {
      throw NotRealValued("coefficient of a^" + std::to_string(mono.a_exp) + " s^" +
                          std::to_string(mono.s_exp) + " has imaginary part " + c.im().str());
    }
    if (mono.s_exp < 0 || mono.s_exp % 2 != 0) {
      throw NotPolynomialInLambda("term with s-exponent " + std::to_string(mono.s_exp));
    }
    out += LambdaPoly::monomial(c.re(), mono.s_exp / 2, mono.a_exp);
  }
  return out;
}

}  // namespace mfpoly
