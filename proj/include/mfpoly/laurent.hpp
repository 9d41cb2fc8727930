#pragma once

#include <complex>
#include <map>
#include <utility>

#include "mfpoly/gaussian.hpp"

namespace mfpoly {

/// Power product a^a_exp * s^s_exp. The symbol a is the coupling constant
/// (exponent never negative); s stands for sqrt(lambda) and may carry a
/// negative exponent. Terms are ordered lexicographically by (s_exp, a_exp).
struct Monomial {
  int a_exp = 0;
  int s_exp = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
    if (auto c = lhs.s_exp <=> rhs.s_exp; c != 0) return c;
    return lhs.a_exp <=> rhs.a_exp;
  }
};

/// Sparse Laurent polynomial in (a, s) over Q(i). Canonical form: no stored
/// coefficient is zero. Values behave immutably; all operations return new
/// polynomials.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  LaurentPoly() = default;

  static LaurentPoly zero() { return {}; }

  static LaurentPoly constant(GaussianRational c) { return monomial(std::move(c), 0, 0); }

  static LaurentPoly one() { return constant(GaussianRational(1)); }

  static LaurentPoly monomial(GaussianRational coeff, int a_exp, int s_exp) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(Monomial{a_exp, s_exp}, std::move(coeff));
    return p;
  }

  /// The symbol s itself.
  static LaurentPoly s(int exp = 1) { return monomial(GaussianRational(1), 0, exp); }

  /// The symbol a itself.
  static LaurentPoly a(int exp = 1) { return monomial(GaussianRational(1), exp, 0); }

  /// beta = (a/2) i s^(-1), the recurring Pochhammer argument.
  static LaurentPoly beta() { return monomial(GaussianRational(BigRational(0), rat(1, 2)), 1, -1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  GaussianRational coeff(int a_exp, int s_exp) const {
    auto it = terms_.find(Monomial{a_exp, s_exp});
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const LaurentPoly& lhs, const LaurentPoly& rhs) { return !(lhs == rhs); }

  LaurentPoly operator-() const {
    LaurentPoly out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [ml, cl] : lhs.terms_) {
      for (const auto& [mr, cr] : rhs.terms_) {
        out.add_term(Monomial{ml.a_exp + mr.a_exp, ml.s_exp + mr.s_exp}, cl * cr);
      }
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const GaussianRational& c) const {
    LaurentPoly out;
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
  }

  /// Exact power by repeated squaring; pow(p, 0) = 1.
  LaurentPoly pow(unsigned n) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (n > 0) {
      if (n & 1u) result *= base;
      base = (n >>= 1) > 0 ? base * base : base;
    }
    return result;
  }

  /// Splits p = real + i*imag per coefficient; both outputs have purely real
  /// coefficients. Valid because s is treated as a real positive symbol.
  std::pair<LaurentPoly, LaurentPoly> split() const {
    LaurentPoly real, imag;
    for (const auto& [mono, c] : terms_) {
      if (!c.re().is_zero()) real.terms_.emplace(mono, GaussianRational(c.re()));
      if (!c.im().is_zero()) imag.terms_.emplace(mono, GaussianRational(c.im()));
    }
    return {std::move(real), std::move(imag)};
  }

  /// Numeric evaluation with coefficients converted to double at call time.
  std::complex<double> eval(std::complex<double> a_val, std::complex<double> s_val) const {
    std::complex<double> total = 0.0;
    for (const auto& [mono, c] : terms_) {
      if (mono.s_exp < 0 && s_val == std::complex<double>(0.0)) {
        throw PoleAtZero();
      }
      std::complex<double> coeff(c.re().to_double(), c.im().to_double());
      total += coeff * int_pow(a_val, mono.a_exp) * int_pow(s_val, mono.s_exp);
    }
    return total;
  }

  int min_s_exp() const { return terms_.empty() ? 0 : terms_.begin()->first.s_exp; }
  int max_s_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first.s_exp; }

 private:
  static std::complex<double> int_pow(std::complex<double> base, int exp) {
    if (exp == 0) return 1.0;
    const bool invert = exp < 0;
    unsigned e = invert ? static_cast<unsigned>(-(long long)exp) : static_cast<unsigned>(exp);
    std::complex<double> out = 1.0;
    while (e > 0) {
      if (e & 1u) out *= base;
      base *= base;
      e >>= 1;
    }
    return invert ? 1.0 / out : out;
  }

  void add_term(const Monomial& mono, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace mfpoly
