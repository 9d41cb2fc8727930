#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mfpoly/direct.hpp"

namespace mfpoly {

using Complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

struct MFunctionParams {
  int ell = 0;
  double a = 1.0;
  double euler_gamma = kEulerGamma;
};

/// Principal square root, branch cut on the negative real axis of the
/// argument; Im sqrt(lambda) > 0 for lambda in the upper half-plane.
inline Complex sqrt_lambda(Complex lambda) {
  if (lambda == Complex(0.0)) throw DomainError("sqrt_lambda: branch point lambda = 0");
  return std::sqrt(lambda);
}

/// Complex digamma: upward recurrence psi(z) = psi(z+1) - 1/z until
/// Re z >= 10, then the asymptotic series
///   log z - 1/(2z) - sum_{n=1}^{7} B_{2n} / (2n z^{2n}).
/// Relative accuracy ~1e-12 away from the poles at 0, -1, -2, ...
inline Complex digamma(Complex z) {
  static constexpr double kBernoulli[7] = {1.0 / 6.0,    -1.0 / 30.0,    1.0 / 42.0, -1.0 / 30.0,
                                           5.0 / 66.0,   -691.0 / 2730.0, 7.0 / 6.0};
  Complex shift = 0.0;
  while (z.real() < 10.0) {
    if (std::abs(z) < 1e-12) throw DomainError("digamma: pole at nonpositive integer");
    shift -= 1.0 / z;
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex power = inv2;
  Complex series = 0.0;
  for (int n = 1; n <= 7; ++n) {
    series += (kBernoulli[n - 1] / (2.0 * n)) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 * inv - series + shift;
}

/// Evaluates both m-function forms for a fixed (ell, a). The exact k and p
/// polynomials are converted to per-lambda-power double coefficients once,
/// at construction; evaluation then runs Horner in lambda, descending.
///
/// Branch structure: the principal-branch transcription of the formulas is
/// analytic across the positive real axis and jumps across the negative one,
/// i.e. taken verbatim in the lower half-plane it continues through the cut
/// onto the second sheet. The function with the documented structure (cut on
/// the positive axis, poles on the negative axis, m(conj z) = conj m(z)) is
/// therefore evaluated directly only for Im lambda >= 0 and by Schwarz
/// reflection below the axis. Both formulas go through the same rule, so
/// their comparison stays branch-consistent everywhere.
class MFunctionEvaluator {
 public:
  explicit MFunctionEvaluator(const MFunctionParams& params)
      : params_(params), h2l_(0.0) {
    const DirectResult direct = r_direct(params.ell);
    k_coeffs_ = lambda_profile(direct.k, params.a);
    p_coeffs_ = lambda_profile(direct.p, params.a);
    for (int j = 1; j <= 2 * params.ell; ++j) h2l_ += 1.0 / j;
    fact_ = 1.0;
    for (int j = 2; j <= 2 * params.ell + 1; ++j) fact_ *= j;
  }

  const MFunctionParams& params() const { return params_; }

  double k_at(Complex lambda, Complex* out_k = nullptr) const {
    const Complex k = horner(k_coeffs_, lambda);
    if (out_k != nullptr) *out_k = k;
    return std::abs(k);
  }

  Complex original(Complex lambda) const {
    if (std::signbit(lambda.imag())) return std::conj(original_upper(std::conj(lambda)));
    return original_upper(lambda);
  }

  Complex simplified(Complex lambda) const {
    if (std::signbit(lambda.imag())) return std::conj(simplified_upper(std::conj(lambda)));
    return simplified_upper(lambda);
  }

 private:
  /// Transcription of the unsimplified representation:
  /// -a k {log(-2 i s) + psi(1 - beta) - H + 2 gamma}
  /// - a k sum_j 1/(j - beta) + (i s)^(2l+1)/(2l+1)! sum_k ...
  Complex original_upper(Complex lambda) const {
    const int ell = params_.ell;
    const double a = params_.a;
    const Complex s = sqrt_lambda(lambda);
    const Complex beta = Complex(0.0, 1.0) * a / (2.0 * s);
    const Complex k = horner(k_coeffs_, lambda);

    const Complex bracket =
        std::log(Complex(0.0, -2.0) * s) + digamma(1.0 - beta) - h2l_ + 2.0 * params_.euler_gamma;
    Complex value = -a * k * bracket;

    Complex pole_sum = 0.0;
    for (int j = 1; j <= ell; ++j) pole_sum += 1.0 / (Complex(j) - beta);
    value -= a * k * pole_sum;

    Complex sum = 0.0;
    Complex poch = 1.0;  // (-ell - beta)_k, extended one factor per iteration
    double two_pow = 1.0;
    double k_fact = 1.0;
    for (int k_idx = 0; k_idx <= 2 * ell; ++k_idx) {
      if (k_idx > 0) {
        poch *= Complex(-ell + (k_idx - 1)) - beta;
        two_pow *= 2.0;
        k_fact *= k_idx;
      }
      sum += two_pow * poch / (k_fact * (2 * ell + 1 - k_idx));
    }
    value += int_pow(Complex(0.0, 1.0) * s, 2 * ell + 1) / fact_ * sum;
    return value;
  }

  /// The simplified representation:
  /// k {-a log(-2 i s) - a psi(1 - beta) - 2 gamma a + i s} + p.
  Complex simplified_upper(Complex lambda) const {
    const double a = params_.a;
    const Complex s = sqrt_lambda(lambda);
    const Complex beta = Complex(0.0, 1.0) * a / (2.0 * s);
    const Complex k = horner(k_coeffs_, lambda);
    const Complex p = horner(p_coeffs_, lambda);
    const Complex bracket = -a * std::log(Complex(0.0, -2.0) * s) - a * digamma(1.0 - beta) -
                            2.0 * params_.euler_gamma * a + Complex(0.0, 1.0) * s;
    return k * bracket + p;
  }
  static std::vector<double> lambda_profile(const LambdaPoly& poly, double a_val) {
    std::vector<double> coeffs(poly.is_zero() ? 1 : poly.degree_lambda() + 1, 0.0);
    for (const auto& [key, c] : poly.terms()) {
      coeffs[key.first] += c.to_double() * std::pow(a_val, key.second);
    }
    return coeffs;
  }

  static Complex horner(const std::vector<double>& coeffs, Complex lambda) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * lambda + *it;
    return acc;
  }

  static Complex int_pow(Complex base, int exp) {
    Complex out = 1.0;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
  }

  MFunctionParams params_;
  double h2l_;
  double fact_;
  std::vector<double> k_coeffs_;
  std::vector<double> p_coeffs_;
};

inline Complex m_original(const MFunctionParams& params, Complex lambda) {
  return MFunctionEvaluator(params).original(lambda);
}

inline Complex m_simplified(const MFunctionParams& params, Complex lambda) {
  return MFunctionEvaluator(params).simplified(lambda);
}

struct PoleProbe {
  int n = 0;
  Complex lambda;
  double abs_m = 0.0;
};

inline constexpr double kPoleProbeEps = 1e-6;

/// Probes lambda = -a^2/(4 n^2) (1 + eps) for n = 1..n_max and reports
/// |m_simplified|. Near the true poles (n > ell) the magnitude blows up;
/// for n <= ell the digamma pole is cancelled by a zero of k and the value
/// stays moderate. Reported, never asserted here.
inline std::vector<PoleProbe> pole_scan(const MFunctionParams& params, int n_max) {
  const MFunctionEvaluator evaluator(params);
  std::vector<PoleProbe> probes;
  probes.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    PoleProbe probe;
    probe.n = n;
    probe.lambda = Complex(-(params.a * params.a) / (4.0 * n * n) * (1.0 + kPoleProbeEps), 0.0);
    probe.abs_m = std::abs(evaluator.simplified(probe.lambda));
    probes.push_back(probe);
  }
  return probes;
}

}  // namespace mfpoly
