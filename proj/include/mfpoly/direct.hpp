#pragma once

#include <string>
#include <vector>

#include "mfpoly/combinatorics.hpp"
#include "mfpoly/io.hpp"

namespace mfpoly {

// Direct route: expand the half-line m-function decomposition in exact
// Laurent arithmetic over (a, s), split off the imaginary part (which must
// vanish identically), and read the surviving even s-powers as a polynomial
// in lambda. No rational-function arithmetic appears anywhere: the only
// divisions are by explicit nonzero scalars, and the 1/(j - beta) factors
// are realized by omitting one linear factor from a known product.

/// k polynomial: prod_{j=1}^{ell} (4 lambda j^2 + a^2) / ((2 ell + 1)!)^2,
/// with k_0 = 1.
inline LambdaPoly k_poly(int ell) {
  LambdaPoly prod = LambdaPoly::one();
  for (int j = 1; j <= ell; ++j) {
    prod *= LambdaPoly::monomial(BigRational(4L * j * j), 1, 0) +
            LambdaPoly::monomial(BigRational(1), 0, 2);
  }
  const BigInt f = factorial_int(2 * ell + 1);
  return prod.scaled(BigRational(BigInt(1), f * f));
}

/// Scaled variant K = -a (2 ell + 1) k, in its product form.
inline LambdaPoly K_product(int ell) {
  LambdaPoly prod = LambdaPoly::one();
  for (int j = 1; j <= ell; ++j) {
    prod *= LambdaPoly::monomial(BigRational(4L * j * j), 1, 0) +
            LambdaPoly::monomial(BigRational(1), 0, 2);
  }
  const BigRational scale(BigInt(-1), factorial_int(2 * ell + 1) * factorial_int(2 * ell));
  return prod.shifted_a(1).scaled(scale);
}

/// Substitutes t = beta = (a/2) i s^(-1) into a dense t-polynomial:
/// beta^n = (i/2)^n a^n s^(-n).
inline LaurentPoly beta_substitute(const std::vector<BigRational>& t_coeffs) {
  LaurentPoly out;
  BigRational half_pow(1);
  for (std::size_t n = 0; n < t_coeffs.size(); ++n) {
    if (!t_coeffs[n].is_zero()) {
      const BigRational scaled = t_coeffs[n] * half_pow;
      GaussianRational c;
      switch (n % 4) {  // i^n
        case 0: c = GaussianRational(scaled); break;
        case 1: c = GaussianRational(BigRational(0), scaled); break;
        case 2: c = GaussianRational(-scaled); break;
        default: c = GaussianRational(BigRational(0), -scaled); break;
      }
      out += LaurentPoly::monomial(c, static_cast<int>(n), -static_cast<int>(n));
    }
    half_pow *= rat(1, 2);
  }
  return out;
}

/// K in its Pochhammer form:
/// (-2 i s)^(2 ell + 1) * g_{2 ell + 1}(beta) / ((2 ell)! (2 ell + 1)!).
/// Must agree with K_product after collapsing s^2 -> lambda.
inline LaurentPoly K_pochhammer(int ell) {
  const LaurentPoly lead =
      LaurentPoly::monomial(GaussianRational(BigRational(0), BigRational(-2)), 0, 1)
          .pow(2 * ell + 1);
  const LaurentPoly poch = beta_substitute(pochhammer_shifted(ell, 2 * ell + 1));
  const BigRational scale(BigInt(1), factorial_int(2 * ell) * factorial_int(2 * ell + 1));
  return (lead * poch).scaled(GaussianRational(scale));
}

/// b = -a k, embedded into the Laurent ring. Equals K / (2 ell + 1).
inline LaurentPoly term_b(int ell) {
  return to_laurent(k_poly(ell).shifted_a(1).scaled(BigRational(-1)));
}

/// b * sum_{j=1}^{ell} 1/(j - beta), formed without any division: since
/// g_{2 ell + 1}(beta) = prod_{m=-ell}^{ell} (m - beta), each quotient is the
/// product with the (j - beta) factor omitted.
inline LaurentPoly sum_b_over_factors(int ell) {
  if (ell == 0) return LaurentPoly::zero();
  const int count = 2 * ell + 1;
  std::vector<LaurentPoly> factors;
  factors.reserve(count);
  for (int idx = 0; idx < count; ++idx) {
    factors.push_back(LaurentPoly::constant(GaussianRational(BigRational(idx - ell))) -
                      LaurentPoly::beta());
  }
  std::vector<LaurentPoly> prefix(count + 1, LaurentPoly::one());
  std::vector<LaurentPoly> suffix(count + 1, LaurentPoly::one());
  for (int idx = 0; idx < count; ++idx) prefix[idx + 1] = prefix[idx] * factors[idx];
  for (int idx = count - 1; idx >= 0; --idx) suffix[idx] = factors[idx] * suffix[idx + 1];

  LaurentPoly sum;
  for (int j = 1; j <= ell; ++j) {
    const int idx = j + ell;
    sum += prefix[idx] * suffix[idx + 1];
  }
  const LaurentPoly lead =
      LaurentPoly::monomial(GaussianRational(BigRational(0), BigRational(-2)), 0, 1)
          .pow(2 * ell + 1);
  const BigInt f = factorial_int(2 * ell + 1);
  return (lead * sum).scaled(GaussianRational(BigRational(BigInt(1), f * f)));
}

/// c term: (i s)^(2 ell + 1) / (2 ell + 1)! *
///         sum_{k=0}^{2 ell} 2^k g_k(beta) / (k! (2 ell + 1 - k)).
inline LaurentPoly term_c(int ell) {
  LaurentPoly sum;
  std::vector<BigRational> g{BigRational(1)};  // g_0
  BigRational two_pow(1);
  for (int k = 0; k <= 2 * ell; ++k) {
    const BigRational scale =
        two_pow / (BigRational(factorial_int(k)) * BigRational(2 * ell + 1 - k));
    sum += beta_substitute(g).scaled(GaussianRational(scale));
    // g_{k+1} = g_k * (-ell + k - t)
    const BigRational c(-ell + k);
    std::vector<BigRational> next(g.size() + 1);
    for (std::size_t n = 0; n < g.size(); ++n) {
      next[n] += g[n] * c;
      next[n + 1] -= g[n];
    }
    g = std::move(next);
    two_pow *= 2;
  }
  // (i s)^(2 ell + 1) = (-1)^ell i s^(2 ell + 1)
  const GaussianRational lead(BigRational(0), BigRational(ell % 2 == 0 ? 1 : -1));
  return (LaurentPoly::monomial(lead, 0, 2 * ell + 1) * sum)
      .scaled(GaussianRational(BigRational(BigInt(1), factorial_int(2 * ell + 1))));
}

struct DirectResult {
  int ell = 0;
  LambdaPoly k;
  LambdaPoly r_over;        // r / (2 ell + 1)
  LambdaPoly p;             // r / (2 ell + 1) + a k H_{2 ell}
  LaurentPoly imag_residual;  // kept as evidence; zero on success
};

/// Assembles the whole direct route. The b i s / a piece is written as
/// -k i s (exact, because b = -a k), so the symbol a is never divided by.
/// Throws NotRealValued / NotPolynomialInLambda when the expected
/// real-valuedness breaks -- that is the failure signal, not a soft state.
inline DirectResult r_direct(int ell) {
  DirectResult result;
  result.ell = ell;
  result.k = k_poly(ell);

  const LaurentPoly minus_k_is =
      to_laurent(result.k) *
      LaurentPoly::monomial(GaussianRational(BigRational(0), BigRational(-1)), 0, 1);
  const LaurentPoly assembled = sum_b_over_factors(ell) + term_c(ell) + minus_k_is;

  auto [real_part, imag_part] = assembled.split();
  if (!imag_part.is_zero()) {
    throw NotRealValued("imaginary residual at ell=" + std::to_string(ell) + ": " +
                        render_text(imag_part));
  }
  result.imag_residual = imag_part;
  result.r_over = to_lambda_poly(real_part);
  result.p = result.r_over + result.k.shifted_a(1).scaled(harmonic(2 * ell));
  return result;
}

inline LambdaPoly p_poly(int ell) { return r_direct(ell).p; }

}  // namespace mfpoly
