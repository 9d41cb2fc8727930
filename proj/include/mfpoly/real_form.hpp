#pragma once

#include <map>
#include <vector>

#include "mfpoly/direct.hpp"

namespace mfpoly {

// Real-form route: instead of expanding complex products and cancelling, the
// r polynomial is assembled from purely real coefficient formulas driven by
// the alpha and gamma tables. Cross-checking this against the direct route
// is the point of the whole build.

/// A_k = (-1)^(ell+1) sum_{j=0}^{floor((k-1)/2)} (-1)^j alpha(k, 2j+1)
///       (a/2)^(2j+1) lambda^(ell-j)  -- the real contribution of g_k(beta).
/// Note the odd power on (a/2): every A_k carries a as a factor.
inline LaurentPoly A_term(int ell, int k, const AlphaTable& alpha) {
  LaurentPoly out;
  const int sign_lead = (ell % 2 == 0) ? -1 : 1;  // (-1)^(ell+1)
  for (int j = 0; 2 * j + 1 <= k; ++j) {
    const BigRational& alpha_kn = alpha.at(k, 2 * j + 1);
    if (alpha_kn.is_zero()) continue;
    BigRational c = alpha_kn * rat(1, 2).pow(2 * j + 1);
    if ((j % 2 != 0) != (sign_lead < 0)) c = -c;  // (-1)^j * sign_lead
    out += LaurentPoly::monomial(GaussianRational(c), 2 * j + 1, 2 * (ell - j));
  }
  return out;
}

/// B_k = (-1)^ell sum_{j=0}^{floor(k/2)} (-1)^j alpha(k, 2j)
///       (a/2)^(2j) lambda^(ell-j) sqrt(lambda) -- the imaginary contribution.
inline LaurentPoly B_term(int ell, int k, const AlphaTable& alpha) {
  LaurentPoly out;
  const int sign_lead = (ell % 2 == 0) ? 1 : -1;  // (-1)^ell
  for (int j = 0; 2 * j <= k; ++j) {
    const BigRational& alpha_kn = alpha.at(k, 2 * j);
    if (alpha_kn.is_zero()) continue;
    BigRational c = alpha_kn * rat(1, 2).pow(2 * j);
    if ((j % 2 != 0) != (sign_lead < 0)) c = -c;
    out += LaurentPoly::monomial(GaussianRational(c), 2 * j, 2 * (ell - j) + 1);
  }
  return out;
}

/// d_j = (a/2) sum_{k=2(ell-j)+1}^{2 ell}
///       2^k (-1)^(j+1) (a/2)^(2(ell-j)) alpha(k, 2(ell-j)+1)
///       / ((2 ell + 1)! k! (2 ell + 1 - k)),
/// collected per power of lambda. Each d_j is a lambda-free polynomial in a
/// (in fact a single monomial of odd degree).
inline std::map<int, LambdaPoly> d_coeffs(int ell, const AlphaTable& alpha) {
  std::map<int, LambdaPoly> out;
  const BigRational fact_total(factorial_int(2 * ell + 1));
  for (int j = 1; j <= ell; ++j) {
    const int odd_index = 2 * (ell - j) + 1;
    BigRational scalar_sum;
    for (int k = odd_index; k <= 2 * ell; ++k) {
      const BigRational& alpha_kn = alpha.at(k, odd_index);
      if (alpha_kn.is_zero()) continue;
      BigRational term = BigRational(BigInt(1) << k) * alpha_kn /
                         (fact_total * BigRational(factorial_int(k)) * BigRational(2 * ell + 1 - k));
      scalar_sum += term;
    }
    BigRational c = scalar_sum * rat(1, 2).pow(odd_index);
    if (j % 2 == 0) c = -c;  // (-1)^(j+1)
    out.emplace(j, LambdaPoly::monomial(c, 0, odd_index));
  }
  return out;
}

/// c_j = -a 4^ell (ell!)^2 / ((2 ell + 1)!)^2 * sum_m gamma(m, j-1) / m.
inline std::map<int, LambdaPoly> c_coeffs(int ell, const GammaTable& gamma) {
  std::map<int, LambdaPoly> out;
  const BigInt fact = factorial_int(2 * ell + 1);
  const BigInt ell_fact = factorial_int(ell);
  const BigRational prefactor =
      -BigRational(BigInt(1) << (2 * ell)) * BigRational(ell_fact * ell_fact) /
      BigRational(fact * fact);
  for (int j = 1; j <= ell; ++j) {
    LambdaPoly sum;
    for (int m = 1; m <= ell; ++m) {
      sum += gamma.at(m, j - 1).scaled(rat(1, m));
    }
    out.emplace(j, sum.scaled(prefactor).shifted_a(1));
  }
  return out;
}

struct RealFormResult {
  int ell = 0;
  std::map<int, LambdaPoly> c;  // lambda-free polynomials in a
  std::map<int, LambdaPoly> d;
  LambdaPoly r_over;            // sum_j (c_j + d_j) lambda^j
};

inline RealFormResult r_real(int ell) {
  RealFormResult result;
  result.ell = ell;
  if (ell == 0) return result;  // empty sum: zero polynomial
  const AlphaTable alpha = AlphaTable::build(ell);
  const GammaTable gamma = GammaTable::build(ell);
  result.c = c_coeffs(ell, gamma);
  result.d = d_coeffs(ell, alpha);
  for (int j = 1; j <= ell; ++j) {
    result.r_over += (result.c.at(j) + result.d.at(j)).shifted_lambda(j);
  }
  return result;
}

/// The per-m factor-omitted products prod_{j != m} (4 lambda j^2 + a^2),
/// shared by the imaginary-part identity and its tests.
inline std::vector<LambdaPoly> omitted_products(int ell) {
  std::vector<LambdaPoly> factors;
  factors.reserve(ell);
  for (int j = 1; j <= ell; ++j) {
    factors.push_back(LambdaPoly::monomial(BigRational(4L * j * j), 1, 0) +
                      LambdaPoly::monomial(BigRational(1), 0, 2));
  }
  std::vector<LambdaPoly> prefix(ell + 1, LambdaPoly::one());
  std::vector<LambdaPoly> suffix(ell + 1, LambdaPoly::one());
  for (int idx = 0; idx < ell; ++idx) prefix[idx + 1] = prefix[idx] * factors[idx];
  for (int idx = ell - 1; idx >= 0; --idx) suffix[idx] = factors[idx] * suffix[idx + 1];
  std::vector<LambdaPoly> out;
  out.reserve(ell);
  for (int m = 1; m <= ell; ++m) out.push_back(prefix[m - 1] * suffix[m]);
  return out;
}

/// Residual of the imaginary-part identity
///   s k + 2 a^2 s / ((2 ell + 1)!)^2 * sum_m prod_{j != m} (4 s^2 j^2 + a^2)
///     - sum_k 2^k B_k / ((2 ell + 1)! k! (2 ell + 1 - k)),
/// which must vanish identically. Its vanishing is exactly the statement
/// that the imaginary parts of the two decomposition routes agree.
inline LaurentPoly imag_identity_residual(int ell) {
  const LaurentPoly s_mono = LaurentPoly::s();
  LaurentPoly residual = to_laurent(k_poly(ell)) * s_mono;

  if (ell >= 1) {
    LambdaPoly sum;
    for (const LambdaPoly& prod : omitted_products(ell)) sum += prod;
    const BigInt f = factorial_int(2 * ell + 1);
    residual += to_laurent(sum) *
                LaurentPoly::monomial(GaussianRational(BigRational(BigInt(2), f * f)), 2, 1);
  }

  const AlphaTable alpha = AlphaTable::build(ell);
  const BigRational fact_total(factorial_int(2 * ell + 1));
  BigRational two_pow(1);
  for (int k = 0; k <= 2 * ell; ++k) {
    const BigRational scale =
        two_pow / (fact_total * BigRational(factorial_int(k)) * BigRational(2 * ell + 1 - k));
    residual -= B_term(ell, k, alpha).scaled(GaussianRational(scale));
    two_pow *= 2;
  }
  return residual;
}

}  // namespace mfpoly
