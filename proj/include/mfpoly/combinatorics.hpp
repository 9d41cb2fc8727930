#pragma once

#include <cassert>
#include <vector>

#include "mfpoly/lambda_poly.hpp"

namespace mfpoly {

inline BigInt factorial_int(int n) {
  assert(n >= 0);
  BigInt out = 1;
  for (int j = 2; j <= n; ++j) out *= j;
  return out;
}

inline BigRational factorial(int n) { return BigRational(factorial_int(n)); }

/// H_n = sum_{j=1}^{n} 1/j, with H_0 = 0.
inline BigRational harmonic(int n) {
  assert(n >= 0);
  BigRational out;
  for (int j = 1; j <= n; ++j) out += rat(1, j);
  return out;
}

/// Dense coefficients (ascending powers of t) of the shifted falling product
///   g_k(t) = prod_{j=0}^{k-1} (-ell + j - t),
/// the degree-k expansion of the Pochhammer symbol (-ell - t)_k.
inline std::vector<BigRational> pochhammer_shifted(int ell, int k) {
  assert(k >= 0);
  std::vector<BigRational> coeffs{BigRational(1)};
  coeffs.reserve(k + 1);
  for (int j = 0; j < k; ++j) {
    const BigRational c(-ell + j);
    std::vector<BigRational> next(coeffs.size() + 1);
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      next[n] += coeffs[n] * c;   // constant part of (c - t)
      next[n + 1] -= coeffs[n];   // the -t part
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

/// alpha(k, n) = coefficient of t^n in g_k(t), tabulated for 0 <= k <= 2*ell.
/// All entries are integers even though they are stored as rationals.
class AlphaTable {
 public:
  static AlphaTable build(int ell) {
    assert(ell >= 0);
    AlphaTable table;
    table.ell_ = ell;
    table.rows_.reserve(2 * ell + 1);
    std::vector<BigRational> row{BigRational(1)};
    for (int k = 0; k <= 2 * ell; ++k) {
      table.rows_.push_back(row);
      // extend g_k to g_{k+1} by one more linear factor (-ell + k - t)
      const BigRational c(-ell + k);
      std::vector<BigRational> next(row.size() + 1);
      for (std::size_t n = 0; n < row.size(); ++n) {
        next[n] += row[n] * c;
        next[n + 1] -= row[n];
      }
      row = std::move(next);
    }
    return table;
  }

  int ell() const { return ell_; }

  /// alpha(k, n); zero for n > k.
  const BigRational& at(int k, int n) const {
    assert(k >= 0 && k < static_cast<int>(rows_.size()));
    if (n < 0 || n > k) return zero_;
    return rows_[k][n];
  }

  const std::vector<BigRational>& row(int k) const { return rows_[k]; }

 private:
  int ell_ = 0;
  std::vector<std::vector<BigRational>> rows_;
  inline static const BigRational zero_{};
};

/// Independent route to the alpha rows: write g_k as
///   g_k(t) = (-1)^k prod_{j=1}^{k} (t - t_j),  t_j = j - 1 - ell,
/// build the monic product by the Vieta recurrence (append one root at a
/// time), and flip the overall sign. Returns ascending coefficients, which
/// must match AlphaTable::row(k) exactly.
inline std::vector<BigRational> alpha_via_elem_sym(int ell, int k) {
  assert(k >= 0);
  // monic = prod (x - t_j); coefficient of x^{k-m} is (-1)^m e_m(t_1..t_k)
  std::vector<BigRational> monic{BigRational(1)};
  monic.reserve(k + 1);
  for (int j = 1; j <= k; ++j) {
    const BigRational root(j - 1 - ell);
    std::vector<BigRational> next(monic.size() + 1);
    for (std::size_t n = 0; n < monic.size(); ++n) {
      next[n + 1] += monic[n];        // x * old
      next[n] -= monic[n] * root;     // -t_j * old
    }
    monic = std::move(next);
  }
  if (k % 2 != 0) {
    for (auto& c : monic) c = -c;
  }
  return monic;
}

/// gamma(m, n) = coefficient of lambda^n in prod_{j != m} (lambda + a^2/(4 j^2)),
/// an (ell-1)-degree polynomial in lambda whose coefficients are polynomials
/// in a^2. Stored as one lambda-polynomial per m.
class GammaTable {
 public:
  static GammaTable build(int ell) {
    assert(ell >= 1);
    GammaTable table;
    table.ell_ = ell;
    table.products_.reserve(ell);
    for (int m = 1; m <= ell; ++m) {
      LambdaPoly prod = LambdaPoly::one();
      for (int j = 1; j <= ell; ++j) {
        if (j == m) continue;
        prod *= LambdaPoly::monomial(BigRational(1), 1, 0) +
                LambdaPoly::monomial(rat(1, 4L * j * j), 0, 2);
      }
      table.products_.push_back(std::move(prod));
    }
    return table;
  }

  int ell() const { return ell_; }

  /// The full factor-omitted product for a given m (1-based).
  const LambdaPoly& product(int m) const { return products_.at(m - 1); }

  /// gamma(m, n) as a polynomial in a (lambda-free).
  LambdaPoly at(int m, int n) const { return product(m).lambda_coefficient(n); }

 private:
  int ell_ = 0;
  std::vector<LambdaPoly> products_;
};

}  // namespace mfpoly
