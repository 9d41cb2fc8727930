#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mfpoly/real_form.hpp"

namespace mfpoly {

// Cross-validation harness: run both routes over a range of ell, demand
// exact agreement and all structural identities, and record timings.

struct EllCheck {
  int ell = 0;
  bool routes_agree = false;
  bool imag_residual_zero = false;
  bool imag_identity_zero = false;
  bool zero_at_zero_coupling = false;
  bool degree_parity_ok = false;
  double millis_direct = 0.0;
  double millis_real = 0.0;
  std::string diff;  // rendered polynomials when the routes disagree

  bool ok() const {
    return routes_agree && imag_residual_zero && imag_identity_zero &&
           zero_at_zero_coupling && degree_parity_ok;
  }
};

struct VerificationReport {
  int min_ell = 0;
  int max_ell = 0;
  std::vector<EllCheck> checks;
  bool overall = false;
};

namespace detail {

inline bool structural_ok(const DirectResult& direct) {
  const int ell = direct.ell;
  if (direct.k.degree_lambda() != ell) return false;
  if (ell == 0) return direct.r_over.is_zero() && direct.p.is_zero();
  return direct.r_over.degree_lambda() == ell && direct.p.degree_lambda() == ell &&
         direct.r_over.all_a_powers_odd() && direct.p.all_a_powers_odd() &&
         !direct.r_over.has_constant_lambda_term();
}

}  // namespace detail

inline VerificationReport cross_check(int min_ell, int max_ell) {
  VerificationReport report;
  report.min_ell = min_ell;
  report.max_ell = max_ell;
  report.overall = true;
  using clock = std::chrono::steady_clock;
  for (int ell = min_ell; ell <= max_ell; ++ell) {
    EllCheck check;
    check.ell = ell;
    try {
      const auto t0 = clock::now();
      const DirectResult direct = r_direct(ell);
      const auto t1 = clock::now();
      const RealFormResult real = r_real(ell);
      const auto t2 = clock::now();
      check.millis_direct = std::chrono::duration<double, std::milli>(t1 - t0).count();
      check.millis_real = std::chrono::duration<double, std::milli>(t2 - t1).count();

      check.imag_residual_zero = direct.imag_residual.is_zero();
      check.routes_agree = direct.r_over == real.r_over;
      if (!check.routes_agree) {
        check.diff = "direct: " + render_text(direct.r_over) + "\nreal:   " + render_text(real.r_over);
      }
      check.imag_identity_zero = imag_identity_residual(ell).is_zero();
      check.zero_at_zero_coupling = direct.r_over.at_zero_coupling().is_zero() &&
                                    direct.p.at_zero_coupling().is_zero() &&
                                    (ell == 0 || (direct.r_over.divisible_by_a() &&
                                                  direct.p.divisible_by_a()));
      check.degree_parity_ok = detail::structural_ok(direct);
    } catch (const Error& err) {
      check.diff = err.what();
    }
    report.overall = report.overall && check.ok();
    report.checks.push_back(std::move(check));
  }
  return report;
}

inline std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "ell  agree  imag0  identity  a|r  shape  ms(direct)  ms(real)\n";
  for (const EllCheck& c : report.checks) {
    out << c.ell << "  " << (c.routes_agree ? "ok" : "FAIL") << "  "
        << (c.imag_residual_zero ? "ok" : "FAIL") << "  "
        << (c.imag_identity_zero ? "ok" : "FAIL") << "  "
        << (c.zero_at_zero_coupling ? "ok" : "FAIL") << "  "
        << (c.degree_parity_ok ? "ok" : "FAIL") << "  " << c.millis_direct << "  "
        << c.millis_real << "\n";
    if (!c.diff.empty()) out << "  " << c.diff << "\n";
  }
  out << (report.overall ? "overall: PASS" : "overall: FAIL") << "\n";
  return out.str();
}

inline std::string render_json(const VerificationReport& report) {
  std::ostringstream out;
  out << "{\"min_ell\":" << report.min_ell << ",\"max_ell\":" << report.max_ell
      << ",\"overall\":" << (report.overall ? "true" : "false") << ",\"per_ell\":[";
  bool first = true;
  for (const EllCheck& c : report.checks) {
    if (!first) out << ",";
    first = false;
    out << "{\"ell\":" << c.ell << ",\"agree\":" << (c.routes_agree ? "true" : "false")
        << ",\"imag_zero\":" << (c.imag_residual_zero ? "true" : "false")
        << ",\"imag_identity\":" << (c.imag_identity_zero ? "true" : "false")
        << ",\"zero_coupling\":" << (c.zero_at_zero_coupling ? "true" : "false")
        << ",\"shape\":" << (c.degree_parity_ok ? "true" : "false")
        << ",\"millis_direct\":" << c.millis_direct << ",\"millis_real\":" << c.millis_real
        << "}";
  }
  out << "]}";
  return out.str();
}

/// Byte-exact comparison of the canonical JSON renderings of r/(2l+1) and p
/// for ell = 1..4 against the golden files shipped under data/golden/.
inline bool golden_check(const std::filesystem::path& golden_dir, std::string* details = nullptr) {
  bool all_ok = true;
  auto check_one = [&](const std::string& name, const LambdaPoly& poly) {
    const std::filesystem::path path = golden_dir / name;
    std::ifstream in(path, std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    const std::string expected = content.str();
    const std::string actual = render_json(poly) + "\n";
    const bool ok = in.good() && expected == actual;
    if (!ok) {
      all_ok = false;
      if (details != nullptr) {
        *details += "mismatch for " + name + "\n  expected: " + expected +
                    "  actual:   " + actual + "\n";
      }
    }
  };
  for (int ell = 1; ell <= 4; ++ell) {
    const DirectResult direct = r_direct(ell);
    check_one("r" + std::to_string(ell) + ".json", direct.r_over);
    check_one("p" + std::to_string(ell) + ".json", direct.p);
  }
  return all_ok;
}

}  // namespace mfpoly
