// Command-line front end: compute the m-function polynomials, run the
// cross-verification harness, dump coefficient tables, evaluate the
// m-functions numerically, and benchmark. Machine-consumable output goes to
// stdout; banners and diagnostics go to stderr.
//
// Exit codes: 0 success, 1 verification/domain failure, 2 usage error.

#include <CLI11.hpp>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mfpoly/mfpoly.hpp"

namespace {

using namespace mfpoly;

RenderFormat parse_format(const std::string& name) {
  if (name == "latex") return RenderFormat::latex;
  if (name == "json") return RenderFormat::json;
  return RenderFormat::text;
}

std::string default_format() {
  const char* env = std::getenv("MFPOLY_FORMAT");
  return env != nullptr ? env : "text";
}

struct ComputeOptions {
  int ell = 1;
  std::string method = "direct";
  std::string format = default_format();
  std::string what = "rp";
  std::string output;
};

LambdaPoly p_from_r(int ell, const LambdaPoly& r_over) {
  return r_over + k_poly(ell).shifted_a(1).scaled(harmonic(2 * ell));
}

int run_compute(const ComputeOptions& opt) {
  const RenderFormat fmt = parse_format(opt.format);
  std::ostringstream out;

  LambdaPoly r_by_direct, r_by_real;
  const bool want_direct = opt.method == "direct" || opt.method == "both";
  const bool want_real = opt.method == "real" || opt.method == "both";
  if (want_direct) r_by_direct = r_direct(opt.ell).r_over;
  if (want_real) r_by_real = r_real(opt.ell).r_over;

  auto emit = [&](const char* label, const char* route, const LambdaPoly& poly) {
    std::cerr << label << (route[0] != '\0' ? std::string(" [") + route + "]" : "") << ":\n";
    out << render(poly, fmt) << "\n";
  };
  auto emit_set = [&](const char* route, const LambdaPoly& r_over) {
    if (opt.what.find('r') != std::string::npos) emit("r/(2l+1)", route, r_over);
    if (opt.what.find('p') != std::string::npos) emit("p", route, p_from_r(opt.ell, r_over));
    if (opt.what.find('k') != std::string::npos) emit("k", route, k_poly(opt.ell));
  };
  if (want_direct) emit_set(opt.method == "both" ? "direct" : "", r_by_direct);
  if (want_real) emit_set(opt.method == "both" ? "real" : "", r_by_real);

  bool agree = true;
  if (opt.method == "both") {
    agree = r_by_direct == r_by_real;
    std::cerr << (agree ? "AGREE" : "DISAGREE") << ": the two routes "
              << (agree ? "match exactly" : "produced different polynomials") << "\n";
  }

  if (!opt.output.empty()) {
    std::ofstream file(opt.output);
    file << out.str();
  } else {
    std::cout << out.str();
  }
  return agree ? 0 : 1;
}

int run_verify(int min_ell, int max_ell, bool as_json, const std::string& golden_dir) {
  const VerificationReport report = cross_check(min_ell, max_ell);
  bool golden_ok = true;
  std::string golden_details;
  if (!golden_dir.empty()) golden_ok = golden_check(golden_dir, &golden_details);
  std::cout << (as_json ? render_json(report) : render_text(report));
  if (as_json) std::cout << "\n";
  if (!golden_dir.empty()) {
    std::cerr << (golden_ok ? "golden files: ok" : "golden files: MISMATCH\n" + golden_details)
              << "\n";
  }
  return report.overall && golden_ok ? 0 : 1;
}

int run_tables(int ell, const std::string& which) {
  std::string out;
  if (which == "alpha" || which == "both") {
    const AlphaTable alpha = AlphaTable::build(ell);
    out += "{\"table\":\"alpha\",\"ell\":" + std::to_string(ell) + ",\"rows\":[";
    for (int k = 0; k <= 2 * ell; ++k) {
      if (k > 0) out += ",";
      out += "[";
      for (int n = 0; n <= k; ++n) {
        if (n > 0) out += ",";
        out += "\"" + alpha.at(k, n).str() + "\"";
      }
      out += "]";
    }
    out += "]}\n";
  }
  if (which == "gamma" || which == "both") {
    if (ell < 1) {
      std::cerr << "gamma table requires ell >= 1\n";
      return 1;
    }
    const GammaTable gamma = GammaTable::build(ell);
    out += "{\"table\":\"gamma\",\"ell\":" + std::to_string(ell) + ",\"rows\":[";
    for (int m = 1; m <= ell; ++m) {
      if (m > 1) out += ",";
      out += "{\"m\":" + std::to_string(m) + ",\"coeffs\":[";
      for (int n = 0; n < ell; ++n) {
        if (n > 0) out += ",";
        out += render_json(gamma.at(m, n));
      }
      out += "]}";
    }
    out += "]}\n";
  }
  std::cout << out;
  return 0;
}

int run_eval(int ell, double a_val, const std::string& lambda_text, const std::string& formula) {
  const auto comma = lambda_text.find(',');
  if (comma == std::string::npos) {
    std::cerr << "expected --lambda \"RE,IM\"\n";
    return 2;
  }
  Complex lambda;
  try {
    lambda = Complex(std::stod(lambda_text.substr(0, comma)),
                     std::stod(lambda_text.substr(comma + 1)));
  } catch (const std::exception&) {
    std::cerr << "could not parse --lambda \"" << lambda_text << "\"\n";
    return 2;
  }
  const MFunctionEvaluator evaluator(MFunctionParams{.ell = ell, .a = a_val});
  const bool want_original = formula == "original" || formula == "both";
  const bool want_simplified = formula == "simplified" || formula == "both";
  Complex vo, vs;
  if (want_original) {
    vo = evaluator.original(lambda);
    std::printf("original\t%.17g\t%.17g\n", vo.real(), vo.imag());
  }
  if (want_simplified) {
    vs = evaluator.simplified(lambda);
    std::printf("simplified\t%.17g\t%.17g\n", vs.real(), vs.imag());
  }
  if (want_original && want_simplified) {
    const double denom = std::abs(vo);
    std::printf("reldiff\t%.17g\n", denom == 0.0 ? std::abs(vs - vo) : std::abs(vs - vo) / denom);
  }
  return 0;
}

std::size_t max_coeff_bits(const LambdaPoly& poly) {
  std::size_t bits = 0;
  for (const auto& [key, c] : poly.terms()) {
    const BigInt num = boost::multiprecision::abs(c.numerator());
    if (num != 0) bits = std::max(bits, static_cast<std::size_t>(boost::multiprecision::msb(num)) + 1);
    bits = std::max(bits, static_cast<std::size_t>(boost::multiprecision::msb(c.denominator())) + 1);
  }
  return bits;
}

int run_bench(int max_ell) {
  using clock = std::chrono::steady_clock;
  std::printf("ell\tms_direct\tms_real\tmax_coeff_bits\n");
  for (int ell = 1; ell <= max_ell; ++ell) {
    const auto t0 = clock::now();
    const DirectResult direct = r_direct(ell);
    const auto t1 = clock::now();
    const RealFormResult real = r_real(ell);
    const auto t2 = clock::now();
    if (direct.r_over != real.r_over) {
      std::cerr << "route mismatch at ell=" << ell << "\n";
      return 1;
    }
    std::printf("%d\t%.3f\t%.3f\t%zu\n", ell,
                std::chrono::duration<double, std::milli>(t1 - t0).count(),
                std::chrono::duration<double, std::milli>(t2 - t1).count(),
                max_coeff_bits(direct.r_over));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact m-function polynomial toolkit"};
  app.require_subcommand(1);

  ComputeOptions compute_opt;
  CLI::App* compute = app.add_subcommand("compute", "compute r/(2l+1), p and k for one ell");
  compute->add_option("--ell", compute_opt.ell, "angular momentum index")->required()
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--method", compute_opt.method, "direct|real|both")
      ->check(CLI::IsMember({"direct", "real", "both"}));
  compute->add_option("--format", compute_opt.format, "text|latex|json (default from MFPOLY_FORMAT)")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  compute->add_option("--what", compute_opt.what, "subset of {r,p,k} to print (default rp)");
  compute->add_option("--output", compute_opt.output, "write to file instead of stdout");

  int verify_min = 0, verify_max = 30;
  bool verify_json = false;
  std::string golden_dir;
  CLI::App* verify = app.add_subcommand("verify", "cross-check both routes over an ell range");
  verify->add_option("--max-ell", verify_max, "upper end of the range (default 30)");
  verify->add_option("--min-ell", verify_min, "lower end of the range (default 0)");
  verify->add_flag("--json", verify_json, "emit the report as JSON");
  verify->add_option("--golden", golden_dir, "also compare against golden files in this directory");

  int tables_ell = 1;
  std::string tables_which = "both";
  CLI::App* tables = app.add_subcommand("tables", "dump alpha/gamma coefficient tables as JSON");
  tables->add_option("--ell", tables_ell, "angular momentum index")->required()
      ->check(CLI::NonNegativeNumber);
  tables->add_option("--table", tables_which, "alpha|gamma|both")
      ->check(CLI::IsMember({"alpha", "gamma", "both"}));

  int eval_ell = 0;
  double eval_a = 1.0;
  std::string eval_lambda, eval_formula = "both";
  CLI::App* eval = app.add_subcommand("eval", "evaluate the m-function numerically");
  eval->add_option("--ell", eval_ell, "angular momentum index")->required()
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--a", eval_a, "coupling constant")->required();
  eval->add_option("--lambda", eval_lambda, "complex lambda as \"RE,IM\"")->required();
  eval->add_option("--formula", eval_formula, "original|simplified|both")
      ->check(CLI::IsMember({"original", "simplified", "both"}));

  int bench_max = 10;
  CLI::App* bench = app.add_subcommand("bench", "wall time and coefficient growth per ell");
  bench->add_option("--max-ell", bench_max, "largest ell to time")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_opt);
    if (verify->parsed()) {
      if (verify_min < 0 || verify_min > verify_max) {
        std::cerr << "invalid ell range\n";
        return 2;
      }
      return run_verify(verify_min, verify_max, verify_json, golden_dir);
    }
    if (tables->parsed()) return run_tables(tables_ell, tables_which);
    if (eval->parsed()) return run_eval(eval_ell, eval_a, eval_lambda, eval_formula);
    if (bench->parsed()) return run_bench(bench_max);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
