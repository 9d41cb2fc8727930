#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "mfpoly/lambda_poly.hpp"

namespace mfpoly {

// Polynomial rendering. All formats emit terms in a deterministic canonical
// order: descending lambda-power (or s-power) first, then descending a-power.
// The JSON form is the interchange schema:
//   {"vars":["a","lambda"],"terms":[{"a":1,"lambda":1,"num":"-1","den":"36"}]}
//   {"vars":["a","s"],"terms":[{"a":2,"s":-1,"num":"1","den":"2","inum":"1","iden":"3"}]}
// with inum/iden omitted for real coefficients.

enum class RenderFormat { text, latex, json };

namespace detail {

inline void append_symbols_text(std::string& out, bool lead, int a_exp,
                                const char* var, int var_exp) {
  auto piece = [&out, &lead](const std::string& sym) {
    if (!lead) out += "*";
    out += sym;
    lead = false;
  };
  if (a_exp == 1) piece("a");
  if (a_exp > 1 || a_exp < 0) piece("a^" + std::to_string(a_exp));
  if (var_exp == 1) piece(var);
  if (var_exp > 1 || var_exp < 0) piece(std::string(var) + "^" + std::to_string(var_exp));
}

inline std::string rational_magnitude_text(const BigRational& mag, bool has_symbols) {
  if (mag == BigRational(1) && has_symbols) return "";
  if (mag.is_integer()) return mag.numerator().str();
  return "(" + mag.str() + ")";
}

// One text term: [" + "/" - "/leading "-"] coeff "*" symbols.
inline void append_term_text(std::string& out, const BigRational& coeff, int a_exp,
                             const char* var, int var_exp) {
  const bool negative = coeff.sign() < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const BigRational mag = negative ? -coeff : coeff;
  const bool has_symbols = a_exp != 0 || var_exp != 0;
  std::string head = rational_magnitude_text(mag, has_symbols);
  out += head;
  append_symbols_text(out, head.empty(), a_exp, var, var_exp);
}

inline void append_symbols_latex(std::string& out, int a_exp, const char* var, int var_exp) {
  auto piece = [&out](const std::string& sym) {
    if (!out.empty() && out.back() != '{') out += " ";
    out += sym;
  };
  if (a_exp == 1) piece("a");
  if (a_exp > 1) piece("a^{" + std::to_string(a_exp) + "}");
  if (var_exp == 1) piece(var);
  if (var_exp > 1) piece(std::string(var) + "^{" + std::to_string(var_exp) + "}");
  // negative exponents go to the denominator side; handled by caller
}

inline void append_term_latex(std::string& out, const BigRational& coeff, int a_exp,
                              const char* var, int var_exp) {
  const bool negative = coeff.sign() < 0;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const BigRational mag = negative ? -coeff : coeff;
  std::string numerator;
  std::string denominator;
  if (!(mag.numerator() == 1) || (a_exp == 0 && var_exp <= 0)) {
    numerator = mag.numerator().str();
  }
  append_symbols_latex(numerator, a_exp, var, var_exp > 0 ? var_exp : 0);
  if (!mag.is_integer()) denominator = mag.denominator().str();
  if (var_exp < 0) {
    if (!denominator.empty()) denominator += " ";
    denominator += -var_exp == 1 ? std::string(var)
                                 : std::string(var) + "^{" + std::to_string(-var_exp) + "}";
  }
  if (numerator.empty()) numerator = "1";
  if (denominator.empty()) {
    out += numerator;
  } else {
    out += "\\frac{" + numerator + "}{" + denominator + "}";
  }
}

inline void append_json_rational(std::string& out, const BigRational& value) {
  out += "\"num\":\"" + value.numerator().str() + "\",\"den\":\"" + value.denominator().str() + "\"";
}

}  // namespace detail

inline std::string render_text(const LambdaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    detail::append_term_text(out, it->second, it->first.second, "λ", it->first.first);
  }
  return out;
}

inline std::string render_latex(const LambdaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    detail::append_term_latex(out, it->second, it->first.second, "\\lambda", it->first.first);
  }
  return out;
}

inline std::string render_json(const LambdaPoly& p) {
  std::string out = R"({"vars":["a","lambda"],"terms":[)";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out += ",";
    first = false;
    out += "{\"a\":" + std::to_string(it->first.second) +
           ",\"lambda\":" + std::to_string(it->first.first) + ",";
    detail::append_json_rational(out, it->second);
    out += "}";
  }
  out += "]}";
  return out;
}

inline std::string render_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const GaussianRational& c = it->second;
    if (c.is_real()) {
      detail::append_term_text(out, c.re(), it->first.a_exp, "s", it->first.s_exp);
    } else {
      // complex coefficient: keep it grouped, sign carried inside
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      detail::append_symbols_text(out, false, it->first.a_exp, "s", it->first.s_exp);
    }
  }
  return out;
}

inline std::string render_latex(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const GaussianRational& c = it->second;
    if (c.is_real()) {
      detail::append_term_latex(out, c.re(), it->first.a_exp, "s", it->first.s_exp);
    } else {
      if (!out.empty()) out += " + ";
      out += "\\left(" + c.re().str() + "+" + c.im().str() + "i\\right)";
      std::string symbols;
      detail::append_symbols_latex(symbols, it->first.a_exp, "s",
                                   it->first.s_exp > 0 ? it->first.s_exp : 0);
      if (it->first.s_exp < 0) {
        symbols += " s^{" + std::to_string(it->first.s_exp) + "}";
      }
      if (!symbols.empty()) out += " " + symbols;
    }
  }
  return out;
}

inline std::string render_json(const LaurentPoly& p) {
  std::string out = R"({"vars":["a","s"],"terms":[)";
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!first) out += ",";
    first = false;
    out += "{\"a\":" + std::to_string(it->first.a_exp) +
           ",\"s\":" + std::to_string(it->first.s_exp) + ",";
    detail::append_json_rational(out, it->second.re());
    if (!it->second.im().is_zero()) {
      out += ",\"inum\":\"" + it->second.im().numerator().str() +
             "\",\"iden\":\"" + it->second.im().denominator().str() + "\"";
    }
    out += "}";
  }
  out += "]}";
  return out;
}

inline std::string render(const LambdaPoly& p, RenderFormat fmt) {
  switch (fmt) {
    case RenderFormat::latex: return render_latex(p);
    case RenderFormat::json: return render_json(p);
    default: return render_text(p);
  }
}

inline std::string render(const LaurentPoly& p, RenderFormat fmt) {
  switch (fmt) {
    case RenderFormat::latex: return render_latex(p);
    case RenderFormat::json: return render_json(p);
    default: return render_text(p);
  }
}

namespace detail {

inline BigRational json_rational(const nlohmann::json& term, const char* num_key,
                                 const char* den_key) {
  if (!term.contains(num_key)) return BigRational(0);
  const std::string num = term.at(num_key).get<std::string>();
  const std::string den = term.contains(den_key) ? term.at(den_key).get<std::string>() : "1";
  return BigRational::parse(num + "/" + den);
}

inline nlohmann::json parse_json_checked(const std::string& text,
                                         const std::vector<std::string>& vars) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON polynomial");
  if (!doc.contains("vars") || doc.at("vars") != nlohmann::json(vars)) {
    throw ParseError("unexpected vars in JSON polynomial");
  }
  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw ParseError("missing terms array in JSON polynomial");
  }
  return doc;
}

}  // namespace detail

inline LambdaPoly parse_lambda_json(const std::string& text) {
  nlohmann::json doc = detail::parse_json_checked(text, {"a", "lambda"});
  LambdaPoly out;
  for (const auto& term : doc.at("terms")) {
    out += LambdaPoly::monomial(detail::json_rational(term, "num", "den"),
                                term.at("lambda").get<int>(), term.at("a").get<int>());
  }
  return out;
}

inline LaurentPoly parse_laurent_json(const std::string& text) {
  nlohmann::json doc = detail::parse_json_checked(text, {"a", "s"});
  LaurentPoly out;
  for (const auto& term : doc.at("terms")) {
    GaussianRational c(detail::json_rational(term, "num", "den"),
                       detail::json_rational(term, "inum", "iden"));
    out += LaurentPoly::monomial(std::move(c), term.at("a").get<int>(), term.at("s").get<int>());
  }
  return out;
}

}  // namespace mfpoly
