#include "fockcb/render.hpp"

#include <sstream>

namespace fockcb {

std::string method_name(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::lm2: return "lm2";
    case Method::asymptotic: return "asymptotic";
    case Method::removal: return "removal";
    case Method::good_monomial_l3: return "good_monomial_l3";
    case Method::ordered: return "ordered";
    case Method::spine: return "spine";
    case Method::auto_dispatch: return "auto";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  for (Method m : {Method::oracle, Method::lm2, Method::asymptotic, Method::removal,
                   Method::good_monomial_l3, Method::ordered, Method::spine,
                   Method::auto_dispatch}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

namespace {

std::string join_row(const Symbol& s, int i, int wl, const char* sep) {
  std::ostringstream out;
  bool first = true;
  for (int e : s.row_entries(i, wl)) {
    if (!first) out << sep;
    out << e;
    first = false;
  }
  return out.str();
}

std::string coeff_prefix(const LaurentPoly& c) {
  if (c.is_one()) return "";
  return "(" + c.to_string() + ") * ";
}

}  // namespace

std::string render_symbol_text(const Symbol& s) {
  const int wl = s.common_window_low();
  std::ostringstream out;
  for (int i = 1; i <= s.level(); ++i)
    out << "( ... " << join_row(s, i, wl, " ") << " )\n";
  return out.str();
}

std::string render_symbol_inline(const Symbol& s) {
  const int wl = s.common_window_low();
  std::ostringstream out;
  out << "[";
  for (int i = 1; i <= s.level(); ++i) {
    if (i > 1) out << " | ";
    out << "... " << join_row(s, i, wl, " ");
  }
  out << "]";
  return out.str();
}

std::string render_symbol_latex(const Symbol& s) {
  const int wl = s.common_window_low();
  std::ostringstream out;
  out << "\\begin{pmatrix}\n";
  for (int i = 1; i <= s.level(); ++i)
    out << "\\ldots & " << join_row(s, i, wl, " & ") << " \\\\\n";
  out << "\\end{pmatrix}";
  return out.str();
}

std::string render_vector_text(const FockVector& x) {
  std::ostringstream out;
  if (x.terms().empty()) {
    out << "0\n";
    return out.str();
  }
  for (const auto& [sym, c] : x.terms())
    out << coeff_prefix(c) << render_symbol_inline(sym) << "\n";
  return out.str();
}

std::string render_vector_latex(const FockVector& x) {
  if (x.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [sym, c] : x.terms()) {
    if (!first) out << "\n+ ";
    if (!c.is_one()) out << "\\left(" << c.to_string() << "\\right)";
    out << render_symbol_latex(sym);
    first = false;
  }
  return out.str();
}

std::string render_expansion_text(const CanonicalExpansion& e) {
  std::ostringstream out;
  out << "method: " << method_name(e.method) << "\n";
  out << "terms: " << e.vector.term_count() << "\n";
  out << render_vector_text(e.vector);
  return out.str();
}

std::string render_expansion_latex(const CanonicalExpansion& e) {
  std::ostringstream out;
  out << "% method: " << method_name(e.method) << "\n";
  out << "G(S) = " << render_vector_latex(e.vector) << "\n";
  return out.str();
}

}  // namespace fockcb
