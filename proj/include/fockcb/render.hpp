#pragma once

#include <string>

#include "fockcb/expansion.hpp"

namespace fockcb {

/// One line per row, matrix layout with a leading ellipsis:
///   ( ... 0 1 3 5 )
///   ( ... 0 2 7 )
std::string render_symbol_text(const Symbol& s);

/// Compact one-line form: [... 0 1 3 5 | ... 0 2 7]
std::string render_symbol_inline(const Symbol& s);

/// pmatrix block with \ldots per row.
std::string render_symbol_latex(const Symbol& s);

std::string render_vector_text(const FockVector& x);
std::string render_vector_latex(const FockVector& x);

std::string render_expansion_text(const CanonicalExpansion& e);
std::string render_expansion_latex(const CanonicalExpansion& e);

}  // namespace fockcb
