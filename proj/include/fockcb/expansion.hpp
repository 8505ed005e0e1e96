#pragma once

#include <optional>
#include <string>

#include "fockcb/fock.hpp"

namespace fockcb {

enum class Method {
  oracle,
  lm2,
  asymptotic,
  removal,
  good_monomial_l3,
  ordered,
  spine,
  auto_dispatch,  // dispatch sentinel, never stored in a result
};

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// Expansion of a canonical basis element in the standard basis.
/// Invariants: coefficient of source is 1, every other coefficient has
/// positive valuation, and all terms share block_key(source).
struct CanonicalExpansion {
  Symbol source;
  FockVector vector;
  Method method;
};

}  // namespace fockcb
