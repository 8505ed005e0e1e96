#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockcb/canonical.hpp"

namespace fockcb {

struct VerifyOptions {
  Multicharge v;
  int max_size = 0;
  std::vector<Method> methods;  // empty: every applicable closed formula
  int jobs = 1;
  std::optional<std::string> cache_dir;
};

struct MethodStats {
  long checked = 0;
  long mismatched = 0;
};

struct VerifyReport {
  bool ok = true;
  long blocks = 0;
  long standard_symbols = 0;
  long checks = 0;
  long mismatches = 0;
  std::map<Method, MethodStats> per_method;
  /// Deterministic for a fixed option set; timing lines are prefixed with '#'.
  std::string text;
};

/// Sweeps every block of every size up to max_size, compares each applicable
/// closed formula against the elimination oracle symbol by symbol.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace fockcb
