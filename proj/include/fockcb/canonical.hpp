#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fockcb/expansion.hpp"
#include "fockcb/formulas.hpp"

namespace fockcb {

/// One correction applied during elimination: correction * G(pivot) was
/// subtracted. Corrections are bar-fixed scalars; together with the
/// divided-power word of the source they certify bar invariance.
struct EliminationStep {
  Symbol pivot;
  LaurentPoly correction;
};

struct BlockExpansion {
  FockVector vector;
  GoodSequence word;  // good maximal sequence of the source symbol
  std::vector<EliminationStep> certificate;
};

struct BlockResult {
  BlockKey key;
  std::vector<Symbol> members;           // every symbol of the block, ascending
  std::vector<Symbol> standard_members;  // ascending total order
  std::map<Symbol, BlockExpansion, SymbolTotalLess> expansions;
  bool used_reversed_order = false;
  bool loaded_from_cache = false;
};

/// Computes and memoizes canonical basis expansions. Distinct blocks may be
/// computed from different threads; the memo table takes a lock only around
/// lookup and insertion.
class CanonicalContext {
 public:
  struct Options {
    std::optional<std::string> cache_dir;  // one JSON file per block when set
  };

  CanonicalContext() = default;
  explicit CanonicalContext(Options opt) : opt_(std::move(opt)) {}

  /// Bar-invariant elimination over the divided-power words of the block.
  CanonicalExpansion canonical_oracle(const Symbol& s);

  /// Method dispatch. auto_dispatch tries, in order: asymptotic split,
  /// lm2, spine, ordered (with disjoint column boundaries), good monomial
  /// at level 3, oracle. A forced method checks its predicate.
  CanonicalExpansion canonical(const Symbol& s, Method method = Method::auto_dispatch);

  std::shared_ptr<const BlockResult> block_result(const Symbol& s);

 private:
  std::shared_ptr<BlockResult> compute_block(const BlockKey& key);
  bool eliminate(BlockResult& result, bool reversed) const;

  Options opt_;
  std::mutex mu_;
  std::map<BlockKey, std::shared_ptr<BlockResult>> memo_;
};

}  // namespace fockcb
