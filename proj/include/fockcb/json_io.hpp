#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fockcb/canonical.hpp"
#include "fockcb/expansion.hpp"

namespace fockcb {

using json = nlohmann::json;

json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json symbol_to_json(const Symbol& s, bool with_rows = false);
Symbol symbol_from_json(const json& j);

json vector_to_json(const FockVector& x);
FockVector vector_from_json(const json& j);

json expansion_to_json(const CanonicalExpansion& e, bool with_rows = false);

/// Block cache: one JSON file per block, content-addressed by the stable
/// hash of the key. Purely an optimization; results must be bit-identical
/// with the cache disabled.
std::optional<std::map<Symbol, BlockExpansion, SymbolTotalLess>> load_block_cache(
    const std::string& dir, const BlockKey& key, const std::vector<Symbol>& standard_members);
void save_block_cache(const std::string& dir, const BlockResult& result);

}  // namespace fockcb
