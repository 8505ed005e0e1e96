#include "fockcb/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fockcb {

json poly_to_json(const LaurentPoly& p) {
  return json{{"lo", p.lo()}, {"coeffs", p.coeffs()}};
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("coeffs"))
    throw BadInputError("coefficient JSON must be {\"lo\":int,\"coeffs\":[...]}");
  return LaurentPoly::from_coeffs(j.at("lo").get<int>(),
                                  j.at("coeffs").get<std::vector<coeff_t>>());
}

json symbol_to_json(const Symbol& s, bool with_rows) {
  json rows = json::array();
  for (const auto& r : s.rows()) rows.push_back(r.parts());
  json out{{"multicharge", s.multicharge().charges()}, {"multipartition", rows}};
  if (with_rows) {
    const int wl = s.common_window_low();
    json windowed = json::array();
    for (int i = 1; i <= s.level(); ++i) windowed.push_back(s.row_entries(i, wl));
    out["rows"] = windowed;
    out["window_low"] = wl;
  }
  return out;
}

Symbol symbol_from_json(const json& j) {
  if (!j.is_object() || !j.contains("multicharge") || !j.contains("multipartition"))
    throw BadInputError("symbol JSON must carry multicharge and multipartition");
  Multicharge v(j.at("multicharge").get<std::vector<int>>());
  std::vector<Partition> rows;
  for (const auto& r : j.at("multipartition")) rows.emplace_back(r.get<std::vector<int>>());
  return Symbol(std::move(v), std::move(rows));
}

json vector_to_json(const FockVector& x) {
  json terms = json::array();
  for (const auto& [sym, c] : x.terms()) {
    json rows = json::array();
    for (const auto& r : sym.rows()) rows.push_back(r.parts());
    terms.push_back(json{{"multipartition", rows}, {"coeff", poly_to_json(c)}});
  }
  return json{{"multicharge", x.multicharge().charges()}, {"terms", terms}};
}

FockVector vector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("multicharge") || !j.contains("terms"))
    throw BadInputError("vector JSON must carry multicharge and terms");
  Multicharge v(j.at("multicharge").get<std::vector<int>>());
  FockVector x(v);
  for (const auto& t : j.at("terms")) {
    std::vector<Partition> rows;
    for (const auto& r : t.at("multipartition")) rows.emplace_back(r.get<std::vector<int>>());
    x.add_term(Symbol(v, std::move(rows)), poly_from_json(t.at("coeff")));
  }
  return x;
}

json expansion_to_json(const CanonicalExpansion& e, bool with_rows) {
  json out = vector_to_json(e.vector);
  out["source"] = symbol_to_json(e.source, with_rows);
  out["method"] = method_name(e.method);
  return out;
}

namespace {

std::string cache_path(const std::string& dir, const BlockKey& key) {
  std::ostringstream name;
  name << "block-" << std::hex << key.stable_hash() << ".json";
  return (std::filesystem::path(dir) / name.str()).string();
}

}  // namespace

std::optional<std::map<Symbol, BlockExpansion, SymbolTotalLess>> load_block_cache(
    const std::string& dir, const BlockKey& key, const std::vector<Symbol>& standard_members) {
  std::ifstream in(cache_path(dir, key));
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
    if (j.at("multicharge").get<std::vector<int>>() != key.v.charges()) return std::nullopt;
    if (j.at("size").get<int>() != key.size) return std::nullopt;
    if (j.at("entries").get<std::vector<int>>() != key.entries) return std::nullopt;
    std::map<Symbol, BlockExpansion, SymbolTotalLess> out;
    for (const auto& item : j.at("expansions")) {
      Symbol source = symbol_from_json(item.at("source"));
      BlockExpansion be;
      be.vector = vector_from_json(item.at("terms"));
      for (const auto& step : item.at("word")) {
        be.word.steps.emplace_back(step.at(0).get<int>(), step.at(1).get<int>());
      }
      out.emplace(std::move(source), std::move(be));
    }
    for (const auto& s : standard_members)
      if (!out.count(s)) return std::nullopt;
    return out;
  } catch (...) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void save_block_cache(const std::string& dir, const BlockResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  json expansions = json::array();
  for (const auto& [source, be] : result.expansions) {
    json word = json::array();
    for (const auto& [letter, a] : be.word.steps) word.push_back(json::array({letter, a}));
    expansions.push_back(json{{"source", symbol_to_json(source)},
                              {"terms", vector_to_json(be.vector)},
                              {"word", word}});
  }
  json j{{"format", "fockcb-block-cache-v1"},
         {"multicharge", result.key.v.charges()},
         {"size", result.key.size},
         {"entries", result.key.entries},
         {"expansions", expansions}};
  std::ofstream out(cache_path(dir, result.key));
  out << j.dump(1) << "\n";
}

}  // namespace fockcb
