#include "fockcb/canonical.hpp"

#include <algorithm>
#include <functional>

#include "fockcb/json_io.hpp"

namespace fockcb {

namespace {

CanonicalExpansion good_monomial_expansion(const Symbol& s) {
  FockVector vec = monomial_vector(s.multicharge(), good_maximal_sequence(s));
  return CanonicalExpansion{s, std::move(vec), Method::good_monomial_l3};
}

}  // namespace

bool CanonicalContext::eliminate(BlockResult& result, bool reversed) const {
  result.expansions.clear();
  result.used_reversed_order = reversed;
  std::vector<Symbol> order = result.standard_members;
  if (reversed) std::reverse(order.begin(), order.end());

  for (const Symbol& t : order) {
    BlockExpansion be;
    be.word = good_maximal_sequence(t);
    be.vector = monomial_vector(result.key.v, be.word);

    for (long guard = 0;; ++guard) {
      if (guard > 200000) throw InternalError("oracle elimination did not terminate");
      // offending pivot: standard symbol != t whose coefficient is not in qZ[q];
      // take the one latest in the processing order (most recently finished)
      const Symbol* offender = nullptr;
      for (const auto& [sym, c] : be.vector.terms()) {
        if (sym == t || c.positive_valuation() || !is_standard(sym)) continue;
        if (offender == nullptr) {
          offender = &sym;
          continue;
        }
        const bool later = reversed ? total_less(sym, *offender) : total_less(*offender, sym);
        if (later) offender = &sym;
      }
      if (offender == nullptr) break;
      auto done = result.expansions.find(*offender);
      if (done == result.expansions.end()) return false;  // triangularity violated: retry
      const LaurentPoly correction = be.vector.coeff(*offender).symmetrize_correction();
      const Symbol pivot = *offender;  // copy before mutating the vector
      be.vector.add_scaled(done->second.vector, -correction);
      be.certificate.push_back(EliminationStep{pivot, correction});
    }

    if (!be.vector.coeff(t).is_one()) return false;
    for (const auto& [sym, c] : be.vector.terms())
      if (sym != t && !c.positive_valuation()) return false;
    result.expansions.emplace(t, std::move(be));
  }
  return true;
}

namespace {

// All symbols of a block, enumerated directly from the entry multiset:
// entries are assigned to rows from the largest value down, under the row
// capacities of the key's window, the per-row lower bound forced by
// partition non-negativity, and a lookahead on the distinct values left.
std::vector<Symbol> enumerate_block_members(const BlockKey& key) {
  const int level = key.v.level();
  const int window_low = key.v.charge(level) - key.size - 1;

  std::vector<std::pair<int, int>> values;  // (value, multiplicity), descending
  for (std::size_t i = 0; i < key.entries.size();) {
    std::size_t j = i;
    while (j < key.entries.size() && key.entries[j] == key.entries[i]) ++j;
    values.emplace_back(key.entries[i], static_cast<int>(j - i));
    i = j;
  }
  std::reverse(values.begin(), values.end());

  std::vector<int> distinct_after(values.size() + 1, 0);
  for (std::size_t k = values.size(); k-- > 0;)
    distinct_after[k] = distinct_after[k + 1] + 1;

  std::vector<int> capacity(static_cast<std::size_t>(level));
  for (int i = 0; i < level; ++i)
    capacity[static_cast<std::size_t>(i)] = key.v.charge(i + 1) - window_low + 1;

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(level));  // descending per row
  std::vector<Symbol> out;

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == values.size()) {
      std::vector<std::vector<int>> ascending(rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        ascending[i].assign(rows[i].rbegin(), rows[i].rend());
      out.push_back(Symbol::from_windowed_rows(ascending, window_low));
      return;
    }
    const auto [x, count] = values[k];
    std::vector<int> eligible;
    for (int i = 0; i < level; ++i) {
      const std::size_t idx = static_cast<std::size_t>(i);
      if (capacity[idx] == 0) continue;
      // x becomes the (taken+1)-th largest entry of row i: needs x >= v_i - taken
      const int taken = static_cast<int>(rows[idx].size());
      if (x < key.v.charge(i + 1) - taken) continue;
      eligible.push_back(i);
    }
    if (static_cast<int>(eligible.size()) < count) return;
    std::vector<int> chosen;
    std::function<void(std::size_t, int)> pick = [&](std::size_t from, int need) {
      if (need == 0) {
        // lookahead: every row must be fillable from the distinct values left
        for (int i = 0; i < level; ++i)
          if (capacity[static_cast<std::size_t>(i)] > distinct_after[k + 1]) return;
        rec(k + 1);
        return;
      }
      for (std::size_t e = from; e + static_cast<std::size_t>(need) <= eligible.size(); ++e) {
        const std::size_t idx = static_cast<std::size_t>(eligible[e]);
        rows[idx].push_back(x);
        --capacity[idx];
        pick(e + 1, need - 1);
        ++capacity[idx];
        rows[idx].pop_back();
      }
    };
    pick(0, count);
  };
  rec(0);
  std::sort(out.begin(), out.end(), SymbolTotalLess{});
  return out;
}

}  // namespace

std::shared_ptr<BlockResult> CanonicalContext::compute_block(const BlockKey& key) {
  auto result = std::make_shared<BlockResult>();
  result->key = key;
  result->members = enumerate_block_members(key);
  if (result->members.empty())
    throw InternalError("block key has no members");
  for (const auto& s : result->members)
    if (is_standard(s)) result->standard_members.push_back(s);

  if (opt_.cache_dir) {
    auto cached = load_block_cache(*opt_.cache_dir, key, result->standard_members);
    if (cached) {
      result->expansions = std::move(*cached);
      result->loaded_from_cache = true;
      return result;
    }
  }

  if (!eliminate(*result, /*reversed=*/false)) {
    if (!eliminate(*result, /*reversed=*/true)) {
      throw InternalError("triangularity violated in both elimination orders for block " +
                          key.entry_signature());
    }
  }

  if (opt_.cache_dir) save_block_cache(*opt_.cache_dir, *result);
  return result;
}

std::shared_ptr<const BlockResult> CanonicalContext::block_result(const Symbol& s) {
  const BlockKey key = block_key(s);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto computed = compute_block(key);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = memo_.emplace(key, std::move(computed));
  return it->second;
}

CanonicalExpansion CanonicalContext::canonical_oracle(const Symbol& s) {
  if (!is_standard(s)) throw BadInputError("canonical_oracle: symbol is not standard");
  auto block = block_result(s);
  auto it = block->expansions.find(s);
  if (it == block->expansions.end())
    throw InternalError("oracle block is missing a standard member expansion");
  return CanonicalExpansion{s, it->second.vector, Method::oracle};
}

CanonicalExpansion CanonicalContext::canonical(const Symbol& s, Method method) {
  if (!is_standard(s)) throw BadInputError("canonical: symbol is not standard");
  const ExpansionResolver resolve = [this](const Symbol& part) {
    return canonical(part, Method::auto_dispatch);
  };
  switch (method) {
    case Method::auto_dispatch: {
      if (auto split = asymptotic_split(s, s.size()); split && split->size() >= 2)
        return asymptotic_canonical(s, resolve);
      if (s.level() == 2) return lm_canonical(s);
      if (heart_check(s)) return spine_canonical(s);
      if (is_ordered(s) && has_disjoint_column_boundaries(s)) return ordered_canonical(s);
      if (s.level() == 3) return good_monomial_expansion(s);
      return canonical_oracle(s);
    }
    case Method::oracle:
      return canonical_oracle(s);
    case Method::lm2:
      return lm_canonical(s);
    case Method::asymptotic:
      return asymptotic_canonical(s, resolve);
    case Method::ordered:
      return ordered_canonical(s);
    case Method::spine:
      return spine_canonical(s);
    case Method::good_monomial_l3:
      if (s.level() != 3) throw MethodInapplicableError("level 3 required (good_monomial_l3)");
      return good_monomial_expansion(s);
    case Method::removal:
      throw MethodInapplicableError("removal maps an existing expansion, force another method");
  }
  throw InternalError("unknown method");
}

}  // namespace fockcb
