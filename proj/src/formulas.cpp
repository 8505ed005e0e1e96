#include "fockcb/formulas.hpp"

#include <algorithm>
#include <set>

namespace fockcb {

int PsiMap::apply(int source_value) const {
  auto it = assign.find(source_value);
  if (it == assign.end()) throw InternalError("psi: value outside the computed window");
  return it->second;
}

std::vector<std::pair<int, int>> PsiMap::moved_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [src, tgt] : assign)
    if (src != tgt) out.emplace_back(tgt, src);
  return out;
}

PsiMap psi_injection(const std::vector<int>& target_entries,
                     const std::vector<int>& source_entries) {
  if (target_entries.size() < source_entries.size())
    throw BadInputError("psi_injection: target charge must be >= source charge");
  PsiMap psi;
  std::vector<bool> used(target_entries.size(), false);
  for (int src : source_entries) {
    // largest unused target entry <= src
    int pick = -1;
    for (std::size_t t = 0; t < target_entries.size(); ++t) {
      if (used[t]) continue;
      if (target_entries[t] > src) break;
      pick = static_cast<int>(t);
    }
    if (pick < 0) throw InternalError("psi_injection: no admissible target (window too small?)");
    used[static_cast<std::size_t>(pick)] = true;
    psi.assign[src] = target_entries[static_cast<std::size_t>(pick)];
  }
  return psi;
}

PsiMap psi_injection_rows(const Symbol& s, int target_row, int source_row) {
  if (target_row >= source_row) throw BadInputError("psi rows: target must be above source");
  const int wl = s.common_window_low();
  PsiMap psi = psi_injection(s.row_entries(target_row, wl), s.row_entries(source_row, wl));
  psi.target_row = target_row;
  psi.source_row = source_row;
  return psi;
}

CanonicalExpansion lm_canonical(const Symbol& s) {
  if (s.level() != 2) throw MethodInapplicableError("level 2 required (lm2)");
  if (!is_standard(s)) throw BadInputError("lm_canonical: symbol is not standard");
  const int wl = s.common_window_low();
  const auto pairs = psi_injection_rows(s, 1, 2).moved_pairs();
  const auto base1 = s.row_entries(1, wl);
  const auto base2 = s.row_entries(2, wl);

  FockVector vec(s.multicharge());
  const std::size_t count = pairs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    std::vector<int> r1 = base1, r2 = base2;
    int swapped = 0;
    for (std::size_t p = 0; p < count; ++p) {
      if (!(mask & (std::size_t{1} << p))) continue;
      ++swapped;
      const auto [tgt, src] = pairs[p];
      *std::find(r1.begin(), r1.end(), tgt) = src;
      *std::find(r2.begin(), r2.end(), src) = tgt;
    }
    std::sort(r1.begin(), r1.end());
    std::sort(r2.begin(), r2.end());
    vec.add_term(Symbol::from_windowed_rows({r1, r2}, wl), LaurentPoly::q_power(swapped));
  }
  return CanonicalExpansion{s, std::move(vec), Method::lm2};
}

std::optional<std::vector<Symbol>> asymptotic_split(const Symbol& s, int threshold) {
  std::vector<int> cuts;  // row indices c where a new component starts
  for (int c = 2; c <= s.level(); ++c)
    if (s.charge(c - 1) - s.charge(c) >= threshold) cuts.push_back(c);
  if (cuts.empty()) return std::nullopt;
  cuts.push_back(s.level() + 1);

  std::vector<Symbol> parts;
  int start = 1;
  for (int cut : cuts) {
    std::vector<int> charges;
    std::vector<Partition> rows;
    for (int i = start; i < cut; ++i) {
      charges.push_back(s.charge(i));
      rows.push_back(s.row(i));
    }
    parts.emplace_back(Multicharge(std::move(charges)), std::move(rows));
    start = cut;
  }
  return parts;
}

CanonicalExpansion asymptotic_canonical(const Symbol& s, const ExpansionResolver& resolve,
                                        std::optional<int> threshold) {
  if (!is_standard(s)) throw BadInputError("asymptotic_canonical: symbol is not standard");
  auto split = asymptotic_split(s, threshold.value_or(s.size()));
  if (!split || split->size() < 2)
    throw MethodInapplicableError("asymptotic split predicate (charge gap >= size)");

  std::vector<CanonicalExpansion> components;
  components.reserve(split->size());
  for (const auto& part : *split) components.push_back(resolve(part));

  FockVector vec(s.multicharge());
  std::vector<std::map<Symbol, LaurentPoly, SymbolTotalLess>::const_iterator> pos;
  // cartesian product over the component term maps
  std::function<void(std::size_t, std::vector<const Symbol*>&, LaurentPoly)> rec =
      [&](std::size_t c, std::vector<const Symbol*>& picked, LaurentPoly coeff) {
        if (c == components.size()) {
          std::vector<int> charges;
          std::vector<Partition> rows;
          for (const Symbol* part : picked) {
            for (int i = 1; i <= part->level(); ++i) {
              charges.push_back(part->charge(i));
              rows.push_back(part->row(i));
            }
          }
          vec.add_term(Symbol(Multicharge(std::move(charges)), std::move(rows)), coeff);
          return;
        }
        for (const auto& [sym, a] : components[c].vector.terms()) {
          picked.push_back(&sym);
          rec(c + 1, picked, coeff * a);
          picked.pop_back();
        }
      };
  std::vector<const Symbol*> picked;
  rec(0, picked, LaurentPoly(1));
  return CanonicalExpansion{s, std::move(vec), Method::asymptotic};
}

namespace {

CanonicalExpansion map_expansion_terms(const CanonicalExpansion& e, int x, bool insert) {
  auto edit = [&](const Symbol& s) {
    return insert ? insert_entry_all_rows(s, x) : remove_entry_all_rows(s, x);
  };
  Symbol source = edit(e.source);
  FockVector vec(source.multicharge());
  for (const auto& [sym, c] : e.vector.terms()) vec.add_term(edit(sym), c);
  return CanonicalExpansion{std::move(source), std::move(vec), Method::removal};
}

}  // namespace

CanonicalExpansion column_removal(const CanonicalExpansion& e, int x) {
  return map_expansion_terms(e, x, false);
}

CanonicalExpansion column_lift(const CanonicalExpansion& e, int x) {
  return map_expansion_terms(e, x, true);
}

std::vector<int> ordered_seq(const Symbol& s) {
  if (!is_ordered(s)) throw MethodInapplicableError("is_ordered");
  std::vector<std::pair<int, int>> peels;  // (value, multiplicity), latest building step first
  Symbol u = s;
  while (u.size() > 0) {
    const int wl = u.common_window_low();
    int pick_row = 0, pick_col = 0, pick_value = 0;
    // staircase positions, bottom row first, leftmost first
    for (int k = u.level(); k >= 1 && pick_row == 0; --k) {
      const int lo = (k == u.level()) ? wl : u.charge(k + 1) + 1;
      for (int i = lo; i <= u.charge(k); ++i) {
        const int x = u.entry(k, i);
        bool valid = true;
        for (int r = k; r <= u.level() && valid; ++r)
          if (u.row_contains(r, x - 1)) valid = false;
        if (valid) {
          pick_row = k;
          pick_col = i;
          pick_value = x;
          break;
        }
      }
    }
    if (pick_row == 0) throw InternalError("ordered_seq: no peelable entry on a nonempty symbol");
    int run = 0;
    for (int r = pick_row; r >= 1 && u.entry(r, pick_col) == pick_value; --r) ++run;
    for (int r = pick_row; r > pick_row - run; --r)
      u = u.with_value_replaced(r, pick_value, pick_value - 1);
    peels.emplace_back(pick_value, run);
  }
  std::vector<int> seq;
  for (auto it = peels.rbegin(); it != peels.rend(); ++it)
    for (int k = 0; k < it->second; ++k) seq.push_back(it->first);
  return seq;
}

GoodSequence ordered_monomial_word(const Symbol& s) {
  GoodSequence word;
  for (int x : ordered_seq(s)) {
    if (!word.steps.empty() && word.steps.back().first == x - 1) ++word.steps.back().second;
    else word.steps.emplace_back(x - 1, 1);
  }
  return word;
}

int m_statistic(const Symbol& t) {
  const int wl = t.common_window_low();
  int m = 0;
  for (int j = wl + 1; j <= t.charge(1); ++j) {
    for (int row = 1; row <= t.level() && j <= t.charge(row); ++row) {
      const int value = t.entry(row, j);
      for (int k = 1; k < row; ++k)
        if (j - 1 <= t.charge(k) && t.entry(k, j - 1) == value) ++m;
    }
  }
  return m;
}

namespace {

struct ColumnData {
  std::vector<std::vector<int>> arrangements;  // distinct multiset permutations
  std::vector<int> inversions;
};

int count_inversions(const std::vector<int>& a) {
  int inv = 0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t t = r + 1; t < a.size(); ++t)
      if (a[r] > a[t]) ++inv;
  return inv;
}

ColumnData column_arrangements(std::vector<int> sorted_values) {
  ColumnData data;
  do {
    data.arrangements.push_back(sorted_values);
    data.inversions.push_back(count_inversions(sorted_values));
  } while (std::next_permutation(sorted_values.begin(), sorted_values.end()));
  return data;
}

}  // namespace

std::vector<OrderedTerm> ordered_terms(const Symbol& s) {
  if (!is_ordered(s)) throw MethodInapplicableError("is_ordered");
  const int wl = s.common_window_low();
  const int top = s.charge(1);
  const int level = s.level();

  std::vector<int> heights;            // per column wl+1..top
  std::vector<ColumnData> columns;
  for (int j = wl + 1; j <= top; ++j) {
    int h = 0;
    std::vector<int> values;
    for (int c = 1; c <= level && j <= s.charge(c); ++c) {
      values.push_back(s.entry(c, j));
      ++h;
    }
    heights.push_back(h);
    columns.push_back(column_arrangements(std::move(values)));
  }

  std::vector<OrderedTerm> out;
  std::vector<const std::vector<int>*> chosen(columns.size(), nullptr);
  std::vector<int> last(static_cast<std::size_t>(level), wl);  // vacuum column at wl
  std::function<void(std::size_t, int)> rec = [&](std::size_t cj, int length) {
    if (cj == columns.size()) {
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(level));
      for (int c = 0; c < level; ++c) {
        rows[static_cast<std::size_t>(c)].push_back(wl);
        for (std::size_t j = 0; j < columns.size(); ++j)
          if (heights[j] > c) rows[static_cast<std::size_t>(c)].push_back((*chosen[j])[static_cast<std::size_t>(c)]);
      }
      Symbol image = Symbol::from_windowed_rows(rows, wl);
      const int m = m_statistic(image);
      out.push_back(OrderedTerm{std::move(image), length, m});
      return;
    }
    const auto& col = columns[cj];
    for (std::size_t a = 0; a < col.arrangements.size(); ++a) {
      const auto& arr = col.arrangements[a];
      bool fits = true;
      for (std::size_t r = 0; r < arr.size() && fits; ++r)
        if (arr[r] <= last[r]) fits = false;
      if (!fits) continue;
      std::vector<int> saved(arr.size());
      for (std::size_t r = 0; r < arr.size(); ++r) {
        saved[r] = last[r];
        last[r] = arr[r];
      }
      chosen[cj] = &arr;
      rec(cj + 1, length + col.inversions[a]);
      for (std::size_t r = 0; r < arr.size(); ++r) last[r] = saved[r];
    }
  };
  rec(0, 0);
  return out;
}

CanonicalExpansion ordered_canonical(const Symbol& s) {
  const auto terms = ordered_terms(s);
  FockVector vec(s.multicharge());
  int zero_exponents = 0;
  for (const auto& t : terms) {
    const int exponent = t.length - t.m_stat;
    if (exponent < 0) throw InternalError("ordered formula produced a negative exponent");
    if (exponent == 0) ++zero_exponents;
    vec.add_term(t.image, LaurentPoly::q_power(exponent));
  }
  if (zero_exponents != 1)
    throw InternalError("ordered formula: exponent 0 must occur exactly once");
  return CanonicalExpansion{s, std::move(vec), Method::ordered};
}

namespace {

// All pairwise maps over the symbol's common window, keyed by (target, source).
std::map<std::pair<int, int>, PsiMap> all_psi_maps(const Symbol& s) {
  std::map<std::pair<int, int>, PsiMap> maps;
  for (int i = 1; i < s.level(); ++i)
    for (int j = i + 1; j <= s.level(); ++j)
      maps[{i, j}] = psi_injection_rows(s, i, j);
  return maps;
}

}  // namespace

bool heart_check(const Symbol& s) {
  if (!is_standard(s)) throw BadInputError("heart_check: symbol is not standard");
  if (s.level() <= 2) return true;
  const int wl = s.common_window_low();
  const auto maps = all_psi_maps(s);
  for (int i = 1; i < s.level(); ++i) {
    for (int j = i + 1; j < s.level(); ++j) {
      for (int k = j + 1; k <= s.level(); ++k) {
        const PsiMap& ki = maps.at({i, k});
        const PsiMap& kj = maps.at({j, k});
        const PsiMap& ji = maps.at({i, j});
        for (int x : s.row_entries(k, wl)) {
          if (ki.apply(x) != ji.apply(kj.apply(x))) return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Every windowed psi-equivalence class, built bottom-up so that maximal rows
// are found first; sorted left to right by row-1 entry.
std::vector<std::vector<int>> spine_classes(const Symbol& s) {
  const int wl = s.common_window_low();
  const auto maps = all_psi_maps(s);
  std::vector<std::vector<int>> classes;
  std::set<std::pair<int, int>> claimed;  // (row, value)
  for (int k = s.level(); k >= 1; --k) {
    for (int x : s.row_entries(k, wl)) {
      if (claimed.count({k, x})) continue;
      std::vector<int> spine;
      for (int i = 1; i < k; ++i) {
        const int y = maps.at({i, k}).apply(x);
        if (!claimed.insert({i, y}).second)
          throw InternalError("spines: entry claimed by two classes");
        spine.push_back(y);
      }
      claimed.insert({k, x});
      spine.push_back(x);
      classes.push_back(std::move(spine));
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

// A spine is vacuum when it is (j,...,j) sitting entirely at vacuum indices
// and covering every row whose vacuum region reaches j.
bool is_vacuum_spine(const Symbol& s, const std::vector<int>& spine) {
  const int j = spine.front();
  const int len = static_cast<int>(spine.size());
  for (int i = 1; i <= len; ++i) {
    if (spine[static_cast<std::size_t>(i - 1)] != j) return false;
    if (j > s.deviation_floor(i)) return false;
  }
  if (len < s.level() && s.deviation_floor(len + 1) >= j) return false;
  return true;
}

}  // namespace

SpineDecomposition spines(const Symbol& s) {
  if (!heart_check(s)) throw MethodInapplicableError("condition (heart)");
  SpineDecomposition dec;
  dec.vacuum_cutoff = s.common_window_low() + 1;
  for (auto& spine : spine_classes(s))
    if (!is_vacuum_spine(s, spine)) dec.spines.push_back(std::move(spine));
  return dec;
}

std::vector<std::pair<int, int>> spine_tilde_seq(const Symbol& s) {
  if (!is_standard(s)) throw BadInputError("spine_tilde_seq: symbol is not standard");
  std::vector<std::pair<int, int>> peels;
  Symbol u = s;
  while (u.size() > 0) {
    if (!heart_check(u))
      throw InternalError("spine_tilde_seq: intermediate symbol lost the compatibility condition");
    int c = 0;
    for (int i = u.level(); i >= 1; --i) {
      if (u.row(i).length() > 0) {
        c = i;
        break;
      }
    }
    const int wl = u.common_window_low();
    int x = 0;
    bool found = false;
    for (int value : u.row_entries(c, wl)) {
      if (!u.row_contains(c, value - 1)) {
        x = value;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("spine_tilde_seq: no removable value in the deepest row");
    int c_min = c;
    while (c_min > 1 && u.row_contains(c_min - 1, x)) --c_min;
    for (int r = c_min; r <= c; ++r)
      if (!u.row_contains(r, x))
        throw InternalError("spine_tilde_seq: occurrences of the peeled value are not contiguous");
    for (int r = 1; r < c_min; ++r)
      if (u.row_contains(r, x))
        throw InternalError("spine_tilde_seq: occurrences of the peeled value are not contiguous");
    int m = 0;
    Symbol next = u;
    for (int r = c_min; r <= c; ++r) {
      if (next.row_contains(r, x - 1)) continue;
      next = next.with_value_replaced(r, x, x - 1);
      ++m;
    }
    if (m == 0) throw InternalError("spine_tilde_seq: peel made no progress");
    if (!is_standard(next))
      throw InternalError("spine_tilde_seq: peel broke standardness");
    peels.emplace_back(x, m);
    u = std::move(next);
  }
  std::reverse(peels.begin(), peels.end());
  return peels;
}

GoodSequence spine_monomial_word(const Symbol& s) {
  GoodSequence word;
  for (const auto& [x, m] : spine_tilde_seq(s)) {
    if (!word.steps.empty() && word.steps.back().first == x - 1) word.steps.back().second += m;
    else word.steps.emplace_back(x - 1, m);
  }
  return word;
}

CanonicalExpansion spine_canonical(const Symbol& s, SpineFormulaStats* stats) {
  if (!heart_check(s)) throw MethodInapplicableError("condition (heart)");
  const int wl = s.common_window_low();
  const int level = s.level();
  const auto classes = spine_classes(s);

  std::vector<ColumnData> per_spine;
  per_spine.reserve(classes.size());
  for (const auto& sp : classes) per_spine.push_back(column_arrangements(sp));

  // image (rows, window wl) -> (min length, achiever count)
  std::map<Symbol, std::pair<int, long>, SymbolTotalLess> images;
  std::vector<const std::vector<int>*> chosen(per_spine.size(), nullptr);
  std::function<void(std::size_t, int)> rec = [&](std::size_t si, int length) {
    if (si == per_spine.size()) {
      std::vector<std::vector<int>> rows(static_cast<std::size_t>(level));
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        const auto& arr = *chosen[j];
        for (std::size_t r = 0; r < arr.size(); ++r) rows[r].push_back(arr[r]);
      }
      for (auto& row : rows) {
        std::sort(row.begin(), row.end());
        for (std::size_t k = 1; k < row.size(); ++k)
          if (row[k] == row[k - 1]) return;  // repeated entry: inadmissible
      }
      Symbol image = Symbol::from_windowed_rows(rows, wl);
      auto [it, inserted] = images.emplace(std::move(image), std::make_pair(length, 1L));
      if (!inserted) {
        if (length < it->second.first) it->second = {length, 1};
        else if (length == it->second.first) ++it->second.second;
      }
      return;
    }
    const auto& sp = per_spine[si];
    for (std::size_t a = 0; a < sp.arrangements.size(); ++a) {
      chosen[si] = &sp.arrangements[a];
      rec(si + 1, length + sp.inversions[a]);
    }
  };
  rec(0, 0);

  FockVector vec(s.multicharge());
  for (const auto& [image, entry] : images) {
    const auto [length, count] = entry;
    if (count > 1 && stats) ++stats->duplicate_image_events;
    vec.add_term(image, LaurentPoly::q_power(length, static_cast<coeff_t>(count)));
  }
  return CanonicalExpansion{s, std::move(vec), Method::spine};
}

}  // namespace fockcb
