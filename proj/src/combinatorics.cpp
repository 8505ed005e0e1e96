#include "fockcb/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace fockcb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw BadInputError("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw BadInputError("partition parts must be non-increasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int k) const {
  if (k < 1 || k > length()) return 0;
  return parts_[static_cast<std::size_t>(k - 1)];
}

Multicharge::Multicharge(std::vector<int> charges) : v_(std::move(charges)) {
  if (v_.empty()) throw BadInputError("multicharge must be nonempty");
  for (std::size_t i = 1; i < v_.size(); ++i)
    if (v_[i] > v_[i - 1]) throw BadInputError("multicharge must be weakly decreasing");
}

Multicharge Multicharge::shifted(int delta) const {
  std::vector<int> w = v_;
  for (auto& c : w) c += delta;
  return Multicharge(std::move(w));
}

Symbol::Symbol(Multicharge v, std::vector<Partition> rows)
    : charge_(std::move(v)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != charge_.level())
    throw BadInputError("multipartition length must match multicharge length");
}

Symbol Symbol::vacuum(const Multicharge& v) {
  return Symbol(v, std::vector<Partition>(static_cast<std::size_t>(v.level())));
}

int Symbol::size() const {
  int n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

int Symbol::entry(int i, int j) const {
  const int v = charge(i);
  if (j > v) throw InternalError("entry index above row charge");
  return row(i).part(v - j + 1) + j;
}

int Symbol::deviation_floor(int i) const { return charge(i) - row(i).length(); }

int Symbol::common_window_low() const {
  int w = deviation_floor(1);
  for (int i = 2; i <= level(); ++i) w = std::min(w, deviation_floor(i));
  return w - 1;
}

std::vector<int> Symbol::row_entries(int i, int window_low) const {
  std::vector<int> out;
  const int v = charge(i);
  if (window_low > v) return out;
  out.reserve(static_cast<std::size_t>(v - window_low + 1));
  for (int j = window_low; j <= v; ++j) out.push_back(entry(i, j));
  return out;
}

bool Symbol::row_contains(int i, int x) const {
  if (x <= deviation_floor(i)) return true;
  const int v = charge(i);
  for (int j = deviation_floor(i) + 1; j <= v; ++j) {
    const int e = entry(i, j);
    if (e == x) return true;
    if (e > x) return false;
  }
  return false;
}

int Symbol::max_entry() const {
  int m = entry(1, charge(1));
  for (int i = 2; i <= level(); ++i) m = std::max(m, entry(i, charge(i)));
  return m;
}

namespace {

// Reconstruct the partition of a row from its windowed entries; everything
// below the window is read as vacuum. The entries must be strictly
// increasing and sit at or above their indices.
Partition partition_from_windowed_row(int row_charge, const std::vector<int>& entries) {
  const int m = static_cast<int>(entries.size());
  for (int k = 1; k < m; ++k)
    if (entries[static_cast<std::size_t>(k)] <= entries[static_cast<std::size_t>(k - 1)])
      throw BadInputError("row entries must be strictly increasing");
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    // entry at index row_charge - k + 1 is entries[m-k]
    const int lam = entries[static_cast<std::size_t>(m - k)] - (row_charge - k + 1);
    if (lam < 0) throw BadInputError("row entries do not encode a partition");
    parts.push_back(lam);
  }
  return Partition(std::move(parts));
}

}  // namespace

Symbol Symbol::from_windowed_rows(const std::vector<std::vector<int>>& rows, int window_low) {
  if (rows.empty()) throw BadInputError("need at least one row");
  std::vector<int> charges;
  std::vector<Partition> parts;
  for (const auto& r : rows) {
    if (r.empty()) throw BadInputError("windowed rows must be nonempty");
    const int v = window_low + static_cast<int>(r.size()) - 1;
    charges.push_back(v);
    parts.push_back(partition_from_windowed_row(v, r));
  }
  return Symbol(Multicharge(std::move(charges)), std::move(parts));
}

Symbol Symbol::with_value_replaced(int i, int old_value, int new_value) const {
  const int wl = std::min({deviation_floor(i), old_value, new_value}) - 1;
  std::vector<int> entries = row_entries(i, wl);
  auto it = std::find(entries.begin(), entries.end(), old_value);
  if (it == entries.end()) throw InternalError("replaced value not present in row");
  *it = new_value;
  std::sort(entries.begin(), entries.end());
  std::vector<Partition> rows = rows_;
  rows[static_cast<std::size_t>(i - 1)] = partition_from_windowed_row(charge(i), entries);
  return Symbol(charge_, std::move(rows));
}

Symbol Symbol::shifted(int delta) const { return Symbol(charge_.shifted(delta), rows_); }

bool is_standard(const Symbol& s) {
  const int wl = s.common_window_low();
  for (int i = 1; i < s.level(); ++i) {
    for (int j = wl; j <= s.charge(i + 1); ++j) {
      if (s.entry(i, j) > s.entry(i + 1, j)) return false;
    }
  }
  return true;
}

bool is_ordered(const Symbol& s) {
  if (!is_standard(s)) return false;
  const int wl = s.common_window_low();
  for (int j = wl + 1; j <= s.charge(1); ++j) {
    const int top = s.entry(1, j);
    for (int c = 1; c <= s.level(); ++c) {
      if (j - 1 > s.charge(c)) continue;
      if (top < s.entry(c, j - 1)) return false;
    }
  }
  return true;
}

bool has_disjoint_column_boundaries(const Symbol& s) {
  const int wl = s.common_window_low();
  for (int j = wl + 1; j <= s.charge(1); ++j) {
    // bottom of column j-1 vs top of column j
    int bottom_row = 0;
    for (int c = s.level(); c >= 1; --c) {
      if (j - 1 <= s.charge(c)) {
        bottom_row = c;
        break;
      }
    }
    if (bottom_row == 0) continue;
    if (s.entry(bottom_row, j - 1) == s.entry(1, j)) return false;
  }
  return true;
}

bool BlockKey::operator<(const BlockKey& o) const {
  if (v != o.v) return v < o.v;
  if (size != o.size) return size < o.size;
  return entries < o.entries;
}

std::uint64_t BlockKey::stable_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::int64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(x >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (int c : v.charges()) mix(c);
  mix(-9999);
  mix(size);
  for (int e : entries) mix(e);
  return h;
}

std::string BlockKey::entry_signature() const {
  std::string out = "{";
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    if (out.size() > 1) out += ",";
    out += std::to_string(entries[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + "}";
}

BlockKey block_key(const Symbol& s) {
  BlockKey key;
  key.v = s.multicharge();
  key.size = s.size();
  const int wl = s.charge(s.level()) - key.size - 1;
  for (int i = 1; i <= s.level(); ++i) {
    auto es = s.row_entries(i, wl);
    key.entries.insert(key.entries.end(), es.begin(), es.end());
  }
  std::sort(key.entries.begin(), key.entries.end());
  return key;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw BadInputError("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

namespace {

void gen_symbols(const Multicharge& v, int i, int rest, std::vector<Partition>& acc,
                 std::vector<Symbol>& out) {
  if (i == v.level()) {
    if (rest == 0) out.emplace_back(v, acc);
    return;
  }
  const bool last = (i == v.level() - 1);
  for (int k = rest; k >= 0; --k) {
    if (last && k != rest) break;
    for (const auto& p : partitions_of(k)) {
      acc.push_back(p);
      gen_symbols(v, i + 1, rest - k, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Symbol> enumerate_all_symbols(const Multicharge& v, int n) {
  if (n < 0) throw BadInputError("enumerate_all_symbols: negative size");
  std::vector<Symbol> out;
  std::vector<Partition> acc;
  gen_symbols(v, 0, n, acc, out);
  return out;
}

std::vector<Symbol> enumerate_standard_symbols(const Multicharge& v, int n) {
  std::vector<Symbol> out;
  for (auto& s : enumerate_all_symbols(v, n))
    if (is_standard(s)) out.push_back(std::move(s));
  return out;
}

std::map<BlockKey, std::vector<Symbol>> group_by_block(const std::vector<Symbol>& symbols) {
  std::map<BlockKey, std::vector<Symbol>> out;
  for (const auto& s : symbols) out[block_key(s)].push_back(s);
  for (auto& [key, members] : out) std::sort(members.begin(), members.end(), SymbolTotalLess{});
  return out;
}

Symbol shift_symbol(const Symbol& s, int delta) { return s.shifted(delta); }

namespace {

Symbol edit_entry_all_rows(const Symbol& s, int x, bool insert) {
  const int wl = std::min(s.common_window_low(), x - 2);
  std::vector<int> charges;
  std::vector<Partition> rows;
  for (int i = 1; i <= s.level(); ++i) {
    std::vector<int> entries = s.row_entries(i, wl);
    if (insert) {
      if (s.row_contains(i, x))
        throw BadInputError("insert_entry_all_rows: entry already present in row " + std::to_string(i));
      entries.push_back(x);
      std::sort(entries.begin(), entries.end());
    } else {
      auto it = std::find(entries.begin(), entries.end(), x);
      if (it == entries.end())
        throw BadInputError("remove_entry_all_rows: entry missing from row " + std::to_string(i));
      entries.erase(it);
    }
    const int new_charge = s.charge(i) + (insert ? 1 : -1);
    charges.push_back(new_charge);
    rows.push_back(partition_from_windowed_row(new_charge, entries));
  }
  return Symbol(Multicharge(std::move(charges)), std::move(rows));
}

std::vector<int> sorted_entries_desc(const Symbol& s, int wl) {
  std::vector<int> all;
  for (int i = 1; i <= s.level(); ++i) {
    auto es = s.row_entries(i, wl);
    all.insert(all.end(), es.begin(), es.end());
  }
  std::sort(all.begin(), all.end(), std::greater<int>());
  return all;
}

int shared_window_low(const Symbol& a, const Symbol& b) {
  const int n = std::max(a.size(), b.size());
  return a.charge(a.level()) - n - 1;
}

}  // namespace

Symbol remove_entry_all_rows(const Symbol& s, int x) { return edit_entry_all_rows(s, x, false); }
Symbol insert_entry_all_rows(const Symbol& s, int x) { return edit_entry_all_rows(s, x, true); }

std::optional<bool> dominance_leq(const Symbol& a, const Symbol& b) {
  if (!(block_key(a) == block_key(b))) throw BadInputError("dominance_leq: block mismatch");
  const int wl = shared_window_low(a, b);
  const auto ea = sorted_entries_desc(a, wl);
  const auto eb = sorted_entries_desc(b, wl);
  long long pa = 0, pb = 0;
  bool leq = true, geq = true;
  for (std::size_t k = 0; k < ea.size(); ++k) {
    pa += ea[k];
    pb += eb[k];
    if (pa > pb) leq = false;
    if (pa < pb) geq = false;
  }
  if (leq) return true;
  if (geq) return false;
  return std::nullopt;
}

bool total_less(const Symbol& a, const Symbol& b) {
  if (a.multicharge() != b.multicharge())
    throw InternalError("total_less: multicharge mismatch");
  if (a.size() != b.size()) return a.size() < b.size();
  const int wl = shared_window_low(a, b);
  const auto ea = sorted_entries_desc(a, wl);
  const auto eb = sorted_entries_desc(b, wl);
  long long pa = 0, pb = 0;
  for (std::size_t k = 0; k < ea.size(); ++k) {
    pa += ea[k];
    pb += eb[k];
    if (pa != pb) return pa < pb;
  }
  for (int i = 1; i <= a.level(); ++i) {
    const auto ra = a.row_entries(i, wl);
    const auto rb = b.row_entries(i, wl);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace fockcb
