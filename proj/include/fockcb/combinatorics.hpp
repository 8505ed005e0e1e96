#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockcb/errors.hpp"

namespace fockcb {

/// Integer partition: strictly positive, non-increasing parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// k-th part, 1-based; 0 beyond the length.
  int part(int k) const;
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return !(*this == o); }

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing tuple of integer charges v_1 >= ... >= v_l.
class Multicharge {
 public:
  Multicharge() = default;
  explicit Multicharge(std::vector<int> charges);

  int level() const { return static_cast<int>(v_.size()); }
  /// Charge of row i, 1-based.
  int charge(int i) const { return v_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& charges() const { return v_; }

  Multicharge shifted(int delta) const;

  bool operator==(const Multicharge& o) const { return v_ == o.v_; }
  bool operator!=(const Multicharge& o) const { return !(*this == o); }
  bool operator<(const Multicharge& o) const { return v_ < o.v_; }

 private:
  std::vector<int> v_;
};

/// An l-row symbol: one beta-number sequence per row. Row i with charge v_i
/// and partition lambda has entries beta_j = lambda_{v_i-j+1} + j for j <= v_i;
/// only (charge, partition) is stored, entries are derived on demand.
class Symbol {
 public:
  Symbol(Multicharge v, std::vector<Partition> rows);

  static Symbol vacuum(const Multicharge& v);
  /// Rebuild from windowed rows: rows[i] lists entries at indices
  /// window_low..v_i (so charges are inferred from the row lengths).
  static Symbol from_windowed_rows(const std::vector<std::vector<int>>& rows, int window_low);

  int level() const { return charge_.level(); }
  int size() const;
  const Multicharge& multicharge() const { return charge_; }
  int charge(int i) const { return charge_.charge(i); }
  const Partition& row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Partition>& rows() const { return rows_; }

  /// beta^i_j; valid for any j <= charge(i).
  int entry(int i, int j) const;
  /// Largest index with only vacuum entries at or below it: v_i - length(row i).
  int deviation_floor(int i) const;
  /// One index below the deepest deviation over all rows.
  int common_window_low() const;
  /// Entries beta^i_j for window_low <= j <= charge(i), ascending.
  std::vector<int> row_entries(int i, int window_low) const;
  bool row_contains(int i, int x) const;
  int max_entry() const;

  Symbol with_value_replaced(int i, int old_value, int new_value) const;
  Symbol shifted(int delta) const;

  bool operator==(const Symbol& o) const { return charge_ == o.charge_ && rows_ == o.rows_; }
  bool operator!=(const Symbol& o) const { return !(*this == o); }

 private:
  Multicharge charge_;
  std::vector<Partition> rows_;
};

/// Columns weakly increase downward: beta^i_j <= beta^{i+1}_j wherever both exist.
bool is_standard(const Symbol& s);

/// Standard, and the top entry of every column dominates the whole previous column.
bool is_ordered(const Symbol& s);

/// Every pair of adjacent columns has bottom(previous) != top(next);
/// meaningful for ordered symbols, where that is the only possible shared value.
bool has_disjoint_column_boundaries(const Symbol& s);

/// Block identifier: multicharge plus the entry multiset over a universal
/// window (two symbols of one multicharge share a key iff their full entry
/// multisets agree).
struct BlockKey {
  Multicharge v;
  int size = 0;
  std::vector<int> entries;  // ascending, over window [min charge - size - 1, ...]

  bool operator==(const BlockKey& o) const {
    return v == o.v && size == o.size && entries == o.entries;
  }
  bool operator<(const BlockKey& o) const;
  /// Stable across runs and platforms (FNV-1a over a canonical encoding).
  std::uint64_t stable_hash() const;
  /// Compact multiset rendering, e.g. "{-1^2,0,2}".
  std::string entry_signature() const;
};

BlockKey block_key(const Symbol& s);

/// All partitions of n, descending lexicographic.
std::vector<Partition> partitions_of(int n);

std::vector<Symbol> enumerate_all_symbols(const Multicharge& v, int n);
std::vector<Symbol> enumerate_standard_symbols(const Multicharge& v, int n);
std::map<BlockKey, std::vector<Symbol>> group_by_block(const std::vector<Symbol>& symbols);

Symbol shift_symbol(const Symbol& s, int delta);

/// Remove the entry x (required present) from every row; charges drop by one.
Symbol remove_entry_all_rows(const Symbol& s, int x);
/// Insert the entry x (required absent) into every row; charges rise by one.
Symbol insert_entry_all_rows(const Symbol& s, int x);

/// Prefix-sum comparison of the descending-sorted entry multisets.
/// nullopt when the prefix sums are incomparable. Requires equal block keys.
std::optional<bool> dominance_leq(const Symbol& a, const Symbol& b);

/// Deterministic total order on symbols of one multicharge: size, then the
/// prefix-sum vector of the descending-sorted entries (a linear extension of
/// dominance), then row-wise lexicographic.
bool total_less(const Symbol& a, const Symbol& b);

struct SymbolTotalLess {
  bool operator()(const Symbol& a, const Symbol& b) const { return total_less(a, b); }
};

}  // namespace fockcb
