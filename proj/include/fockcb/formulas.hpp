#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fockcb/expansion.hpp"

namespace fockcb {

/// Greedy right-to-left matching of a lower (smaller-charge) row into an
/// upper row: every source entry maps to the largest not-yet-used target
/// entry below or equal to it. Total, injective, fixes the vacuum tail.
struct PsiMap {
  int target_row = 0;  // upper row index i
  int source_row = 0;  // lower row index j, i < j
  std::map<int, int> assign;  // source entry value -> target entry value

  int apply(int source_value) const;
  /// Non-fixed (target, source) pairs, ascending by source value.
  std::vector<std::pair<int, int>> moved_pairs() const;
};

/// Entry-level injection; both entry lists are windowed from the same index,
/// target charge >= source charge.
PsiMap psi_injection(const std::vector<int>& target_entries,
                     const std::vector<int>& source_entries);

/// The map from row source_row into row target_row of s (target above source).
PsiMap psi_injection_rows(const Symbol& s, int target_row, int source_row);

/// Level-2 closed formula: one term per subset of pairs, coefficient q^|subset|.
CanonicalExpansion lm_canonical(const Symbol& s);

/// Splits the rows at every charge gap >= threshold. Returns the component
/// symbols with their multicharges (top to bottom), or nullopt if no gap.
std::optional<std::vector<Symbol>> asymptotic_split(const Symbol& s, int threshold);

using ExpansionResolver = std::function<CanonicalExpansion(const Symbol&)>;

/// Product expansion over the asymptotic split: component expansions are
/// combined by row-wise concatenation with multiplied coefficients.
/// threshold defaults to size(s).
CanonicalExpansion asymptotic_canonical(const Symbol& s, const ExpansionResolver& resolve,
                                        std::optional<int> threshold = std::nullopt);

/// Maps every term through remove_entry_all_rows (coefficients preserved).
CanonicalExpansion column_removal(const CanonicalExpansion& e, int x);
/// Inverse of column_removal, inserting x into every row of every term.
CanonicalExpansion column_lift(const CanonicalExpansion& e, int x);

/// The recursive peeling sequence of an ordered symbol, earliest building
/// step first; grouping consecutive equal values x with multiplicity a and
/// lowering letters by one gives the divided-power word below.
std::vector<int> ordered_seq(const Symbol& s);
GoodSequence ordered_monomial_word(const Symbol& s);

/// Sum over all entries of the count of strictly higher rows whose previous
/// column entry equals it.
int m_statistic(const Symbol& t);

struct OrderedTerm {
  Symbol image;
  int length;  // minimal word length of the column permutations
  int m_stat;  // M of the image
};

/// All admissible columnwise permutations of an ordered symbol with their
/// lengths and M statistics; term coefficient is q^(length - m_stat).
std::vector<OrderedTerm> ordered_terms(const Symbol& s);
CanonicalExpansion ordered_canonical(const Symbol& s);

/// Pairwise compatibility of all row matchings: psi_{k,i} = psi_{j,i} o psi_{k,j}.
bool heart_check(const Symbol& s);

/// Partition of the entries into psi-equivalence classes. Each spine is a
/// top-down tuple with one entry per row 1..k; forced vacuum spines
/// (j,...,j) for j <= vacuum_cutoff are not stored.
struct SpineDecomposition {
  int vacuum_cutoff = 0;
  std::vector<std::vector<int>> spines;  // left to right by row-1 entry
};

SpineDecomposition spines(const Symbol& s);

/// Recursive peeling of a symbol satisfying the compatibility condition:
/// (value, multiplicity) groups, earliest building step first.
std::vector<std::pair<int, int>> spine_tilde_seq(const Symbol& s);
GoodSequence spine_monomial_word(const Symbol& s);

struct SpineFormulaStats {
  long duplicate_image_events = 0;  // distinct minimal tuples sharing an image
};

/// Generalized pairing formula: sum of q^(length) over admissible spinewise
/// permutations, rows of each image being the sorted collections.
CanonicalExpansion spine_canonical(const Symbol& s, SpineFormulaStats* stats = nullptr);

}  // namespace fockcb
