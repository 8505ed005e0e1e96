#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fockcb/combinatorics.hpp"
#include "fockcb/laurent.hpp"

namespace fockcb {

/// Finitely supported vector of the level-l Fock space: Symbol -> LaurentPoly.
/// No zero coefficients are stored; all symbols share one multicharge; terms
/// are kept in the deterministic total order.
class FockVector {
 public:
  FockVector() = default;  // placeholder state, assign before use
  explicit FockVector(Multicharge v) : charge_(std::move(v)) {}

  static FockVector unit(const Symbol& s);

  const Multicharge& multicharge() const { return charge_; }
  const std::map<Symbol, LaurentPoly, SymbolTotalLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly coeff(const Symbol& s) const;
  void add_term(const Symbol& s, const LaurentPoly& c);
  void add_scaled(const FockVector& other, const LaurentPoly& c);

  bool operator==(const FockVector& o) const {
    return charge_ == o.charge_ && terms_ == o.terms_;
  }
  bool operator!=(const FockVector& o) const { return !(*this == o); }

 private:
  Multicharge charge_;
  std::map<Symbol, LaurentPoly, SymbolTotalLess> terms_;
};

/// One symbol-level replacement set: the image symbol and the q-exponent it
/// carries under the divided-power action.
struct DividedTerm {
  Symbol image;
  int exponent;
};

/// F_i^(a) on a single symbol: all ways of replacing exactly a entries i by
/// i+1 (a row participates iff it contains i and not i+1), with exponents.
std::vector<DividedTerm> f_divided_symbol(const Symbol& s, int letter, int a);
/// E_i^(a): replaces a entries i+1 by i; exponents are the negated mirror.
std::vector<DividedTerm> e_divided_symbol(const Symbol& s, int letter, int a);

FockVector f_divided(const FockVector& x, int letter, int a);
FockVector e_divided(const FockVector& x, int letter, int a);

/// Exponent of the L_i weight action: #rows with i and not i+1, minus
/// #rows with i+1 and not i.
int weight_exponent(const Symbol& s, int letter);

/// Reduced i-signature. epsilon counts surviving "+" (capacity of the raising
/// operator), phi counts surviving "-" (capacity of the lowering operator).
/// e_position/f_position give (row, value) of the entry flipped by each.
struct Signature {
  int letter = 0;
  int epsilon = 0;
  int phi = 0;
  std::optional<std::pair<int, int>> e_position;
  std::optional<std::pair<int, int>> f_position;
};

Signature signature(const Symbol& s, int letter);

std::optional<Symbol> kashiwara_f(const Symbol& s, int letter);
std::optional<Symbol> kashiwara_e(const Symbol& s, int letter);

/// Divided-power word: (letter, multiplicity) steps, consecutive letters
/// distinct, steps applied in list order (steps[0] first).
struct GoodSequence {
  std::vector<std::pair<int, int>> steps;

  bool operator==(const GoodSequence& o) const { return steps == o.steps; }
};

/// A word building S from the vacuum with each block's raising capacity
/// exhausted before use. Deterministic: the reverse construction always picks
/// the largest letter with positive epsilon. Requires a standard symbol.
GoodSequence good_maximal_sequence(const Symbol& s);

/// Evaluates the divided-power word on the vacuum of v.
FockVector monomial_vector(const Multicharge& v, const GoodSequence& seq);

}  // namespace fockcb
