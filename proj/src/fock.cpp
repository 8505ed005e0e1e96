#include "fockcb/fock.hpp"

#include <algorithm>
#include <functional>

namespace fockcb {

FockVector FockVector::unit(const Symbol& s) {
  FockVector x(s.multicharge());
  x.add_term(s, LaurentPoly(1));
  return x;
}

LaurentPoly FockVector::coeff(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add_term(const Symbol& s, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (s.multicharge() != charge_) throw InternalError("FockVector: multicharge mismatch");
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void FockVector::add_scaled(const FockVector& other, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [s, a] : other.terms_) add_term(s, a * c);
}

namespace {

// Rows are classified per letter: src rows contain i but not i+1 (eligible
// for F), dst rows contain i+1 but not i (eligible for E); rows with both or
// neither are inert for the exponent counts as well.
struct RowClasses {
  std::vector<int> src;
  std::vector<int> dst;
  std::vector<bool> is_src;
  std::vector<bool> is_dst;
};

RowClasses classify_rows(const Symbol& s, int letter) {
  RowClasses rc;
  rc.is_src.assign(static_cast<std::size_t>(s.level()) + 1, false);
  rc.is_dst.assign(static_cast<std::size_t>(s.level()) + 1, false);
  for (int i = 1; i <= s.level(); ++i) {
    const bool has_i = s.row_contains(i, letter);
    const bool has_i1 = s.row_contains(i, letter + 1);
    if (has_i && !has_i1) {
      rc.src.push_back(i);
      rc.is_src[static_cast<std::size_t>(i)] = true;
    } else if (has_i1 && !has_i) {
      rc.dst.push_back(i);
      rc.is_dst[static_cast<std::size_t>(i)] = true;
    }
  }
  return rc;
}

void choose_subsets(const std::vector<int>& pool, int a, std::size_t from,
                    std::vector<int>& acc, const std::function<void(const std::vector<int>&)>& emit) {
  if (a == 0) {
    emit(acc);
    return;
  }
  for (std::size_t k = from; k + static_cast<std::size_t>(a) <= pool.size(); ++k) {
    acc.push_back(pool[k]);
    choose_subsets(pool, a - 1, k + 1, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::vector<DividedTerm> f_divided_symbol(const Symbol& s, int letter, int a) {
  if (a < 1) throw BadInputError("divided power multiplicity must be >= 1");
  std::vector<DividedTerm> out;
  const RowClasses rc = classify_rows(s, letter);
  if (static_cast<int>(rc.src.size()) < a) return out;
  std::vector<int> acc;
  choose_subsets(rc.src, a, 0, acc, [&](const std::vector<int>& chosen) {
    std::vector<bool> is_chosen(static_cast<std::size_t>(s.level()) + 1, false);
    for (int j : chosen) is_chosen[static_cast<std::size_t>(j)] = true;
    // exponent: per chosen row j, unchosen src rows below j minus dst rows below j
    int exponent = 0;
    for (int j : chosen) {
      for (int k = j + 1; k <= s.level(); ++k) {
        if (rc.is_src[static_cast<std::size_t>(k)] && !is_chosen[static_cast<std::size_t>(k)]) ++exponent;
        if (rc.is_dst[static_cast<std::size_t>(k)]) --exponent;
      }
    }
    Symbol image = s;
    for (int j : chosen) image = image.with_value_replaced(j, letter, letter + 1);
    out.push_back(DividedTerm{std::move(image), exponent});
  });
  return out;
}

std::vector<DividedTerm> e_divided_symbol(const Symbol& s, int letter, int a) {
  if (a < 1) throw BadInputError("divided power multiplicity must be >= 1");
  std::vector<DividedTerm> out;
  const RowClasses rc = classify_rows(s, letter);
  if (static_cast<int>(rc.dst.size()) < a) return out;
  std::vector<int> acc;
  choose_subsets(rc.dst, a, 0, acc, [&](const std::vector<int>& chosen) {
    std::vector<bool> is_chosen(static_cast<std::size_t>(s.level()) + 1, false);
    for (int j : chosen) is_chosen[static_cast<std::size_t>(j)] = true;
    // exponent of q is -N1: per chosen row j, count above j the src rows and
    // chosen rows (which now carry i), minus the dst rows of the source
    int n1 = 0;
    for (int j : chosen) {
      for (int k = 1; k < j; ++k) {
        if (rc.is_src[static_cast<std::size_t>(k)] || is_chosen[static_cast<std::size_t>(k)]) ++n1;
        if (rc.is_dst[static_cast<std::size_t>(k)]) --n1;
      }
    }
    Symbol image = s;
    for (int j : chosen) image = image.with_value_replaced(j, letter + 1, letter);
    out.push_back(DividedTerm{std::move(image), -n1});
  });
  return out;
}

namespace {

FockVector apply_divided(const FockVector& x, int letter, int a, bool lowering) {
  FockVector out(x.multicharge());
  for (const auto& [s, c] : x.terms()) {
    const auto terms = lowering ? f_divided_symbol(s, letter, a) : e_divided_symbol(s, letter, a);
    for (const auto& t : terms) out.add_term(t.image, c * LaurentPoly::q_power(t.exponent));
  }
  return out;
}

}  // namespace

FockVector f_divided(const FockVector& x, int letter, int a) {
  return apply_divided(x, letter, a, true);
}

FockVector e_divided(const FockVector& x, int letter, int a) {
  return apply_divided(x, letter, a, false);
}

int weight_exponent(const Symbol& s, int letter) {
  const RowClasses rc = classify_rows(s, letter);
  return static_cast<int>(rc.src.size()) - static_cast<int>(rc.dst.size());
}

Signature signature(const Symbol& s, int letter) {
  Signature sig;
  sig.letter = letter;
  // Read rows top to bottom; a row with both i and i+1 contributes a "+-"
  // pair that cancels itself, so only src ("-") and dst ("+") rows survive
  // the stack reduction.
  struct Token {
    bool plus;
    int row;
  };
  std::vector<Token> stack;
  for (int i = 1; i <= s.level(); ++i) {
    const bool has_i = s.row_contains(i, letter);
    const bool has_i1 = s.row_contains(i, letter + 1);
    if (has_i1 && !has_i) {
      stack.push_back(Token{true, i});
    } else if (has_i && !has_i1) {
      if (!stack.empty() && stack.back().plus) stack.pop_back();
      else stack.push_back(Token{false, i});
    }
  }
  for (const auto& t : stack) {
    if (t.plus) {
      ++sig.epsilon;
      if (!sig.e_position) sig.e_position = {t.row, letter + 1};  // leftmost "+"
    } else {
      ++sig.phi;
      sig.f_position = {t.row, letter};  // rightmost "-"
    }
  }
  return sig;
}

std::optional<Symbol> kashiwara_f(const Symbol& s, int letter) {
  const Signature sig = signature(s, letter);
  if (!sig.f_position) return std::nullopt;
  return s.with_value_replaced(sig.f_position->first, letter, letter + 1);
}

std::optional<Symbol> kashiwara_e(const Symbol& s, int letter) {
  const Signature sig = signature(s, letter);
  if (!sig.e_position) return std::nullopt;
  return s.with_value_replaced(sig.e_position->first, letter + 1, letter);
}

GoodSequence good_maximal_sequence(const Symbol& s) {
  if (!is_standard(s)) throw BadInputError("good_maximal_sequence: symbol is not standard");
  GoodSequence seq;
  Symbol u = s;
  while (u.size() > 0) {
    // Peel the deepest non-vacuum row at its smallest value x whose
    // predecessor is absent from that row, and raise maximally with letter
    // x-1. The raising capacity is positive: a cancelling row below would be
    // vacuum of charge x-1, forcing x-1 into row c by standardness. Letter
    // rules that ignore the row structure (e.g. largest letter with positive
    // capacity) still satisfy the exhaustion condition but their words need
    // not stay unitriangular.
    int c = 0;
    for (int i = u.level(); i >= 1; --i) {
      if (u.row(i).length() > 0) {
        c = i;
        break;
      }
    }
    if (c == 0) throw InternalError("good_maximal_sequence: positive size without deviation");
    int letter = 0;
    bool found = false;
    for (int e : u.row_entries(c, u.deviation_floor(c))) {
      if (!u.row_contains(c, e - 1)) {
        letter = e - 1;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("good_maximal_sequence: no gap in a non-vacuum row");
    const int eps = signature(u, letter).epsilon;
    if (eps == 0) throw InternalError("good_maximal_sequence: stuck on a standard symbol");
    for (int k = 0; k < eps; ++k) {
      auto next = kashiwara_e(u, letter);
      if (!next) throw InternalError("good_maximal_sequence: epsilon miscount");
      u = *next;
    }
    seq.steps.emplace_back(letter, eps);
  }
  std::reverse(seq.steps.begin(), seq.steps.end());
  return seq;
}

FockVector monomial_vector(const Multicharge& v, const GoodSequence& seq) {
  FockVector x = FockVector::unit(Symbol::vacuum(v));
  for (const auto& [letter, a] : seq.steps) {
    x = f_divided(x, letter, a);
    if (x.is_zero()) break;
  }
  return x;
}

}  // namespace fockcb
