#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "fockcb/fock.hpp"

using namespace fockcb;

namespace {

Symbol make(std::vector<int> v, std::vector<std::vector<int>> parts) {
  std::vector<Partition> rows;
  for (auto& p : parts) rows.emplace_back(std::move(p));
  return Symbol(Multicharge(std::move(v)), std::move(rows));
}

Symbol replay(const Multicharge& v, const GoodSequence& seq) {
  Symbol u = Symbol::vacuum(v);
  for (const auto& [letter, a] : seq.steps) {
    for (int k = 0; k < a; ++k) {
      auto next = kashiwara_f(u, letter);
      REQUIRE(next.has_value());
      u = *next;
    }
  }
  return u;
}

}  // namespace

TEST_CASE("divided lowering on the rank-3 vacuum") {
  const Multicharge v({3, 3, 3});
  auto x = f_divided(FockVector::unit(Symbol::vacuum(v)), 3, 2);
  x = f_divided(x, 2, 2);
  REQUIRE(x.term_count() == 3);
  auto filled = Partition({1, 1});
  auto s = make({3, 3, 3}, {{}, {1, 1}, {1, 1}});
  auto t = make({3, 3, 3}, {{1, 1}, {}, {1, 1}});
  auto t2 = make({3, 3, 3}, {{1, 1}, {1, 1}, {}});
  CHECK(x.coeff(s) == LaurentPoly(1));
  CHECK(x.coeff(t) == LaurentPoly::q_power(1));
  CHECK(x.coeff(t2) == LaurentPoly::q_power(2));
  CHECK(s.row_entries(2, 0) == std::vector<int>{0, 1, 3, 4});
  (void)filled;
}

TEST_CASE("raising kills the vacuum") {
  const Multicharge v({2, 1});
  auto vac = FockVector::unit(Symbol::vacuum(v));
  for (int i = -3; i <= 4; ++i) CHECK(e_divided(vac, i, 1).is_zero());
}

TEST_CASE("single lowering at level 2") {
  const Multicharge v({0, 0});
  auto x = f_divided(FockVector::unit(Symbol::vacuum(v)), 0, 1);
  REQUIRE(x.term_count() == 2);
  auto in_row2 = make({0, 0}, {{}, {1}});
  auto in_row1 = make({0, 0}, {{1}, {}});
  CHECK(x.coeff(in_row2) == LaurentPoly(1));
  CHECK(x.coeff(in_row1) == LaurentPoly::q_power(1));
}

TEST_CASE("weight exponents") {
  CHECK(weight_exponent(Symbol::vacuum(Multicharge({0, 0})), 0) == 2);
  auto vac = Symbol::vacuum(Multicharge({3, 2, 1}));
  for (int i = -4; i <= 0; ++i) CHECK(weight_exponent(vac, i) == 0);
  // constant on blocks
  auto a = make({0, 0}, {{1}, {}});
  auto b = make({0, 0}, {{}, {1}});
  for (int i = -2; i <= 2; ++i) CHECK(weight_exponent(a, i) == weight_exponent(b, i));
}

TEST_CASE("signatures") {
  auto sig = signature(Symbol::vacuum(Multicharge({0, 0})), 0);
  CHECK(sig.epsilon == 0);
  CHECK(sig.phi == 2);
  REQUIRE(sig.f_position.has_value());
  CHECK(sig.f_position->first == 2);
  CHECK(sig.f_position->second == 0);
  // letters far below every cutoff cancel completely
  auto vac = Symbol::vacuum(Multicharge({3, 2, 1}));
  for (int i = -5; i <= 0; ++i) {
    auto s = signature(vac, i);
    CHECK(s.epsilon == 0);
    CHECK(s.phi == 0);
  }
}

TEST_CASE("crystal chain from the rank-3 example") {
  const Multicharge v({3, 2, 1});
  // lowering letters applied in order 2,3,3,2,1
  Symbol u = Symbol::vacuum(v);
  for (int letter : {2, 3, 3, 2, 1}) {
    auto next = kashiwara_f(u, letter);
    REQUIRE(next.has_value());
    u = *next;
  }
  auto s = make({3, 2, 1}, {{1, 1}, {2}, {1}});
  CHECK(u == s);
  CHECK(s.row_entries(1, 0) == std::vector<int>{0, 1, 3, 4});
  CHECK(s.row_entries(2, 0) == std::vector<int>{0, 1, 4});
  CHECK(s.row_entries(3, 0) == std::vector<int>{0, 2});
  CHECK(is_standard(s));
}

TEST_CASE("raising inverts lowering") {
  for (int i = -2; i <= 2; ++i) CHECK_FALSE(kashiwara_e(Symbol::vacuum(Multicharge({1, 0})), i).has_value());
  for (const auto& s : enumerate_standard_symbols(Multicharge({2, 1, 0}), 3)) {
    for (int i = -3; i <= 4; ++i) {
      auto down = kashiwara_f(s, i);
      if (down) {
        auto back = kashiwara_e(*down, i);
        REQUIRE(back.has_value());
        CHECK(*back == s);
      }
      auto up = kashiwara_e(s, i);
      if (up) {
        auto back = kashiwara_f(*up, i);
        REQUIRE(back.has_value());
        CHECK(*back == s);
      }
    }
  }
}

TEST_CASE("good maximal sequences") {
  auto s = make({3, 3, 3}, {{}, {1, 1}, {1, 1}});
  auto seq = good_maximal_sequence(s);
  REQUIRE(seq.steps.size() == 2);
  CHECK(seq.steps[0] == std::pair<int, int>{3, 2});
  CHECK(seq.steps[1] == std::pair<int, int>{2, 2});

  CHECK(good_maximal_sequence(Symbol::vacuum(Multicharge({2, 0}))).steps.empty());
  CHECK_THROWS_AS(good_maximal_sequence(make({0, 0}, {{1}, {}})), BadInputError);
}

TEST_CASE("good sequences replay and are maximal") {
  for (const auto& v : {Multicharge({3, 2, 1}), Multicharge({1, 0}), Multicharge({2, 2})}) {
    for (int n = 0; n <= 5; ++n) {
      for (const auto& s : enumerate_standard_symbols(v, n)) {
        auto seq = good_maximal_sequence(s);
        CHECK(replay(v, seq) == s);
        // consecutive letters distinct
        for (std::size_t k = 1; k < seq.steps.size(); ++k)
          CHECK(seq.steps[k - 1].first != seq.steps[k].first);
        // before each block the raising capacity of its letter is exhausted
        Symbol u = Symbol::vacuum(v);
        for (const auto& [letter, a] : seq.steps) {
          CHECK(signature(u, letter).epsilon == 0);
          for (int k = 0; k < a; ++k) u = *kashiwara_f(u, letter);
        }
      }
    }
  }
}

TEST_CASE("monomial evaluation") {
  GoodSequence word{{{3, 2}, {2, 2}}};
  auto x = monomial_vector(Multicharge({3, 3, 3}), word);
  REQUIRE(x.term_count() == 3);
  CHECK(x.coeff(make({3, 3, 3}, {{}, {1, 1}, {1, 1}})) == LaurentPoly(1));
  CHECK(x.coeff(make({3, 3, 3}, {{1, 1}, {}, {1, 1}})) == LaurentPoly::q_power(1));
  CHECK(x.coeff(make({3, 3, 3}, {{1, 1}, {1, 1}, {}})) == LaurentPoly::q_power(2));

  auto e = monomial_vector(Multicharge({1, 0}), GoodSequence{});
  REQUIRE(e.term_count() == 1);
  CHECK(e.coeff(Symbol::vacuum(Multicharge({1, 0}))) == LaurentPoly(1));
}

TEST_CASE("distant lowering operators commute") {
  std::mt19937 rng(7);
  const Multicharge v({2, 1, 0});
  for (int n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_standard_symbols(v, n)) {
      FockVector x = FockVector::unit(s);
      for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 2}, {-1, 1}, {1, 3}, {0, 3}}) {
        auto a = f_divided(f_divided(x, i, 1), j, 1);
        auto b = f_divided(f_divided(x, j, 1), i, 1);
        CHECK(a == b);
      }
    }
  }
  (void)rng;
}

TEST_CASE("divided powers match iterated lowering") {
  const Multicharge v({2, 1, 0});
  for (int n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_standard_symbols(v, n)) {
      FockVector x = FockVector::unit(s);
      for (int i = -1; i <= 3; ++i) {
        for (int a = 2; a <= 3; ++a) {
          FockVector iterated = x;
          for (int k = 0; k < a; ++k) iterated = f_divided(iterated, i, 1);
          FockVector divided = f_divided(x, i, a);
          FockVector scaled(v);
          scaled.add_scaled(divided, quantum_factorial(a));
          CHECK(iterated == scaled);
        }
      }
    }
  }
}

TEST_CASE("defining relations of the raising and lowering action") {
  // [E_i, F_j] = 0 for i != j, and [E_i, F_i] acts on a symbol by the
  // quantum integer of its weight exponent; both pin every q-power in the
  // raising and lowering formulas at once.
  auto quantum_weight = [](int w) {
    return w >= 0 ? quantum_integer(w) : -quantum_integer(-w);
  };
  for (const auto& v : {Multicharge({2, 1, 0}), Multicharge({1, 1}), Multicharge({1, 0, 0})}) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& s : enumerate_all_symbols(v, n)) {
        FockVector x = FockVector::unit(s);
        for (int i = -2; i <= 3; ++i) {
          for (int j = -2; j <= 3; ++j) {
            auto ef = e_divided(f_divided(x, j, 1), i, 1);
            auto fe = f_divided(e_divided(x, i, 1), j, 1);
            FockVector commutator(v);
            commutator.add_scaled(ef, LaurentPoly(1));
            commutator.add_scaled(fe, LaurentPoly(-1));
            FockVector expect(v);
            if (i == j) expect.add_term(s, quantum_weight(weight_exponent(s, i)));
            CHECK(commutator == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("degree-one Serre relations at the vector level") {
  const Multicharge v({2, 1, 0});
  const LaurentPoly two = quantum_integer(2);
  for (int n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_standard_symbols(v, n)) {
      FockVector x = FockVector::unit(s);
      for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, 1}, {-1, 0}}) {
        // F_i F_i F_j - [2] F_i F_j F_i + F_j F_i F_i = 0
        FockVector acc(v);
        acc.add_scaled(f_divided(f_divided(f_divided(x, j, 1), i, 1), i, 1), LaurentPoly(1));
        acc.add_scaled(f_divided(f_divided(f_divided(x, i, 1), j, 1), i, 1), -two);
        acc.add_scaled(f_divided(f_divided(f_divided(x, i, 1), i, 1), j, 1), LaurentPoly(1));
        CHECK(acc.is_zero());
        // and the mirrored relation for the raising operators
        FockVector up(v);
        up.add_scaled(e_divided(e_divided(e_divided(x, j, 1), i, 1), i, 1), LaurentPoly(1));
        up.add_scaled(e_divided(e_divided(e_divided(x, i, 1), j, 1), i, 1), -two);
        up.add_scaled(e_divided(e_divided(e_divided(x, i, 1), i, 1), j, 1), LaurentPoly(1));
        CHECK(up.is_zero());
      }
    }
  }
}

TEST_CASE("divided raising matches iterated raising") {
  const Multicharge v({2, 1, 0});
  for (int n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_all_symbols(v, n)) {
      FockVector x = FockVector::unit(s);
      for (int i = -1; i <= 3; ++i) {
        for (int a = 2; a <= 3; ++a) {
          FockVector iterated = x;
          for (int k = 0; k < a; ++k) iterated = e_divided(iterated, i, 1);
          FockVector scaled(v);
          scaled.add_scaled(e_divided(x, i, a), quantum_factorial(a));
          CHECK(iterated == scaled);
        }
      }
    }
  }
}

TEST_CASE("divided lowering transforms the entry multiset exactly") {
  const Multicharge v({2, 2, 1});
  auto sorted_entries = [](const Symbol& s, int wl) {
    std::vector<int> all;
    for (int i = 1; i <= s.level(); ++i) {
      auto es = s.row_entries(i, wl);
      all.insert(all.end(), es.begin(), es.end());
    }
    std::sort(all.begin(), all.end());
    return all;
  };
  for (int n = 0; n <= 3; ++n) {
    for (const auto& s : enumerate_standard_symbols(v, n)) {
      const int wl = s.common_window_low() - 2;
      for (int i = -2; i <= 4; ++i) {
        for (int a = 1; a <= 2; ++a) {
          auto base = sorted_entries(s, wl);
          for (const auto& term : f_divided_symbol(s, i, a)) {
            auto expect = base;
            for (int k = 0; k < a; ++k) {
              auto it = std::find(expect.begin(), expect.end(), i);
              REQUIRE(it != expect.end());
              *it = i + 1;
            }
            std::sort(expect.begin(), expect.end());
            CHECK(sorted_entries(term.image, wl) == expect);
          }
        }
      }
    }
  }
}

TEST_CASE("epsilon and phi are the iteration capacities") {
  const Multicharge v({2, 2, 1});
  for (int n = 0; n <= 5; ++n) {
    for (const auto& s : enumerate_all_symbols(v, n)) {
      for (int i = -2; i <= 4; ++i) {
        auto sig = signature(s, i);
        int up = 0;
        Symbol u = s;
        while (auto next = kashiwara_e(u, i)) {
          u = *next;
          ++up;
        }
        CHECK(up == sig.epsilon);
        int down = 0;
        u = s;
        while (auto next = kashiwara_f(u, i)) {
          u = *next;
          ++down;
        }
        CHECK(down == sig.phi);
      }
    }
  }
}

TEST_CASE("reachability from the vacuum is standardness") {
  for (const auto& v : {Multicharge({2, 1, 0}), Multicharge({1, 0})}) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& s : enumerate_all_symbols(v, n)) {
        // greedy descent by raising operators ends at the vacuum iff reachable
        Symbol u = s;
        for (;;) {
          bool moved = false;
          for (int i = u.max_entry() - 1; i >= u.common_window_low() - 1 && !moved; --i) {
            if (auto next = kashiwara_e(u, i)) {
              u = *next;
              moved = true;
            }
          }
          if (!moved) break;
        }
        CHECK((u.size() == 0) == is_standard(s));
      }
    }
  }
}
