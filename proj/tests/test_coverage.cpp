#include <algorithm>
#include <set>

#include "doctest.h"
#include "nct/coverage.hpp"

using namespace nct;

TEST_CASE("intransitive coverage is subset-sum membership") {
  CHECK(covers_intransitive(5, CycleType(7, {4, 2, 1})));   // 4 + 1 = 5
  CHECK_FALSE(covers_intransitive(2, CycleType(8, {3, 5})));
  CHECK(covers_intransitive(3, CycleType(7, {3, 3, 1})));
  CHECK_THROWS_AS(covers_intransitive(0, CycleType(5, {5})), std::domain_error);
  CHECK_THROWS_AS(covers_intransitive(5, CycleType(5, {5})), std::domain_error);
  // symmetric in k <-> n-k
  for (int n : {6, 9, 12}) {
    for (const auto& t : enumerate_cycle_types(n)) {
      for (int k = 1; k < n; ++k)
        CHECK(covers_intransitive(k, t) == covers_intransitive(n - k, t));
    }
  }
}

TEST_CASE("imprimitive exact membership: worked instances") {
  CHECK(covers_imprimitive_exact(2, CycleType(8, {2, 2, 4})));
  CHECK(covers_imprimitive_exact(4, CycleType(8, {1, 3, 4})));
  CHECK_FALSE(covers_imprimitive_exact(2, CycleType(8, {3, 5})));
  CHECK_FALSE(covers_imprimitive_exact(2, CycleType(8, {1, 7})));
  // an n-cycle lies in every wreath class
  CHECK(covers_imprimitive_exact(2, CycleType(8, {8})));
  CHECK(covers_imprimitive_exact(4, CycleType(8, {8})));
  CHECK_THROWS_AS(covers_imprimitive_exact(3, CycleType(8, {8})), std::domain_error);
  CHECK_THROWS_AS(covers_imprimitive_exact(8, CycleType(8, {8})), std::domain_error);
}

TEST_CASE("covered_by_some_imprimitive: worked instances") {
  CHECK_FALSE(covered_by_some_imprimitive(CycleType(7, {1, 2, 4})).covered);  // prime degree
  auto w = covered_by_some_imprimitive(CycleType(9, {6, 3}));
  CHECK(w.covered);
  CHECK(w.block_size == 3);
  CHECK(covered_by_some_imprimitive(CycleType(8, {1, 3, 4})).covered);
}

TEST_CASE("small-k shortcut: worked instances") {
  CHECK(imprimitive_shortcut_small_k(CycleType(8, {1, 3, 4})));
  CHECK_FALSE(imprimitive_shortcut_small_k(CycleType(7, {1, 2, 4})));
  CHECK_FALSE(imprimitive_shortcut_small_k(CycleType(8, {3, 5})));
  CHECK_THROWS_AS(imprimitive_shortcut_small_k(CycleType(8, {4, 2, 2})), std::domain_error);
  CHECK_THROWS_AS(imprimitive_shortcut_small_k(CycleType(8, {1, 1, 1, 1, 4})),
                  std::domain_error);
}

TEST_CASE("shortcut, cell search and block sweep agree on gcd-1 types, n <= 24") {
  for (int n = 4; n <= 24; ++n) {
    if (is_prime(n)) continue;
    for (const auto& t : enumerate_cycle_types(n, {.max_parts = 4})) {
      int k = t.cycle_count();
      if (k < 2 || t.parts_gcd() != 1) continue;
      bool by_shortcut = imprimitive_shortcut_small_k(t);
      bool by_cells = covered_by_some_imprimitive(t).covered;
      bool by_sweep = false;
      for (i64 b : divisors(n))
        if (b > 1 && b < n && covers_imprimitive_exact(static_cast<int>(b), t)) {
          by_sweep = true;
          break;
        }
      CHECK(by_shortcut == by_cells);
      CHECK(by_cells == by_sweep);
    }
  }
}

TEST_CASE("gcd > 1 with a prime block divisor is always imprimitively covered") {
  for (int n = 4; n <= 24; ++n) {
    for (const auto& t : enumerate_cycle_types(n)) {
      int g = t.parts_gcd();
      if (g <= 1 || t.cycle_count() < 2) continue;
      int p = static_cast<int>(smallest_prime_factor(g));
      if (p < n) CHECK(covers_imprimitive_exact(p, t));
    }
  }
}

TEST_CASE("affine element types") {
  CHECK(covers_affine(7, CycleType(7, {7})));
  CHECK(covers_affine(7, CycleType(7, {1, 3, 3})));
  CHECK(covers_affine(7, CycleType(7, {1, 2, 2, 2})));
  CHECK(covers_affine(7, CycleType::identity(7)));
  CHECK(covers_affine(7, CycleType(7, {1, 6})));
  CHECK_FALSE(covers_affine(7, CycleType(7, {2, 5})));
  CHECK_FALSE(covers_affine(7, CycleType(7, {1, 1, 5})));
  CHECK_FALSE(covers_affine(7, CycleType(7, {1, 2, 4})));  // 4 does not divide 6
  CHECK_THROWS_AS(covers_affine(8, CycleType(8, {8})), std::domain_error);
}

TEST_CASE("primitive catalog: 41, 57, 37, 64") {
  auto types_of = [](int n) {
    std::set<CycleType> out;
    for (const auto& e : primitive_catalog(n).entries) out.insert(e.exceptional_type);
    return out;
  };

  auto c41 = types_of(41);
  CHECK(c41 == std::set<CycleType>{CycleType(41, {40, 1}), CycleType(41, {20, 20, 1})});

  auto c57 = types_of(57);
  CHECK(c57.count(CycleType(57, {48, 8, 1})));
  CHECK(c57.count(CycleType(57, {24, 24, 8, 1})));

  auto c37 = types_of(37);
  CHECK(c37 == std::set<CycleType>{CycleType(37, {36, 1}), CycleType(37, {18, 18, 1}),
                                   CycleType(37, {12, 12, 12, 1})});

  auto c64 = types_of(64);
  CHECK(c64.count(CycleType(64, {63, 1})));
  CHECK(c64.count(CycleType(64, {31, 31, 1, 1})));
  CHECK(c64.count(CycleType(64, {45, 15, 3, 1})));
  CHECK(c64.count(CycleType(64, {49, 7, 7, 1})));
  CHECK(c64.count(CycleType(64, {21, 21, 21, 1})));
  CHECK(c64.count(CycleType(64, {35, 21, 5, 3})));

  CHECK(primitive_catalog(41).valid);
  CHECK_FALSE(primitive_catalog(36).valid);
}

TEST_CASE("catalog entries sum to n, have part-gcd 1, and are duplicate-free") {
  for (int n = 2; n <= 200; ++n) {
    const auto& cat = primitive_catalog(n);
    std::set<CycleType> seen;
    for (const auto& e : cat.entries) {
      CHECK(e.exceptional_type.n() == n);
      CHECK(e.exceptional_type.parts_gcd() == 1);
      CHECK(seen.insert(e.exceptional_type).second);
      CHECK(e.line >= 1);
      CHECK(e.line <= 10);
    }
  }
}

TEST_CASE("class_covers dispatch") {
  auto alt8 = SubgroupClass::alternating(8);
  CHECK(class_covers(alt8, CycleType(8, {3, 5})));          // sign +1
  CHECK_FALSE(class_covers(alt8, CycleType(8, {8})));       // sign -1
  CHECK_FALSE(class_covers(alt8, CycleType(8, {6, 1, 1})));  // sign -1

  auto wc37 = SubgroupClass::primitive_wildcard(37);
  CHECK(class_covers(wc37, CycleType(37, {18, 18, 1})));
  CHECK(class_covers(wc37, CycleType(37, {37})));           // transitive by convention
  CHECK(class_covers(wc37, CycleType::identity(37)));       // identity lies everywhere
  CHECK_FALSE(class_covers(wc37, CycleType(37, {19, 17, 1})));

  auto imp2 = SubgroupClass::imprimitive(8, 2);
  CHECK_FALSE(class_covers(imp2, CycleType(8, {1, 7})));
  CHECK(class_covers(imp2, CycleType::identity(8)));

  CHECK_THROWS_AS(class_covers(alt8, CycleType(7, {7})), std::domain_error);

  // intransitive classes identify k and n-k
  auto i5 = SubgroupClass::intransitive(8, 5);
  CHECK(i5.param() == 3);
}

TEST_CASE("alternating coverage equals the sign predicate exactly") {
  for (int n : {6, 7, 10}) {
    auto alt = SubgroupClass::alternating(n);
    for (const auto& t : enumerate_cycle_types(n))
      CHECK(class_covers(alt, t) == (t.sign() == +1));
  }
}
