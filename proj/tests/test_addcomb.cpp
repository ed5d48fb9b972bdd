#include <algorithm>
#include <random>

#include "doctest.h"
#include "nct/extremal.hpp"

using namespace nct;

namespace {

std::vector<int> full_group(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

// independent reference: enumerate all symmetric subsets by orbit masks
int brute_force_max(const ExtremalProblem& p) {
  std::vector<std::vector<int>> orbits;
  if (ambient_of(p.variant) == Ambient::ResiduesModN) orbits.push_back({0});
  for (int x = 1; 2 * x <= p.n; ++x) {
    std::vector<int> o{x};
    if (p.n - x != x && p.n - x <= p.n - 1) o.push_back(p.n - x);
    orbits.push_back(o);
  }
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << orbits.size()); ++mask) {
    std::vector<int> elems;
    for (size_t i = 0; i < orbits.size(); ++i)
      if (mask & (1ull << i))
        elems.insert(elems.end(), orbits[i].begin(), orbits[i].end());
    SymmetricSubset X(p.n, ambient_of(p.variant), elems);
    if (is_free(X, p)) best = std::max(best, X.size());
  }
  return best;
}

}  // namespace

TEST_CASE("symmetric subset validation") {
  CHECK_THROWS_AS(SymmetricSubset(7, Ambient::ResiduesModN, {1}), std::domain_error);
  CHECK_THROWS_AS(SymmetricSubset(7, Ambient::IntegersOneToNMinusOne, {0, 7}),
                  std::domain_error);
  SymmetricSubset ok(7, Ambient::ResiduesModN, {0, 1, 6});
  CHECK(ok.size() == 3);
  CHECK(ok.characteristic_string() == "1100001");
  // symmetric subsets of {1..n-1} for odd n have even size
  std::mt19937 rng(11);
  for (int n : {7, 9, 11, 15}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> elems;
      for (int x = 1; 2 * x <= n; ++x)
        if (rng() % 2) {
          elems.push_back(x);
          elems.push_back(n - x);
        }
      SymmetricSubset X(n, Ambient::IntegersOneToNMinusOne, elems);
      CHECK(X.size() % 2 == 0);
    }
  }
}

TEST_CASE("sumset basics") {
  std::vector<int> X{0, 2, 3, 4};
  CHECK(sumset(std::vector<int>{0}, X, 6) == X);
  CHECK(sumset(std::vector<int>{1, 2}, std::vector<int>{1, 2}, 5) ==
        std::vector<int>{2, 3, 4});
  auto z7 = full_group(7);
  CHECK(sumset(z7, z7, 7) == z7);
  CHECK(sumset(std::vector<int>{}, X, 6).empty());
}

TEST_CASE("popular sums") {
  std::vector<int> A{0, 1};
  CHECK(popular_sums(A, A, 5, 1) == sumset(A, A, 5));
  CHECK(popular_sums(A, A, 5, 2) == std::vector<int>{1});
  auto z3 = full_group(3);
  CHECK(popular_sums(z3, z3, 3, 2) == z3);  // every sum has 3 representations
}

TEST_CASE("popular sums are antitone in K") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 5 + static_cast<int>(rng() % 20);
    std::vector<int> A, B;
    for (int x = 0; x < n; ++x) {
      if (rng() % 2) A.push_back(x);
      if (rng() % 2) B.push_back(x);
    }
    std::vector<int> prev = popular_sums(A, B, n, 1);
    CHECK(prev == sumset(A, B, n));
    for (int K = 2; K <= 5; ++K) {
      auto cur = popular_sums(A, B, n, K);
      CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
      prev = cur;
    }
  }
}

TEST_CASE("Cauchy-Davenport inequality on random pairs") {
  std::mt19937 rng(13);
  for (int p : {5, 7, 11, 13}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int> A, B;
      while (A.empty())
        for (int x = 0; x < p; ++x)
          if (rng() % 2) A.push_back(x);
      while (B.empty())
        for (int x = 0; x < p; ++x)
          if (rng() % 2) B.push_back(x);
      auto S = sumset(A, B, p);
      CHECK(static_cast<int>(S.size()) >=
            std::min<int>(static_cast<int>(A.size() + B.size()) - 1, p));
    }
  }
}

TEST_CASE("additive triple counting uses ordered pairs") {
  CHECK(count_additive_triples(std::vector<int>{1, 2, 3}, 7) == 3);
  CHECK(count_additive_triples(std::vector<int>{}, 7) == 0);
  CHECK(count_additive_triples(full_group(5), 5) == 25);
}

TEST_CASE("cube sets") {
  CHECK(cube_set(1, 2, 4) == std::vector<i64>{1, 2, 3, 4, 5, 6, 7});
  CHECK(cube_set(1, 1, 1) == std::vector<i64>{1, 2, 3});
  CHECK(cube_set(0, 0, 0) == std::vector<i64>{0});
}

TEST_CASE("freeness predicates: worked instances") {
  ExtremalProblem sumfree{ExtremalVariant::CoprimeSumFree, 6};
  CHECK(is_free(SymmetricSubset(6, Ambient::ResiduesModN, {0, 2, 3, 4}), sumfree).free);

  ExtremalProblem sumfree5{ExtremalVariant::CoprimeSumFree, 5};
  auto bad = is_free(SymmetricSubset(5, Ambient::ResiduesModN, {1, 2, 3, 4}), sumfree5);
  CHECK_FALSE(bad.free);
  REQUIRE(bad.violation);
  // the witness genuinely violates: x, y, x+y all in X with gcd(x,y,n)=1
  CHECK(bad.violation->pattern.size() == 3);

  ExtremalProblem cubefree{ExtremalVariant::CoprimeCubeFree, 9};
  CHECK(is_free(SymmetricSubset(9, Ambient::IntegersOneToNMinusOne, {1, 2, 4, 5, 7, 8}),
                cubefree)
            .free);
  CHECK_THROWS_AS(is_free(SymmetricSubset(9, Ambient::ResiduesModN, {0}), cubefree),
                  std::domain_error);
}

TEST_CASE("extremal maxima: worked instances") {
  auto r6 = max_extremal({ExtremalVariant::CoprimeSumFree, 6});
  CHECK(r6.maximum == 4);
  CHECK(r6.certified);
  auto r5 = max_extremal({ExtremalVariant::CoprimeSumFree, 5});
  CHECK(r5.maximum == 2);
  auto r9 = max_extremal({ExtremalVariant::CoprimeCubeFree, 9});
  CHECK(r9.maximum == 6);
}

TEST_CASE("extremal maxima match exhaustive enumeration for small n") {
  for (int n = 3; n <= 16; ++n) {
    for (ExtremalVariant v :
         {ExtremalVariant::CoprimeSumFree, ExtremalVariant::RestrictedTripleFree,
          ExtremalVariant::CoprimeCubeFree, ExtremalVariant::DegenerateCubeFree,
          ExtremalVariant::DegenerateCubeEvenFree}) {
      ExtremalProblem p{v, n};
      auto r = max_extremal(p);
      CHECK(r.certified);
      CHECK(r.maximum == brute_force_max(p));
      CHECK(is_free(r.witness, p).free);
      CHECK(r.witness.size() == r.maximum);
    }
  }
}

TEST_CASE("witnesses are always free and relaxations only grow the maximum") {
  for (int n = 3; n <= 24; ++n) {
    auto strict = max_extremal({ExtremalVariant::CoprimeSumFree, n});
    auto relaxed = max_extremal({ExtremalVariant::RestrictedTripleFree, n});
    CHECK(is_free(strict.witness, {ExtremalVariant::CoprimeSumFree, n}).free);
    CHECK(is_free(relaxed.witness, {ExtremalVariant::RestrictedTripleFree, n}).free);
    CHECK(relaxed.maximum >= strict.maximum);
  }
}

TEST_CASE("known constructions") {
  auto tp = known_construction(ConstructionTag::TwoPrimes, 12);
  CHECK(tp.elements() == std::vector<int>{0, 2, 3, 4, 6, 8, 9, 10});
  CHECK(tp.size() == 8);  // 2n/3
  CHECK(is_free(tp, {ExtremalVariant::CoprimeSumFree, 12}).free);

  auto nm = known_construction(ConstructionTag::NoMultiplesOfThree, 9);
  CHECK(nm.elements() == std::vector<int>{1, 2, 4, 5, 7, 8});
  CHECK(is_free(nm, {ExtremalVariant::CoprimeCubeFree, 9}).free);

  auto mt = known_construction(ConstructionTag::MiddleThird, 12);
  CHECK(mt.elements() == std::vector<int>{4, 5, 6, 7, 8});
  CHECK(is_free(mt, {ExtremalVariant::CoprimeSumFree, 12}).free);

  CHECK_THROWS_AS(known_construction(ConstructionTag::TwoPrimes, 8), std::domain_error);
}

TEST_CASE("middle third construction stays coprime-sum-free") {
  for (int n = 4; n <= 60; ++n) {
    auto mt = known_construction(ConstructionTag::MiddleThird, n);
    CHECK(is_free(mt, {ExtremalVariant::CoprimeSumFree, n}).free);
  }
}

TEST_CASE("two-primes construction stays coprime-sum-free") {
  for (int n = 6; n <= 60; ++n) {
    if (arith_profile(n).omega < 2) continue;
    auto tp = known_construction(ConstructionTag::TwoPrimes, n);
    CHECK(is_free(tp, {ExtremalVariant::CoprimeSumFree, n}).free);
  }
}

TEST_CASE("no-multiples-of-three construction is cube-free whenever 3 | n") {
  for (int n = 6; n <= 45; n += 3) {
    auto nm = known_construction(ConstructionTag::NoMultiplesOfThree, n);
    CHECK(nm.size() == n - 1 - (n - 1) / 3);
    CHECK(is_free(nm, {ExtremalVariant::CoprimeCubeFree, n}).free);
    CHECK(is_free(nm, {ExtremalVariant::DegenerateCubeFree, n}).free);
  }
}

TEST_CASE("search under a vanishing budget reports uncertified results") {
  ExtremalSearchOptions opt;
  opt.time_budget_seconds = 1e-9;
  auto r = max_extremal({ExtremalVariant::CoprimeSumFree, 30}, opt);
  CHECK_FALSE(r.certified);
  CHECK(r.method == "branch-and-bound");
  CHECK(is_free(r.witness, {ExtremalVariant::CoprimeSumFree, 30}).free);
}
