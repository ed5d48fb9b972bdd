#include <algorithm>
#include <set>

#include "doctest.h"
#include "nct/families.hpp"

using namespace nct;

namespace {
std::vector<int> intransitive_params(const CoveringFamily& f) {
  std::vector<int> ks;
  for (const auto& m : f.members)
    if (m.kind() == SubgroupKind::Intransitive) ks.push_back(m.param());
  std::sort(ks.begin(), ks.end());
  return ks;
}
}  // namespace

TEST_CASE("even-basic family at n = 8") {
  auto f = build_covering_family(Provenance::EvenBasic, 8, Group::S);
  CHECK(f.size() == 3);  // floor(8/4) + 1
  CHECK(intransitive_params(f) == std::vector<int>{1, 3});
  CHECK(f.members.back().kind() == SubgroupKind::Imprimitive);
  CHECK(f.members.back().param() == 2);
  auto rep = verify_family(f);
  CHECK(rep.covered);
  CHECK(rep.required_types == 22);  // p(8)
}

TEST_CASE("prime-interval family at p = 13") {
  CHECK(interval_preimage_set(13) == std::vector<int>{3, 8, 11});
  auto f = build_covering_family(Provenance::PrimeInterval, 13, Group::A);
  CHECK(f.size() == 4);  // (13-1)/3
  CHECK(intransitive_params(f) == std::vector<int>{2, 3, 5});
  CHECK(f.members.back().kind() == SubgroupKind::Affine);
  CHECK(verify_family(f).covered);
}

TEST_CASE("prime-interval family at p = 7 covers with two members") {
  auto f = build_covering_family(Provenance::PrimeInterval, 7, Group::A);
  CHECK(f.size() == 2);
  auto rep = verify_family(f);
  CHECK(rep.covered);
}

TEST_CASE("interval preimage partitions Z/p") {
  for (int p : {7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97}) {
    const int m = (p - 1) / 3;
    auto K = interval_preimage_set(p);
    CHECK(static_cast<int>(K.size()) == m - 1);
    // {0}, (m+1)K, the middle interval, and -(m+1)K tile Z/p
    std::set<int> seen{0};
    for (int k : K) {
      seen.insert(static_cast<int>((static_cast<long long>(m + 1) * k) % p));
      seen.insert(static_cast<int>((static_cast<long long>(m + 1) * (p - k)) % p));
    }
    for (int i = m; i <= 2 * m + 1; ++i) seen.insert(i);
    CHECK(static_cast<int>(seen.size()) == p);
  }
}

TEST_CASE("multiples-of-three family at n = 15") {
  auto f = build_covering_family(Provenance::MultiplesOfThree, 15, Group::S);
  CHECK(f.size() == 9);
  CHECK(intransitive_params(f) == std::vector<int>{1, 2, 3, 4, 6, 7});
  int imps = 0, alts = 0;
  for (const auto& m : f.members) {
    imps += m.kind() == SubgroupKind::Imprimitive;
    alts += m.kind() == SubgroupKind::Alternating;
  }
  CHECK(imps == 2);  // blocks of 3 and of 5
  CHECK(alts == 1);
  CHECK(verify_family(f).covered);
}

TEST_CASE("two-primes family at n = 36") {
  auto f = build_covering_family(Provenance::TwoPrimes, 36, Group::S);
  // 6 coprime-to-6 values below 18, plus two wreaths
  CHECK(f.size() == 8);
  CHECK(verify_family(f).covered);
}

TEST_CASE("a missing fixed point shows up as uncovered") {
  CoveringFamily f;
  f.n = 6;
  f.group = Group::S;
  f.provenance = Provenance::Custom;
  f.members.push_back(SubgroupClass::intransitive(6, 1));
  auto rep = verify_family(f);
  CHECK_FALSE(rep.covered);
  bool found = false;
  for (const auto& t : rep.uncovered_types)
    if (t == CycleType(6, {2, 2, 2})) found = true;
  CHECK(found);
}

TEST_CASE("hypothesis violations are named") {
  CHECK_THROWS_AS(build_covering_family(Provenance::PrimeInterval, 11, Group::A),
                  std::domain_error);  // 11 = 2 mod 3
  CHECK_THROWS_AS(build_covering_family(Provenance::PrimeInterval, 13, Group::S),
                  std::domain_error);
  CHECK_THROWS_AS(build_covering_family(Provenance::TwoPrimes, 16, Group::S),
                  std::domain_error);  // prime power
  CHECK_THROWS_AS(build_covering_family(Provenance::TwoPrimes, 15, Group::S),
                  std::domain_error);  // parity
  CHECK_THROWS_AS(build_covering_family(Provenance::MultiplesOfThree, 14, Group::S),
                  std::domain_error);
  CHECK_THROWS_AS(build_covering_family(Provenance::SOddBasic, 8, Group::S), std::domain_error);
  CHECK_THROWS_AS(build_covering_family(Provenance::EvenBasic, 9, Group::S), std::domain_error);
}

TEST_CASE("applicable constructions cover and respect their size formulas, n <= 40") {
  for (int n = 5; n <= 40; ++n) {
    for (Group g : {Group::S, Group::A}) {
      for (Provenance tag : applicable_provenances(n, g)) {
        auto f = build_covering_family(tag, n, g);
        auto rep = verify_family(f);
        CHECK_MESSAGE(rep.covered, "family ", to_string(tag), " at n=", n, " group ",
                      to_string(g));
        switch (tag) {
          case Provenance::SOddBasic:
            CHECK(f.size() <= n / 2);
            if (is_prime(n)) CHECK(f.size() == n / 2);
            break;
          case Provenance::AOddBasic:
            CHECK(f.size() == n / 3 + 1);
            break;
          case Provenance::EvenBasic:
            CHECK(f.size() == n / 4 + 1);
            break;
          case Provenance::PrimeInterval:
            CHECK(f.size() == (n - 1) / 3);
            break;
          case Provenance::TwoPrimes: {
            auto prof = arith_profile(n);
            // 2 p1 p2 |C| <= n (p1-1)(p2-1) + 4 p1 p2
            long long lhs = 2LL * *prof.p1 * *prof.p2 * f.size();
            long long rhs =
                static_cast<long long>(n) * (*prof.p1 - 1) * (*prof.p2 - 1) +
                4LL * *prof.p1 * *prof.p2;
            CHECK(lhs <= rhs);
            break;
          }
          case Provenance::MultiplesOfThree: {
            auto prof = arith_profile(n);
            // 6 |C| <= n + 3 phi(n) + 6 omega(n) + 6
            CHECK(6LL * f.size() <= n + 3 * prof.phi + 6 * prof.omega + 6);
            break;
          }
          case Provenance::Custom:
            break;
        }
      }
    }
  }
}

TEST_CASE("removing any member of an even-basic family breaks coverage") {
  for (int n : {8, 12, 20, 40}) {
    auto f = build_covering_family(Provenance::EvenBasic, n, Group::S);
    REQUIRE(verify_family(f).covered);
    for (size_t drop = 0; drop < f.members.size(); ++drop) {
      CoveringFamily g;
      g.n = f.n;
      g.group = f.group;
      g.provenance = Provenance::Custom;
      for (size_t i = 0; i < f.members.size(); ++i)
        if (i != drop) g.members.push_back(f.members[i]);
      CHECK_FALSE(verify_family(g).covered);
    }
  }
}

TEST_CASE("witness collection names a covering member per type") {
  auto f = build_covering_family(Provenance::EvenBasic, 10, Group::S);
  VerifyOptions opt;
  opt.collect_witnesses = true;
  auto rep = verify_family(f, opt);
  REQUIRE(rep.covered);
  CHECK(rep.per_type_witness.size() == 42);  // p(10)
  for (const auto& [t, mi] : rep.per_type_witness)
    CHECK(class_covers(f.members[static_cast<size_t>(mi)], t));
}
