#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nct/symmetric_sets.hpp"

namespace nct {

/// The forbidden-pattern variants.  Sum-free variants live in Z/n;
/// cube variants in {1..n-1} with integer sums.
///   CoprimeSumFree        no x, y, x+y in X with gcd(x, y, n) = 1
///   RestrictedTripleFree  no x, x+h, 2x+h in X, h in {1,2,4}, gcd(x,h,n)=1
///   CoprimeCubeFree       no cube(x,y,z) in X with gcd(x,y,z,n) = 1
///   DegenerateCubeFree    no cube(x,x,x+h) = {x, x+h, 2x, 2x+h, 3x+h},
///                         h = +-1
///   DegenerateCubeEvenFree  same with x even
enum class ExtremalVariant {
  CoprimeSumFree,
  RestrictedTripleFree,
  CoprimeCubeFree,
  DegenerateCubeFree,
  DegenerateCubeEvenFree,
};

std::string to_string(ExtremalVariant v);
std::optional<ExtremalVariant> extremal_variant_from_string(const std::string& s);
Ambient ambient_of(ExtremalVariant v);

struct ExtremalProblem {
  ExtremalVariant variant = ExtremalVariant::CoprimeSumFree;
  int n = 0;
  // the paper's problems are always about symmetric subsets
};

struct FreenessViolation {
  std::vector<int> pattern;   // the offending triple/cube, element list
  std::string description;
};

struct FreenessResult {
  bool free = false;
  std::optional<FreenessViolation> violation;
  explicit operator bool() const { return free; }
};

/// Exact predicate for the variant; on failure reports one offending
/// pattern.  Throws std::domain_error if the subset's ambient does not
/// match the variant's.
FreenessResult is_free(const SymmetricSubset& X, const ExtremalProblem& p);

struct ExtremalSearchOptions {
  double time_budget_seconds = 0;  // 0 = unlimited
  int threads = 1;
  bool deterministic = true;  // serial search order even under a budget
};

struct ExtremalResult {
  int maximum = 0;
  SymmetricSubset witness;
  bool certified = false;   // search tree exhausted
  std::string method;       // "exhaustive" or "branch-and-bound"
  std::uint64_t nodes = 0;
};

/// Largest symmetric variant-free subset, by branch and bound over the
/// negation orbits {x, n-x} with forbidden-pattern propagation.  Exact and
/// certified when the tree is exhausted; a time budget yields the best
/// witness found, uncertified.  Requires 3 <= n <= 64.
ExtremalResult max_extremal(const ExtremalProblem& p, const ExtremalSearchOptions& opt = {});

enum class ConstructionTag { TwoPrimes, NoMultiplesOfThree, MiddleThird };

std::string to_string(ConstructionTag t);

/// The named extremal constructions:
///   TwoPrimes          {x in Z/n : p1 | x or p2 | x}; needs omega(n) >= 2
///   NoMultiplesOfThree {x in 1..n-1 : 3 does not divide x}
///   MiddleThird        {x in Z/n : ceil(n/3) <= x <= n - ceil(n/3)}, n >= 4
SymmetricSubset known_construction(ConstructionTag tag, int n);

}  // namespace nct
