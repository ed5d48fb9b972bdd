#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nct/arith.hpp"

namespace nct {

/// Where a symmetric subset lives.  The sum-free problems are modular; the
/// cube problems use ordinary integer sums inside {1..n-1}.  Kept as
/// distinct ambients so the two never mix.
enum class Ambient { ResiduesModN, IntegersOneToNMinusOne };

std::string to_string(Ambient a);

/// A subset of Z/n closed under negation, or of {1..n-1} closed under
/// x -> n-x.  Validated on construction.
class SymmetricSubset {
 public:
  SymmetricSubset() = default;
  /// Throws std::domain_error on out-of-range elements or asymmetry.
  SymmetricSubset(int n, Ambient ambient, std::vector<int> elements);

  int n() const { return n_; }
  Ambient ambient() const { return ambient_; }
  const std::vector<int>& elements() const { return elems_; }  // ascending
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int x) const;

  /// 0/1 characteristic string over the ambient domain (length n for
  /// residues, n-1 for integers starting at 1).
  std::string characteristic_string() const;

 private:
  int n_ = 0;
  Ambient ambient_ = Ambient::ResiduesModN;
  std::vector<int> elems_;
};

/// {a + b mod n : a in A, b in B}.  Empty if either input is empty.
std::vector<int> sumset(std::span<const int> A, std::span<const int> B, int n);

/// Elements with at least K representations a + b (ordered pairs).
/// popular_sums(A, B, n, 1) equals sumset(A, B, n); antitone in K.
std::vector<int> popular_sums(std::span<const int> A, std::span<const int> B, int n, int K);

/// Ordered pairs (x, y) in X x X with x + y mod n in X.
i64 count_additive_triples(std::span<const int> X, int n);

/// cube(x, y, z) = {x, y, z, x+y, x+z, y+z, x+y+z} as a sorted set of
/// distinct integers (at most 7 of them).
std::vector<i64> cube_set(i64 x, i64 y, i64 z);

}  // namespace nct
