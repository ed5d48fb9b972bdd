#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nct/arith.hpp"
#include "nct/cycle_types.hpp"

namespace nct {

enum class Group { S, A };

std::string to_string(Group g);

/// One instantiation of the exceptional-coverage table for primitive
/// transitive subgroups smaller than A_n.  Lines 1-2 cover types with two
/// cycles, 3-5 three cycles, 6-10 four cycles.  The table is complete for
/// n > 36.
struct CatalogEntry {
  int line = 0;  // 1..10
  i64 q = 0;     // prime power parameter, when applicable
  int d = 0, d1 = 0, d2 = 0;
  i64 p = 0, m = 0, k1 = 0, k2 = 0;
  CycleType exceptional_type;
};

struct PrimitiveCatalog {
  std::vector<CatalogEntry> entries;  // duplicate types removed, lowest line kept
  bool valid = false;                 // the completeness guarantee needs n > 36
};

/// Catalog at degree n.  Memoized; safe for concurrent readers.
const PrimitiveCatalog& primitive_catalog(int n);

enum class SubgroupKind { Intransitive, Imprimitive, Affine, PrimitiveWildcard, Alternating };

/// A conjugacy class of candidate covering subgroups of S_n, identified by
/// what it can cover at cycle-type level:
///   Intransitive(k) = S_k x S_(n-k);  Imprimitive(b) = S_b wr S_(n/b);
///   Affine(p) = AGL_1(p), p = n prime;  Alternating = A_n;
///   PrimitiveWildcard = the union of all primitive catalog entries at n,
///   plus the n-cycle, merged into one candidate.
class SubgroupClass {
 public:
  static SubgroupClass intransitive(int n, int k);
  static SubgroupClass imprimitive(int n, int b);
  static SubgroupClass affine(int p);
  static SubgroupClass primitive_wildcard(int n);
  static SubgroupClass alternating(int n);

  SubgroupKind kind() const { return kind_; }
  int n() const { return n_; }
  int param() const { return param_; }  // k, b, or p; 0 otherwise
  const std::vector<CycleType>& wildcard_types() const { return wildcard_types_; }

  std::string description() const;  // e.g. "S_3xS_5", "S_2wrS_4", "AGL_1(7)"

  friend bool operator==(const SubgroupClass&, const SubgroupClass&) = default;

 private:
  SubgroupKind kind_ = SubgroupKind::Intransitive;
  int n_ = 0;
  int param_ = 0;
  std::vector<CycleType> wildcard_types_;  // sorted, deduplicated
};

/// Membership of an element of type t in a conjugate of S_k x S_(n-k):
/// holds iff k is an invariant-set size of t.  Symmetric in k <-> n-k.
bool covers_intransitive(int k, const CycleType& t);

/// Exact test for membership in a conjugate of S_b wr S_(n/b): the cycles
/// must split into invariant sets of size d*b whose every cycle length is
/// divisible by d, one d per set.  Backtracking over set decompositions.
bool covers_imprimitive_exact(int b, const CycleType& t);

struct ImprimitiveWitness {
  bool covered = false;
  std::optional<int> block_size;
  explicit operator bool() const { return covered; }
};

/// Is t contained in any imprimitive transitive subgroup?  n-cycles always
/// are; a type with part-gcd > 1 is (any prime divisor of the gcd as block
/// size); otherwise decided over groupings of the cycles.  Returns false
/// for prime n with k >= 2.
ImprimitiveWitness covered_by_some_imprimitive(const CycleType& t);

/// The specialized divisibility conditions for 2 <= k <= 4 and part-gcd 1.
/// Throws std::domain_error outside that range.
bool imprimitive_shortcut_small_k(const CycleType& t);

/// Element types of AGL_1(p): the p-cycle, the identity, and (1, d, ..., d)
/// with d | p-1 and (p-1)/d cycles of length d.  Requires p = t.n() prime.
bool covers_affine(i64 p, const CycleType& t);

/// Dispatch over the class kinds.  The identity type lies in every class;
/// n-cycles lie in every transitive class.  Throws on degree mismatch.
bool class_covers(const SubgroupClass& c, const CycleType& t);

}  // namespace nct
