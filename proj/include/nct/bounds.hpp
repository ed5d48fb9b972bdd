#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nct/coverage.hpp"
#include "nct/families.hpp"
#include "nct/set_cover.hpp"

namespace nct {

/// Set-cover model whose exact minimum is a lower bound for the normal
/// covering number.  The universe is restricted to the types that bind:
/// part-gcd-1 types with 2..4 cycles plus the n-cycle (types with larger
/// gcd are always imprimitively covered, types with more cycles fall
/// outside the primitive catalog's guarantee).  For A_n only the even
/// types appear.  Coverage uses the merged primitive wildcard, which
/// over-approximates any real primitive subgroup, so a genuine normal
/// covering always induces a model cover of no greater size.
struct CoverModel {
  int n = 0;
  Group group = Group::S;
  bool sound = false;  // catalog completeness needs n > 36
  std::vector<CycleType> universe;
  std::vector<SubgroupClass> candidates;
  std::vector<Bits> coverage;  // per universe element, over candidates
};

/// Candidates: every S_k x S_(n-k) with k <= n/2, every block size, AGL_1
/// at prime degree, the merged wildcard when the catalog is nonempty, and
/// A_n for group S.  Requires n >= 5.
CoverModel build_model(int n, Group group, int threads = 0);

/// Serial reference for the coverage-matrix fill.
CoverModel build_model_serial(int n, Group group);

struct MinCoverResult {
  int size = 0;
  std::vector<int> chosen;  // candidate indices, ascending
  bool certified = false;   // exact (no budget exhaustion)
  bool lex_least = false;
  std::uint64_t nodes = 0;
};

struct SolveOptions {
  double time_budget_seconds = 0;
  int threads = 1;
  std::vector<int> incumbent;  // optional known cover
  bool lex_witness = true;     // canonicalize the witness
};

/// Exact minimum set cover of the model; throws std::domain_error naming an
/// uncoverable type if one exists.
MinCoverResult min_cover(const CoverModel& m, const SolveOptions& opt = {});

struct ClosedForm {
  int value = 0;
  std::string rule;  // which formula applied
};

/// The proven exact values: floor(n/4)+1 for S_n with n = 2^k or 2p beyond
/// the catalog threshold; floor((p+1)/3) for A_p at non-repunit primes
/// beyond the threshold; floor(p/2) for S_p at any prime p >= 5.
std::optional<ClosedForm> closed_form_gamma(int n, Group group);

struct GammaBracket {
  int n = 0;
  Group group = Group::S;
  int lower = 0;
  bool lower_sound = false;     // model soundness (n > 36)
  bool lower_certified = false; // solver ran to completion
  int upper = 0;
  bool upper_exhaustive = false;  // upper family verified over every type
  std::optional<ClosedForm> closed_form;
  MinCoverResult lower_witness;
  CoveringFamily upper_witness;
};

struct BracketOptions {
  int threads = 0;
  double time_budget_seconds = 0;
  /// Families at degrees above this cap are constructed and size-counted
  /// but not swept over the full type space (the sweep is Theta(p(n))).
  int exhaustive_verify_cap = 100;
  bool skip_lower = false;    // upper bound only
  bool lex_witness = true;    // canonicalize the lower witness
};

/// Combines the best applicable family upper bound with the exact set-cover
/// lower bound and any closed form.  Throws std::logic_error if the pieces
/// contradict each other.
GammaBracket gamma_bracket(int n, Group group, const BracketOptions& opt = {});

// ---------------------------------------------------------------------------
// Exceptional-structure classifiers
// ---------------------------------------------------------------------------

/// Why a triple (x, x+h, n-2x-h) is covered by a transitive class.
enum class TripleTag {
  PairSmall,     // (2x+h)/gcd(2x+h,n) divides x and x+h
  PairOuter,     // (n-x-h)/gcd(n-x-h,n) divides x and n-2x-h
  PairInner,     // (n-x)/gcd(n-x,n) divides x+h and n-2x-h
  Catalog,       // matches a primitive catalog type
};

std::string to_string(TripleTag t);

struct RestrictedTripleHit {
  int h = 0;
  int x = 0;
  std::vector<TripleTag> tags;  // all matching reasons, primary first
};

struct RestrictedTriplesReport {
  int n = 0;
  std::vector<RestrictedTripleHit> hits;
  long long ceiling = 0;  // divisor-based bound on the hit count
};

/// For h in {1,2,4} and 2 < x, x+h < n/2-2 with gcd(x,h,n) = 1: the x whose
/// triple (x, x+h, n-2x-h) lies in an imprimitive class or catalog entry.
/// Requires n >= 7.
RestrictedTriplesReport classify_restricted_triples(int n, int threads = 0);

/// Why a 4-partition (x, x, x+h, n-3x-h) is covered.
enum class CubeTag {
  TripleVsRest,     // cells {x,x,x+h} | {n-3x-h}
  TripleVsShifted,  // cells {x,x,n-3x-h} | {x+h}
  TripleVsRepeat,   // cells {x,x+h,n-3x-h} | {x}
  PairRepeat,       // cells {x+h,n-3x-h} | {x} | {x}
  PairsAligned,     // cells {x,x} | {x+h,n-3x-h}
  PairsCrossed,     // cells {x,x+h} | {x,n-3x-h}
  Catalog,
  Unclassified,     // covered imprimitively but outside the named cases
};

std::string to_string(CubeTag t);

struct DegenerateCubeHit {
  int h = 0;  // +1 or -1
  int x = 0;
  std::vector<CubeTag> tags;
};

struct DegenerateCubesReport {
  int n = 0;
  Group group = Group::S;
  std::vector<DegenerateCubeHit> hits;
  long long ceiling = 0;
  /// catalog types containing a fixed point; those can only meet the
  /// excluded x <= 1 boundary of the sweep
  std::vector<CycleType> boundary_catalog_types;
};

/// For h = +-1 and x >= 2 with gcd(n, x+1, 2) = 1: the x whose 4-partition
/// (x, x, x+h, n-3x-h) is covered by an imprimitive class or catalog entry.
/// Requires n >= 9; group S pairs with odd n, group A with even n.
DegenerateCubesReport classify_degenerate_cubes(int n, Group group, int threads = 0);

}  // namespace nct
