#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nct/coverage.hpp"

namespace nct {

/// Which construction produced a covering family.
///   SOddBasic     S_n, n odd: intransitives avoiding multiples of the
///                 smallest prime factor, plus one transitive class.
///   AOddBasic     A_n, n odd: intransitives up to n/3 plus one transitive.
///   EvenBasic     n even: odd intransitives below n/2 plus blocks of 2.
///   PrimeInterval A_p, p = 3m+1 prime: the size-(p-1)/3 family built from
///                 the interval trick k -> (m+1)k mod p.
///   TwoPrimes     intransitives coprime to p1*p2 plus the two wreaths.
///   MultiplesOfThree  3 | n: multiples-of-3 and coprime intransitives,
///                 wreaths for every prime divisor, A_n when applicable.
enum class Provenance {
  SOddBasic,
  AOddBasic,
  EvenBasic,
  PrimeInterval,
  TwoPrimes,
  MultiplesOfThree,
  Custom,
};

std::string to_string(Provenance p);
std::optional<Provenance> provenance_from_string(const std::string& s);

struct CoveringFamily {
  int n = 0;
  Group group = Group::S;
  Provenance provenance = Provenance::Custom;
  std::vector<SubgroupClass> members;

  int size() const { return static_cast<int>(members.size()); }
};

/// Builds the family for the given construction, validating its hypotheses
/// (throws std::domain_error naming the violated one).  For A_n families the
/// members are recorded as the S_n-overgroup classes; the intersection with
/// A_n is implied and covers both split classes, because none of the
/// overgroups used lies inside A_n.
CoveringFamily build_covering_family(Provenance tag, int n, Group group);

/// The constructions whose hypotheses hold at (n, group).
std::vector<Provenance> applicable_provenances(int n, Group group);

/// The set K of the PrimeInterval construction: k in [1, p-1] with
/// (m+1)k mod p in [1, m-1], where p = 3m+1.  Unnormalized.
std::vector<int> interval_preimage_set(int p);

struct CoverageReport {
  bool covered = false;
  int family_size = 0;
  long long required_types = 0;
  std::vector<CycleType> uncovered_types;
  /// type -> index of the first covering member; only when requested
  std::vector<std::pair<CycleType, int>> per_type_witness;
};

struct VerifyOptions {
  int threads = 0;  // 0 = library default
  bool collect_witnesses = false;
};

/// Checks every required cycle type of degree n (all of them for S, the
/// even ones for A) against the family members.  The sweep enumerates all
/// partitions of n; feasible up to n of roughly 100.
CoverageReport verify_family(const CoveringFamily& f, const VerifyOptions& opt = {});

/// Same sweep shared across several families of one degree.
std::vector<CoverageReport> verify_families(const std::vector<CoveringFamily>& fs,
                                            const VerifyOptions& opt = {});

/// Serial reference implementation used by tests and the benchmark.
std::vector<CoverageReport> verify_families_serial(const std::vector<CoveringFamily>& fs);

}  // namespace nct
