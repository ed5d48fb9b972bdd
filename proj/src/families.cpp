#include "nct/families.hpp"

#include <algorithm>

#include "nct/parallel.hpp"

namespace nct {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::SOddBasic: return "s-odd-basic";
    case Provenance::AOddBasic: return "a-odd-basic";
    case Provenance::EvenBasic: return "even-basic";
    case Provenance::PrimeInterval: return "prime-interval";
    case Provenance::TwoPrimes: return "two-primes";
    case Provenance::MultiplesOfThree: return "multiples-of-three";
    case Provenance::Custom: return "custom";
  }
  return "?";
}

std::optional<Provenance> provenance_from_string(const std::string& s) {
  for (Provenance p : {Provenance::SOddBasic, Provenance::AOddBasic, Provenance::EvenBasic,
                       Provenance::PrimeInterval, Provenance::TwoPrimes,
                       Provenance::MultiplesOfThree, Provenance::Custom})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

std::vector<int> interval_preimage_set(int p) {
  if (p < 7 || !is_prime(p) || p % 3 != 1)
    throw std::domain_error("interval_preimage_set: need a prime p = 1 mod 3, p >= 7");
  const int m = (p - 1) / 3;
  std::vector<int> K;
  for (int k = 1; k < p; ++k) {
    int r = static_cast<int>((static_cast<i64>(m + 1) * k) % p);
    if (r >= 1 && r <= m - 1) K.push_back(k);
  }
  return K;
}

CoveringFamily build_covering_family(Provenance tag, int n, Group group) {
  CoveringFamily f;
  f.n = n;
  f.group = group;
  f.provenance = tag;
  auto& ms = f.members;

  switch (tag) {
    case Provenance::SOddBasic: {
      if (group != Group::S) throw std::domain_error("s-odd-basic: needs the symmetric group");
      if (n < 5 || n % 2 == 0) throw std::domain_error("s-odd-basic: needs odd n >= 5");
      const int p = static_cast<int>(smallest_prime_factor(n));
      if (p < n) {
        for (int k = 1; k <= (n - 1) / 2; ++k)
          if (k % p != 0) ms.push_back(SubgroupClass::intransitive(n, k));
        ms.push_back(SubgroupClass::imprimitive(n, p));
      } else {
        for (int k = 2; k <= (n - 1) / 2; ++k) ms.push_back(SubgroupClass::intransitive(n, k));
        ms.push_back(SubgroupClass::affine(n));
      }
      break;
    }
    case Provenance::AOddBasic: {
      if (group != Group::A) throw std::domain_error("a-odd-basic: needs the alternating group");
      if (n < 5 || n % 2 == 0) throw std::domain_error("a-odd-basic: needs odd n >= 5");
      for (int k = 1; k <= n / 3; ++k) ms.push_back(SubgroupClass::intransitive(n, k));
      if (is_prime(n))
        ms.push_back(SubgroupClass::affine(n));
      else
        ms.push_back(SubgroupClass::imprimitive(n, static_cast<int>(smallest_prime_factor(n))));
      break;
    }
    case Provenance::EvenBasic: {
      if (n < 4 || n % 2 != 0) throw std::domain_error("even-basic: needs even n >= 4");
      for (int k = 1; k < n / 2; k += 2) ms.push_back(SubgroupClass::intransitive(n, k));
      ms.push_back(SubgroupClass::imprimitive(n, 2));
      break;
    }
    case Provenance::PrimeInterval: {
      if (group != Group::A) throw std::domain_error("prime-interval: needs the alternating group");
      if (n < 7 || !is_prime(n) || n % 3 != 1)
        throw std::domain_error("prime-interval: needs a prime n = 1 mod 3, n >= 7");
      std::vector<int> ks;
      for (int k : interval_preimage_set(n)) ks.push_back(std::min(k, n - k));
      std::sort(ks.begin(), ks.end());
      ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
      for (int k : ks) ms.push_back(SubgroupClass::intransitive(n, k));
      ms.push_back(SubgroupClass::affine(n));
      break;
    }
    case Provenance::TwoPrimes: {
      auto prof = arith_profile(n);
      if (prof.is_prime_power) throw std::domain_error("two-primes: n must not be a prime power");
      bool parity_ok = (group == Group::S && n % 2 == 0) || (group == Group::A && n % 2 == 1);
      if (!parity_ok)
        throw std::domain_error("two-primes: needs S_n with n even or A_n with n odd");
      const i64 p1 = *prof.p1, p2 = *prof.p2;
      for (int k = 1; 2 * k < n; ++k)
        if (std::gcd(static_cast<i64>(k), p1 * p2) == 1)
          ms.push_back(SubgroupClass::intransitive(n, k));
      ms.push_back(SubgroupClass::imprimitive(n, static_cast<int>(p1)));
      ms.push_back(SubgroupClass::imprimitive(n, static_cast<int>(p2)));
      break;
    }
    case Provenance::MultiplesOfThree: {
      if (n % 3 != 0) throw std::domain_error("multiples-of-three: needs 3 | n");
      bool parity_ok = (group == Group::S && n % 2 == 1) || (group == Group::A && n % 2 == 0);
      if (!parity_ok)
        throw std::domain_error("multiples-of-three: needs S_n with n odd or A_n with n even");
      for (int k = 3; 2 * k <= n; k += 3) ms.push_back(SubgroupClass::intransitive(n, k));
      for (int k = 1; 2 * k <= n; ++k)
        if (std::gcd(k, n) == 1) ms.push_back(SubgroupClass::intransitive(n, k));
      for (i64 p : prime_factors(n))
        ms.push_back(SubgroupClass::imprimitive(n, static_cast<int>(p)));
      if (group == Group::S) ms.push_back(SubgroupClass::alternating(n));
      break;
    }
    case Provenance::Custom:
      break;
  }
  return f;
}

std::vector<Provenance> applicable_provenances(int n, Group group) {
  std::vector<Provenance> out;
  auto prof = arith_profile(n);
  if (group == Group::S) {
    if (n >= 5 && n % 2 == 1) out.push_back(Provenance::SOddBasic);
    if (n >= 4 && n % 2 == 0) out.push_back(Provenance::EvenBasic);
    if (n % 2 == 0 && !prof.is_prime_power) out.push_back(Provenance::TwoPrimes);
    if (n % 3 == 0 && n % 2 == 1) out.push_back(Provenance::MultiplesOfThree);
  } else {
    if (n >= 5 && n % 2 == 1) out.push_back(Provenance::AOddBasic);
    if (n >= 4 && n % 2 == 0) out.push_back(Provenance::EvenBasic);
    if (n >= 7 && prof.is_prime && n % 3 == 1) out.push_back(Provenance::PrimeInterval);
    if (n % 2 == 1 && !prof.is_prime_power) out.push_back(Provenance::TwoPrimes);
    if (n % 3 == 0 && n % 2 == 0) out.push_back(Provenance::MultiplesOfThree);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification sweep
// ---------------------------------------------------------------------------

namespace {

struct FamilyCheck {
  const CoveringFamily* fam = nullptr;
  SumBits intransitive_mask;        // bits k and n-k of every intransitive member
  std::vector<int> other_members;   // indices of non-intransitive members
  int required_sign = 0;            // +1 for A families, 0 = every type
};

struct SplitAccum {
  std::vector<std::vector<CycleType>> uncovered;
  std::vector<std::vector<std::pair<CycleType, int>>> witnesses;
  std::vector<long long> required;
};

// Enumerates every partition of n whose first (largest) part equals `first`,
// carrying the subset-sum bitmask incrementally down the recursion.
void sweep_split(int n, int first, const std::vector<FamilyCheck>& checks, bool collect_witnesses,
                 SplitAccum& acc) {
  const size_t nf = checks.size();
  std::vector<int> parts(static_cast<size_t>(n));
  std::vector<SumBits> bits(static_cast<size_t>(n) + 1);
  bits[0].reset(n);

  auto leaf = [&](int k) {
    const SumBits& sums = bits[static_cast<size_t>(k)];
    int sign = (n - k) % 2 == 0 ? +1 : -1;
    CycleType t;  // built lazily, shared across families
    bool have_t = false;
    for (size_t fi = 0; fi < nf; ++fi) {
      const FamilyCheck& fc = checks[fi];
      if (fc.required_sign != 0 && sign != fc.required_sign) continue;
      acc.required[fi]++;
      bool covered = sums.intersects(fc.intransitive_mask);
      if (!covered || collect_witnesses) {
        if (!have_t) {
          t = CycleType(n, std::vector<int>(parts.begin(), parts.begin() + k));
          have_t = true;
        }
      }
      if (!covered) {
        for (int mi : fc.other_members) {
          if (class_covers(fc.fam->members[static_cast<size_t>(mi)], t)) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) {
        acc.uncovered[fi].push_back(t);
      } else if (collect_witnesses) {
        for (size_t mi = 0; mi < fc.fam->members.size(); ++mi) {
          if (class_covers(fc.fam->members[mi], t)) {
            acc.witnesses[fi].emplace_back(t, static_cast<int>(mi));
            break;
          }
        }
      }
    }
  };

  auto rec = [&](auto&& self, int remaining, int max_val, int depth) -> void {
    if (remaining == 0) {
      leaf(depth);
      return;
    }
    for (int v = std::min(max_val, remaining); v >= 1; --v) {
      parts[static_cast<size_t>(depth)] = v;
      bits[static_cast<size_t>(depth) + 1] = bits[static_cast<size_t>(depth)];
      bits[static_cast<size_t>(depth) + 1].add_part(v);
      self(self, remaining - v, v, depth + 1);
    }
  };

  parts[0] = first;
  bits[1] = bits[0];
  bits[1].add_part(first);
  rec(rec, n - first, first, 1);
}

std::vector<CoverageReport> run_sweep(const std::vector<CoveringFamily>& fs, int threads,
                                      bool collect_witnesses) {
  if (fs.empty()) return {};
  const int n = fs.front().n;
  for (const auto& f : fs)
    if (f.n != n) throw std::domain_error("verify_families: mixed degrees");

  std::vector<FamilyCheck> checks(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    FamilyCheck& fc = checks[i];
    fc.fam = &fs[i];
    fc.required_sign = fs[i].group == Group::A ? +1 : 0;
    fc.intransitive_mask.reset(n);
    fc.intransitive_mask.words()[0] = 0;  // drop the 0 bit; members sit in [1, n-1]
    for (size_t mi = 0; mi < fs[i].members.size(); ++mi) {
      const SubgroupClass& m = fs[i].members[mi];
      if (m.kind() == SubgroupKind::Alternating && fs[i].group == Group::A)
        throw std::domain_error("verify_families: A_n is not a proper member for group A");
      if (m.n() != n) throw std::domain_error("verify_families: member degree mismatch");
      if (m.kind() == SubgroupKind::Intransitive) {
        SumBits one;
        one.reset(n);
        one.add_part(m.param());
        one.add_part(n - m.param());
        for (size_t w = 0; w < fc.intransitive_mask.words().size(); ++w)
          fc.intransitive_mask.words()[w] |= one.words()[w];
        // keep only the two member bits, not 0 or n
        fc.intransitive_mask.words()[0] &= ~1ull;
      } else {
        fc.other_members.push_back(static_cast<int>(mi));
      }
    }
    // bit n would make every type look covered
    auto words = fc.intransitive_mask.words();
    words[static_cast<size_t>(n) >> 6] &= ~(1ull << (n & 63));
  }

  std::vector<SplitAccum> accums(static_cast<size_t>(n));
  for (auto& a : accums) {
    a.uncovered.resize(fs.size());
    a.witnesses.resize(fs.size());
    a.required.assign(fs.size(), 0);
  }

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
  for (int first = n; first >= 1; --first)
    sweep_split(n, first, checks, collect_witnesses, accums[static_cast<size_t>(n - first)]);

  std::vector<CoverageReport> reports(fs.size());
  for (size_t fi = 0; fi < fs.size(); ++fi) {
    CoverageReport& rep = reports[fi];
    rep.family_size = fs[fi].size();
    for (const auto& acc : accums) {  // splits already ordered first = n .. 1
      rep.required_types += acc.required[fi];
      rep.uncovered_types.insert(rep.uncovered_types.end(), acc.uncovered[fi].begin(),
                                 acc.uncovered[fi].end());
      rep.per_type_witness.insert(rep.per_type_witness.end(), acc.witnesses[fi].begin(),
                                  acc.witnesses[fi].end());
    }
    rep.covered = rep.uncovered_types.empty();
  }
  return reports;
}

}  // namespace

CoverageReport verify_family(const CoveringFamily& f, const VerifyOptions& opt) {
  return run_sweep({f}, resolve_threads(opt.threads), opt.collect_witnesses).front();
}

std::vector<CoverageReport> verify_families(const std::vector<CoveringFamily>& fs,
                                            const VerifyOptions& opt) {
  return run_sweep(fs, resolve_threads(opt.threads), opt.collect_witnesses);
}

std::vector<CoverageReport> verify_families_serial(const std::vector<CoveringFamily>& fs) {
  return run_sweep(fs, 1, false);
}

}  // namespace nct
