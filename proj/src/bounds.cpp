#include "nct/bounds.hpp"

#include <algorithm>
#include <cassert>

#include "nct/parallel.hpp"

namespace nct {

namespace {

bool is_power_of_two(int n) { return n >= 2 && (n & (n - 1)) == 0; }

std::vector<CycleType> model_universe(int n, Group group) {
  std::vector<CycleType> universe;
  for_each_partition(n, 4, [&](std::span<const int> parts) {
    int k = static_cast<int>(parts.size());
    if (k == 1) {
      // the n-cycle
    } else if (k >= 2 && k <= 4) {
      if (multiset_gcd(parts) != 1) return;
    } else {
      return;
    }
    if (group == Group::A && (n - k) % 2 != 0) return;
    universe.emplace_back(n, std::vector<int>(parts.begin(), parts.end()));
  });
  return universe;
}

std::vector<SubgroupClass> model_candidates(int n, Group group) {
  std::vector<SubgroupClass> cands;
  for (int k = 1; 2 * k <= n; ++k) cands.push_back(SubgroupClass::intransitive(n, k));
  for (i64 b : divisors(n))
    if (b > 1 && b < n) cands.push_back(SubgroupClass::imprimitive(n, static_cast<int>(b)));
  if (is_prime(n)) cands.push_back(SubgroupClass::affine(n));
  if (!primitive_catalog(n).entries.empty()) cands.push_back(SubgroupClass::primitive_wildcard(n));
  if (group == Group::S) cands.push_back(SubgroupClass::alternating(n));
  return cands;
}

Bits coverage_row(const CycleType& t, const std::vector<SubgroupClass>& cands) {
  const int C = static_cast<int>(cands.size());
  Bits row(C);
  SumBits sums = invariant_set_bits(t);
  for (int c = 0; c < C; ++c) {
    const SubgroupClass& sc = cands[static_cast<size_t>(c)];
    bool cov = false;
    switch (sc.kind()) {
      case SubgroupKind::Intransitive:
        cov = sums.test(sc.param());
        break;
      default:
        cov = class_covers(sc, t);
        break;
    }
    if (cov) row.set(c);
  }
  return row;
}

CoverModel assemble_model(int n, Group group, int threads) {
  if (n < 5) throw std::domain_error("build_model: n must be >= 5");
  CoverModel m;
  m.n = n;
  m.group = group;
  m.sound = n > 36;
  m.universe = model_universe(n, group);
  m.candidates = model_candidates(n, group);
  m.coverage.assign(m.universe.size(), Bits());
  const int U = static_cast<int>(m.universe.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads)
#endif
  for (int i = 0; i < U; ++i)
    m.coverage[static_cast<size_t>(i)] = coverage_row(m.universe[static_cast<size_t>(i)], m.candidates);
  (void)threads;
  return m;
}

}  // namespace

CoverModel build_model(int n, Group group, int threads) {
  return assemble_model(n, group, resolve_threads(threads));
}

CoverModel build_model_serial(int n, Group group) { return assemble_model(n, group, 1); }

MinCoverResult min_cover(const CoverModel& m, const SolveOptions& opt) {
  for (size_t i = 0; i < m.coverage.size(); ++i)
    if (m.coverage[i].none())
      throw std::domain_error("min_cover: model infeasible, uncoverable type " +
                              m.universe[i].to_string());
  SetCoverProblem prob;
  prob.candidate_count = static_cast<int>(m.candidates.size());
  prob.rows = m.coverage;
  SetCoverOptions sopt;
  sopt.time_budget_seconds = opt.time_budget_seconds;
  sopt.threads = opt.threads;
  sopt.incumbent = opt.incumbent;
  sopt.lex_witness = opt.lex_witness;
  SetCoverSolution sol = solve_set_cover(prob, sopt);
  MinCoverResult r;
  r.size = sol.size;
  r.chosen = sol.chosen;
  r.certified = sol.optimal;
  r.lex_least = sol.lex_witness;
  r.nodes = sol.nodes;
  return r;
}

std::optional<ClosedForm> closed_form_gamma(int n, Group group) {
  if (group == Group::S) {
    if (n > 36 && (is_power_of_two(n) || (n % 2 == 0 && is_prime(n / 2))))
      return ClosedForm{n / 4 + 1, "S_n, n = 2p or 2^k: floor(n/4)+1"};
    if (n >= 5 && is_prime(n))
      return ClosedForm{n / 2, "S_p, p prime: floor(p/2)"};
    return std::nullopt;
  }
  if (n > 36 && is_prime(n) && repunit_forms(n).empty())
    return ClosedForm{(n + 1) / 3, "A_p, p a non-repunit prime: floor((p+1)/3)"};
  return std::nullopt;
}

namespace {

// Family members all appear among the model candidates; translate them to
// candidate indices for use as a solver incumbent.
std::vector<int> family_as_candidate_indices(const CoveringFamily& f, const CoverModel& m) {
  std::vector<int> idx;
  for (const auto& member : f.members) {
    int found = -1;
    for (size_t c = 0; c < m.candidates.size(); ++c) {
      if (m.candidates[c].kind() == member.kind() && m.candidates[c].param() == member.param()) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) return {};  // not expressible; skip the hint
    idx.push_back(found);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

GammaBracket gamma_bracket(int n, Group group, const BracketOptions& opt) {
  if (n < 5) throw std::domain_error("gamma_bracket: n must be >= 5");
  const int threads = resolve_threads(opt.threads);

  GammaBracket br;
  br.n = n;
  br.group = group;

  std::vector<CoveringFamily> families;
  for (Provenance tag : applicable_provenances(n, group))
    families.push_back(build_covering_family(tag, n, group));
  assert(!families.empty());

  std::vector<bool> eligible(families.size(), true);
  const bool exhaustive = n <= opt.exhaustive_verify_cap;
  if (exhaustive) {
    VerifyOptions vopt;
    vopt.threads = threads;
    auto reports = verify_families(families, vopt);
    for (size_t i = 0; i < families.size(); ++i) eligible[i] = reports[i].covered;
  }
  int best = -1;
  for (size_t i = 0; i < families.size(); ++i) {
    if (!eligible[i]) continue;
    if (best < 0 || families[i].size() < families[static_cast<size_t>(best)].size())
      best = static_cast<int>(i);
  }
  if (best < 0) throw std::logic_error("gamma_bracket: no applicable family verified");
  br.upper = families[static_cast<size_t>(best)].size();
  br.upper_witness = families[static_cast<size_t>(best)];
  br.upper_exhaustive = exhaustive;

  if (!opt.skip_lower) {
    CoverModel model = build_model(n, group, threads);
    SolveOptions sopt;
    sopt.threads = threads;
    sopt.time_budget_seconds = opt.time_budget_seconds;
    sopt.incumbent = family_as_candidate_indices(br.upper_witness, model);
    sopt.lex_witness = opt.lex_witness;
    br.lower_witness = min_cover(model, sopt);
    br.lower = br.lower_witness.size;
    br.lower_sound = model.sound;
    br.lower_certified = br.lower_witness.certified;

    if (br.lower_certified && br.lower > br.upper)
      throw std::logic_error("gamma_bracket: lower bound exceeds upper bound");
  }

  br.closed_form = closed_form_gamma(n, group);
  if (br.closed_form) {
    if (br.closed_form->value > br.upper)
      throw std::logic_error("gamma_bracket: closed form above the upper bound");
    if (!opt.skip_lower && br.lower_certified && br.lower_sound &&
        br.closed_form->value < br.lower)
      throw std::logic_error("gamma_bracket: closed form below a sound lower bound");
  }
  return br;
}

// ---------------------------------------------------------------------------
// Classifiers
// ---------------------------------------------------------------------------

std::string to_string(TripleTag t) {
  switch (t) {
    case TripleTag::PairSmall: return "pair-small";
    case TripleTag::PairOuter: return "pair-outer";
    case TripleTag::PairInner: return "pair-inner";
    case TripleTag::Catalog: return "catalog";
  }
  return "?";
}

RestrictedTriplesReport classify_restricted_triples(int n, int threads) {
  if (n < 7) throw std::domain_error("classify_restricted_triples: n must be >= 7");
  (void)threads;  // the sweep is tiny; kept serial for determinism
  RestrictedTriplesReport rep;
  rep.n = n;

  const auto& cat = primitive_catalog(n);
  auto catalog_match = [&](const CycleType& t) {
    for (const auto& e : cat.entries)
      if (e.exceptional_type == t) return true;
    return false;
  };

  const i64 N = n;
  auto tau = [](i64 v) { return static_cast<i64>(divisors(v).size()); };
  for (int h : {1, 2, 4}) {
    for (int x = 3; x + h < (n + 1) / 2 - 2; ++x) {
      if (std::gcd(std::gcd(static_cast<i64>(x), static_cast<i64>(h)), N) != 1) continue;
      int z = n - 2 * x - h;
      if (z < 1) break;
      RestrictedTripleHit hit;
      hit.h = h;
      hit.x = x;
      i64 s1 = 2 * x + h;
      i64 q1 = s1 / std::gcd(s1, N);
      if (x % q1 == 0 && (x + h) % q1 == 0) hit.tags.push_back(TripleTag::PairSmall);
      i64 s2 = N - x - h;
      i64 q2 = s2 / std::gcd(s2, N);
      if (x % q2 == 0 && z % q2 == 0) hit.tags.push_back(TripleTag::PairOuter);
      i64 s3 = N - x;
      i64 q3 = s3 / std::gcd(s3, N);
      if ((x + h) % q3 == 0 && z % q3 == 0) hit.tags.push_back(TripleTag::PairInner);
      if (catalog_match(CycleType(n, {x, x + h, z}))) hit.tags.push_back(TripleTag::Catalog);
      if (!hit.tags.empty()) rep.hits.push_back(std::move(hit));
    }
  }

  for (int h : {1, 2, 4})
    rep.ceiling += 2 * tau(N) * tau(h) + tau(N) * tau(N - h) + tau(N) * tau(N + h);
  return rep;
}

std::string to_string(CubeTag t) {
  switch (t) {
    case CubeTag::TripleVsRest: return "triple-vs-rest";
    case CubeTag::TripleVsShifted: return "triple-vs-shifted";
    case CubeTag::TripleVsRepeat: return "triple-vs-repeat";
    case CubeTag::PairRepeat: return "pair-repeat";
    case CubeTag::PairsAligned: return "pairs-aligned";
    case CubeTag::PairsCrossed: return "pairs-crossed";
    case CubeTag::Catalog: return "catalog";
    case CubeTag::Unclassified: return "unclassified";
  }
  return "?";
}

DegenerateCubesReport classify_degenerate_cubes(int n, Group group, int threads) {
  if (n < 9) throw std::domain_error("classify_degenerate_cubes: n must be >= 9");
  const bool want_odd = group == Group::S;
  if ((n % 2 == 1) != want_odd)
    throw std::domain_error(
        "classify_degenerate_cubes: group S pairs with odd n, group A with even n");
  (void)threads;
  DegenerateCubesReport rep;
  rep.n = n;
  rep.group = group;

  const auto& cat = primitive_catalog(n);
  auto catalog_match = [&](const CycleType& t) {
    for (const auto& e : cat.entries)
      if (e.exceptional_type == t) return true;
    return false;
  };
  for (const auto& e : cat.entries)
    if (e.exceptional_type.cycle_count() == 4 && e.exceptional_type.parts().back() == 1)
      rep.boundary_catalog_types.push_back(e.exceptional_type);

  const i64 N = n;
  for (int h : {1, -1}) {
    for (int x = 2; n - 3 * x - h >= 1; ++x) {
      // gcd(n, x+1, 2) = 1: even n forces even x
      if (n % 2 == 0 && x % 2 == 1) continue;
      const int z = n - 3 * x - h;
      DegenerateCubeHit hit;
      hit.h = h;
      hit.x = x;

      i64 s = 3 * x + h;
      i64 q = s / std::gcd(s, N);
      if (x % q == 0 && (x + h) % q == 0) hit.tags.push_back(CubeTag::TripleVsRest);

      s = N - x - h;
      q = s / std::gcd(static_cast<i64>(x + h), N);
      if (s % std::gcd(static_cast<i64>(x + h), N) == 0 && x % q == 0 && z % q == 0)
        hit.tags.push_back(CubeTag::TripleVsShifted);

      s = N - x;
      q = s / std::gcd(static_cast<i64>(x), N);
      if ((x + h) % q == 0 && z % q == 0) hit.tags.push_back(CubeTag::TripleVsRepeat);

      s = N - 2 * x;
      q = s / std::gcd(static_cast<i64>(x), N);
      if ((x + h) % q == 0 && z % q == 0) hit.tags.push_back(CubeTag::PairRepeat);

      {
        i64 b = std::gcd(2 * static_cast<i64>(x), N);
        i64 qa = 2 * x / b, qb = (N - 2 * x) / b;
        if (x % qa == 0 && (x + h) % qb == 0 && z % qb == 0)
          hit.tags.push_back(CubeTag::PairsAligned);
      }
      {
        i64 b = std::gcd(2 * static_cast<i64>(x) + h, N);
        i64 qa = (2 * x + h) / b, qb = (N - 2 * x - h) / b;
        if (x % qa == 0 && (x + h) % qa == 0 && x % qb == 0 && z % qb == 0)
          hit.tags.push_back(CubeTag::PairsCrossed);
      }

      CycleType t(n, {x, x, x + h, z});
      if (catalog_match(t)) hit.tags.push_back(CubeTag::Catalog);
      if (hit.tags.empty() && imprimitive_shortcut_small_k(t))
        hit.tags.push_back(CubeTag::Unclassified);
      if (!hit.tags.empty()) rep.hits.push_back(std::move(hit));
    }
  }

  auto tau = [](i64 v) { return static_cast<i64>(divisors(v).size()); };
  for (int h : {1, -1})
    rep.ceiling += 2 * tau(N) + tau(N) * tau(N - h) + 3 * tau(N) * tau(N + 2 * h);
  return rep;
}

}  // namespace nct
