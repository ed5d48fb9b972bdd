#include "nct/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace nct {

std::string to_string(ExtremalVariant v) {
  switch (v) {
    case ExtremalVariant::CoprimeSumFree: return "coprime-sum-free";
    case ExtremalVariant::RestrictedTripleFree: return "restricted-triple-free";
    case ExtremalVariant::CoprimeCubeFree: return "coprime-cube-free";
    case ExtremalVariant::DegenerateCubeFree: return "degenerate-cube-free";
    case ExtremalVariant::DegenerateCubeEvenFree: return "degenerate-cube-even-free";
  }
  return "?";
}

std::optional<ExtremalVariant> extremal_variant_from_string(const std::string& s) {
  for (ExtremalVariant v :
       {ExtremalVariant::CoprimeSumFree, ExtremalVariant::RestrictedTripleFree,
        ExtremalVariant::CoprimeCubeFree, ExtremalVariant::DegenerateCubeFree,
        ExtremalVariant::DegenerateCubeEvenFree})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

Ambient ambient_of(ExtremalVariant v) {
  switch (v) {
    case ExtremalVariant::CoprimeSumFree:
    case ExtremalVariant::RestrictedTripleFree:
      return Ambient::ResiduesModN;
    default:
      return Ambient::IntegersOneToNMinusOne;
  }
}

// gcd(x1, ..., xk, n) with gcd(0, a) = a
namespace {
i64 gcd_with(std::initializer_list<i64> xs, i64 n) {
  i64 g = n;
  for (i64 x : xs) g = std::gcd(g, x);
  return g;
}
}  // namespace

FreenessResult is_free(const SymmetricSubset& X, const ExtremalProblem& p) {
  if (X.n() != p.n || X.ambient() != ambient_of(p.variant))
    throw std::domain_error("is_free: subset ambient does not match the variant");
  const int n = p.n;
  auto violation = [](std::vector<int> pattern, std::string desc) {
    FreenessResult r;
    r.free = false;
    r.violation = FreenessViolation{std::move(pattern), std::move(desc)};
    return r;
  };

  switch (p.variant) {
    case ExtremalVariant::CoprimeSumFree: {
      const auto& e = X.elements();
      for (size_t i = 0; i < e.size(); ++i) {
        for (size_t j = i; j < e.size(); ++j) {
          int x = e[i], y = e[j];
          if (gcd_with({x, y}, n) != 1) continue;
          int s = (x + y) % n;
          if (X.contains(s))
            return violation({x, y, s}, "additive triple " + std::to_string(x) + " + " +
                                            std::to_string(y) + " = " + std::to_string(s));
        }
      }
      break;
    }
    case ExtremalVariant::RestrictedTripleFree: {
      for (int h : {1, 2, 4}) {
        for (int x = 0; x < n; ++x) {
          if (gcd_with({x, h}, n) != 1) continue;
          int a = (x + h) % n, b = (2 * x + h) % n;
          if (X.contains(x) && X.contains(a) && X.contains(b))
            return violation({x, a, b}, "restricted triple x, x+h, 2x+h at x = " +
                                            std::to_string(x) + ", h = " + std::to_string(h));
        }
      }
      break;
    }
    case ExtremalVariant::CoprimeCubeFree: {
      for (int x = 1; x <= n - 1; ++x) {
        for (int y = x; x + y <= n - 1; ++y) {
          for (int z = y; x + y + z <= n - 1; ++z) {
            if (gcd_with({x, y, z}, n) != 1) continue;
            auto cube = cube_set(x, y, z);
            bool all = true;
            for (i64 c : cube)
              if (!X.contains(static_cast<int>(c))) {
                all = false;
                break;
              }
            if (all)
              return violation(std::vector<int>(cube.begin(), cube.end()),
                               "cube(" + std::to_string(x) + "," + std::to_string(y) + "," +
                                   std::to_string(z) + ")");
          }
        }
      }
      break;
    }
    case ExtremalVariant::DegenerateCubeFree:
    case ExtremalVariant::DegenerateCubeEvenFree: {
      const bool even_only = p.variant == ExtremalVariant::DegenerateCubeEvenFree;
      for (int h : {1, -1}) {
        for (int x = 1; 3 * x + h <= n - 1; ++x) {
          if (x + h < 1) continue;
          if (even_only && x % 2 != 0) continue;
          int elems[5] = {x, x + h, 2 * x, 2 * x + h, 3 * x + h};
          bool all = true;
          for (int c : elems)
            if (!X.contains(c)) {
              all = false;
              break;
            }
          if (all)
            return violation(std::vector<int>(elems, elems + 5),
                             "degenerate cube(" + std::to_string(x) + "," + std::to_string(x) +
                                 "," + std::to_string(x + h) + ")");
        }
      }
      break;
    }
  }
  FreenessResult ok;
  ok.free = true;
  return ok;
}

// ---------------------------------------------------------------------------
// Extremal search
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct Orbit {
  u64 mask = 0;
  int size = 0;
  int rep = 0;
};

std::vector<Orbit> negation_orbits(int n, Ambient ambient) {
  std::vector<Orbit> orbits;
  if (ambient == Ambient::ResiduesModN) orbits.push_back({1ull, 1, 0});
  for (int x = 1; 2 * x <= n; ++x) {
    int y = n - x;
    Orbit o;
    o.rep = x;
    o.mask = 1ull << x;
    o.size = 1;
    if (y != x && y <= n - 1) {
      o.mask |= 1ull << y;
      o.size = 2;
    }
    orbits.push_back(o);
  }
  return orbits;
}

std::vector<u64> forbidden_patterns(const ExtremalProblem& p) {
  const int n = p.n;
  std::vector<u64> pats;
  auto add = [&](std::initializer_list<int> xs) {
    u64 m = 0;
    for (int x : xs) m |= 1ull << x;
    pats.push_back(m);
  };
  switch (p.variant) {
    case ExtremalVariant::CoprimeSumFree:
      for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
          if (gcd_with({x, y}, n) == 1) add({x, y, (x + y) % n});
      break;
    case ExtremalVariant::RestrictedTripleFree:
      for (int h : {1, 2, 4})
        for (int x = 0; x < n; ++x)
          if (gcd_with({x, h}, n) == 1) add({x, (x + h) % n, (2 * x + h) % n});
      break;
    case ExtremalVariant::CoprimeCubeFree:
      for (int x = 1; x <= n - 1; ++x)
        for (int y = x; x + y <= n - 1; ++y)
          for (int z = y; x + y + z <= n - 1; ++z) {
            if (gcd_with({x, y, z}, n) != 1) continue;
            u64 m = 0;
            for (i64 c : cube_set(x, y, z)) m |= 1ull << c;
            pats.push_back(m);
          }
      break;
    case ExtremalVariant::DegenerateCubeFree:
    case ExtremalVariant::DegenerateCubeEvenFree: {
      const bool even_only = p.variant == ExtremalVariant::DegenerateCubeEvenFree;
      for (int h : {1, -1})
        for (int x = 1; 3 * x + h <= n - 1; ++x) {
          if (x + h < 1) continue;
          if (even_only && x % 2 != 0) continue;
          add({x, x + h, 2 * x, 2 * x + h, 3 * x + h});
        }
      break;
    }
  }
  std::sort(pats.begin(), pats.end());
  pats.erase(std::unique(pats.begin(), pats.end()), pats.end());
  return pats;
}

struct OrbitSearch {
  std::vector<Orbit> orbits;
  std::vector<u64> patterns;
  std::vector<std::vector<int>> orbit_patterns;  // patterns touching each orbit
  std::vector<int> suffix_sizes;
  Clock::time_point deadline;
  bool has_deadline = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  int best = -1;
  u64 best_mask = 0;

  bool out_of_time() {
    if (aborted) return true;
    if (has_deadline && (nodes & 2047) == 1 && Clock::now() > deadline) aborted = true;
    return aborted;
  }

  bool compatible(u64 chosen, int orbit_idx) const {
    u64 with = chosen | orbits[static_cast<size_t>(orbit_idx)].mask;
    for (int pi : orbit_patterns[static_cast<size_t>(orbit_idx)])
      if ((patterns[static_cast<size_t>(pi)] & ~with) == 0) return false;
    return true;
  }

  int potential(u64 chosen, size_t from) const {
    int total = 0;
    for (size_t j = from; j < orbits.size(); ++j)
      if (compatible(chosen, static_cast<int>(j))) total += orbits[j].size;
    return total;
  }

  // value phase: updates best/best_mask on strict improvement
  void dfs(size_t i, u64 chosen, int count) {
    ++nodes;
    if (out_of_time()) return;
    if (i == orbits.size()) {
      if (count > best) {
        best = count;
        best_mask = chosen;
      }
      return;
    }
    if (count + potential(chosen, i) <= best) return;
    if (compatible(chosen, static_cast<int>(i)))
      dfs(i + 1, chosen | orbits[i].mask, count + orbits[i].size);
    dfs(i + 1, chosen, count);
  }

  // witness phase: first leaf attaining the target in include-first order
  bool witness_dfs(size_t i, u64 chosen, int count, int target, u64& out) {
    ++nodes;
    if (out_of_time()) return false;
    if (count + potential(chosen, i) < target) return false;
    if (i == orbits.size()) {
      if (count == target) {
        out = chosen;
        return true;
      }
      return false;
    }
    if (compatible(chosen, static_cast<int>(i)) &&
        witness_dfs(i + 1, chosen | orbits[i].mask, count + orbits[i].size, target, out))
      return true;
    return witness_dfs(i + 1, chosen, count, target, out);
  }
};

}  // namespace

ExtremalResult max_extremal(const ExtremalProblem& p, const ExtremalSearchOptions& opt) {
  if (p.n < 3) throw std::domain_error("max_extremal: n must be >= 3");
  if (p.n > 64)
    throw std::domain_error("max_extremal: exact search is limited to n <= 64");

  OrbitSearch s;
  s.orbits = negation_orbits(p.n, ambient_of(p.variant));
  s.patterns = forbidden_patterns(p);
  s.orbit_patterns.resize(s.orbits.size());
  for (size_t oi = 0; oi < s.orbits.size(); ++oi)
    for (size_t pi = 0; pi < s.patterns.size(); ++pi)
      if (s.patterns[pi] & s.orbits[oi].mask)
        s.orbit_patterns[oi].push_back(static_cast<int>(pi));
  if (opt.time_budget_seconds > 0) {
    s.has_deadline = true;
    s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(opt.time_budget_seconds));
  }

  // greedy incumbent
  u64 greedy_mask = 0;
  int greedy_count = 0;
  for (size_t i = 0; i < s.orbits.size(); ++i) {
    if (s.compatible(greedy_mask, static_cast<int>(i))) {
      greedy_mask |= s.orbits[i].mask;
      greedy_count += s.orbits[i].size;
    }
  }
  s.best = greedy_count - 1;  // let the search rediscover (or beat) the greedy set
  s.best_mask = greedy_mask;
  s.dfs(0, 0, 0);
  if (s.best < greedy_count) {  // budget ran out before reaching it
    s.best = greedy_count;
    s.best_mask = greedy_mask;
  }

  bool certified = !s.aborted;
  u64 witness_mask = s.best_mask;
  if (certified) {
    u64 out = 0;
    if (s.witness_dfs(0, 0, 0, s.best, out) && !s.aborted)
      witness_mask = out;
    certified = !s.aborted;
  }

  std::vector<int> elems;
  for (int x = 0; x <= p.n - 1; ++x)
    if (witness_mask & (1ull << x)) elems.push_back(x);

  ExtremalResult r;
  r.maximum = s.best;
  r.witness = SymmetricSubset(p.n, ambient_of(p.variant), std::move(elems));
  r.certified = certified;
  r.method = certified ? "exhaustive" : "branch-and-bound";
  r.nodes = s.nodes;
  (void)opt.threads;
  (void)opt.deterministic;
  return r;
}

std::string to_string(ConstructionTag t) {
  switch (t) {
    case ConstructionTag::TwoPrimes: return "two-primes";
    case ConstructionTag::NoMultiplesOfThree: return "no-mult-3";
    case ConstructionTag::MiddleThird: return "middle-third";
  }
  return "?";
}

SymmetricSubset known_construction(ConstructionTag tag, int n) {
  switch (tag) {
    case ConstructionTag::TwoPrimes: {
      auto prof = arith_profile(n);
      if (prof.omega < 2)
        throw std::domain_error("two-primes construction: needs at least two prime factors");
      std::vector<int> elems;
      for (int x = 0; x < n; ++x)
        if (x % *prof.p1 == 0 || x % *prof.p2 == 0) elems.push_back(x);
      return SymmetricSubset(n, Ambient::ResiduesModN, std::move(elems));
    }
    case ConstructionTag::NoMultiplesOfThree: {
      if (n < 2) throw std::domain_error("no-mult-3 construction: needs n >= 2");
      // the multiples-of-3 complement is symmetric as it stands only when
      // 3 | n; otherwise keep its symmetric core
      std::vector<int> elems;
      for (int x = 1; x <= n - 1; ++x)
        if (x % 3 != 0 && (n - x) % 3 != 0) elems.push_back(x);
      return SymmetricSubset(n, Ambient::IntegersOneToNMinusOne, std::move(elems));
    }
    case ConstructionTag::MiddleThird: {
      if (n < 4) throw std::domain_error("middle-third construction: needs n >= 4");
      int lo = (n + 2) / 3;  // ceil(n/3)
      std::vector<int> elems;
      for (int x = lo; x <= n - lo; ++x) elems.push_back(x);
      return SymmetricSubset(n, Ambient::ResiduesModN, std::move(elems));
    }
  }
  throw std::domain_error("known_construction: unknown tag");
}

}  // namespace nct
