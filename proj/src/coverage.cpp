#include "nct/coverage.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <unordered_map>

namespace nct {

std::string to_string(Group g) { return g == Group::S ? "S" : "A"; }

// ---------------------------------------------------------------------------
// Primitive catalog
// ---------------------------------------------------------------------------

namespace {

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// (q^d - 1) / (q - 1)
i64 repunit(i64 q, int d) {
  i64 s = 1;
  for (int i = 1; i < d; ++i) s = s * q + 1;
  return s;
}

void add_entry(std::vector<CatalogEntry>& es, CatalogEntry e) {
  for (const auto& old : es)
    if (old.exceptional_type == e.exceptional_type) return;  // keep lowest line
  es.push_back(std::move(e));
}

bool pairwise_coprime(std::initializer_list<i64> xs) {
  std::vector<i64> v(xs);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (std::gcd(v[i], v[j]) != 1) return false;
  return true;
}

PrimitiveCatalog build_catalog(int n) {
  PrimitiveCatalog cat;
  cat.valid = n > 36;
  if (n < 2) return cat;
  auto& es = cat.entries;
  const i64 N = n;
  const auto qbase = prime_power_base(N);

  // line 1: n = q, tau = (1, q-1)
  if (qbase) {
    CatalogEntry e;
    e.line = 1;
    e.q = N;
    e.exceptional_type = CycleType(n, {n - 1, 1});
    add_entry(es, std::move(e));
  }
  // line 2: n = q + 1, tau = (1, q)
  if (n >= 3 && prime_power_base(N - 1)) {
    CatalogEntry e;
    e.line = 2;
    e.q = N - 1;
    e.exceptional_type = CycleType(n, {n - 1, 1});
    add_entry(es, std::move(e));
  }
  // line 3: n = q odd, tau = (1, (q-1)/2, (q-1)/2)
  if (n >= 5 && n % 2 == 1 && qbase) {
    CatalogEntry e;
    e.line = 3;
    e.q = N;
    e.exceptional_type = CycleType(n, {(n - 1) / 2, (n - 1) / 2, 1});
    add_entry(es, std::move(e));
  }
  // line 4: n = p^2, p odd prime, tau = (1, p-1, p(p-1))
  for (i64 p = 3; p * p <= N; p += 2) {
    if (p * p == N && is_prime(p)) {
      CatalogEntry e;
      e.line = 4;
      e.p = p;
      e.exceptional_type = CycleType(n, {static_cast<int>(p * (p - 1)), static_cast<int>(p - 1), 1});
      add_entry(es, std::move(e));
    }
  }
  // line 5: n = (q^d-1)/(q-1), d = d1 + d2, gcd(d1, d2) = 1
  for (const auto& rf : repunit_forms(N)) {
    for (int d1 = 1; 2 * d1 <= rf.d; ++d1) {
      int d2 = rf.d - d1;
      if (std::gcd(d1, d2) != 1) continue;
      i64 r1 = repunit(rf.q, d1), r2 = repunit(rf.q, d2);
      i64 r3 = r1 * (ipow(rf.q, d2) - 1);
      CatalogEntry e;
      e.line = 5;
      e.q = rf.q;
      e.d = rf.d;
      e.d1 = d1;
      e.d2 = d2;
      e.exceptional_type =
          CycleType(n, {static_cast<int>(r3), static_cast<int>(r2), static_cast<int>(r1)});
      add_entry(es, std::move(e));
    }
  }
  // line 6: n = q = 1 mod 3, tau = (1, (q-1)/3 x3)
  if (n >= 4 && n % 3 == 1 && qbase) {
    int t = (n - 1) / 3;
    CatalogEntry e;
    e.line = 6;
    e.q = N;
    e.exceptional_type = CycleType(n, {t, t, t, 1});
    add_entry(es, std::move(e));
  }
  // lines 7 and 8: n = 2^d.  Line 8's type equals line 7 at d1 = 1, so it
  // always deduplicates away; kept here for the record.
  if (n >= 4 && (n & (n - 1)) == 0) {
    int d = 0;
    while ((1 << d) < n) ++d;
    for (int d1 = 1; 2 * d1 <= d; ++d1) {
      int d2 = d - d1;
      i64 a = ipow(2, d1) - 1, b = ipow(2, d2) - 1;
      CatalogEntry e;
      e.line = 7;
      e.q = 2;
      e.d = d;
      e.d1 = d1;
      e.d2 = d2;
      e.exceptional_type = CycleType(
          n, {static_cast<int>(a * b), static_cast<int>(b), static_cast<int>(a), 1});
      add_entry(es, std::move(e));
    }
    if (d >= 2) {
      i64 h = ipow(2, d - 1) - 1;
      CatalogEntry e;
      e.line = 8;
      e.q = 2;
      e.d = d;
      e.exceptional_type = CycleType(n, {static_cast<int>(h), static_cast<int>(h), 1, 1});
      add_entry(es, std::move(e));
    }
  }
  // line 9: n = m^2, parts (k1 k2, k1 (m-k2), (m-k1) k2, (m-k1)(m-k2)),
  // k1, k2, m-k1, m-k2 pairwise coprime
  for (i64 m = 2; m * m <= N; ++m) {
    if (m * m != N) continue;
    for (i64 k1 = 1; k1 < m; ++k1) {
      for (i64 k2 = k1; k2 < m; ++k2) {
        if (!pairwise_coprime({k1, k2, m - k1, m - k2})) continue;
        CatalogEntry e;
        e.line = 9;
        e.m = m;
        e.k1 = k1;
        e.k2 = k2;
        e.exceptional_type =
            CycleType(n, {static_cast<int>(k1 * k2), static_cast<int>(k1 * (m - k2)),
                          static_cast<int>((m - k1) * k2), static_cast<int>((m - k1) * (m - k2))});
        add_entry(es, std::move(e));
      }
    }
  }
  // line 10: n = (q^d-1)/(q-1) with q odd, halved product repeated
  for (const auto& rf : repunit_forms(N)) {
    if (rf.q % 2 == 0) continue;
    for (int d1 = 1; 2 * d1 <= rf.d; ++d1) {
      int d2 = rf.d - d1;
      if (std::gcd(d1, d2) != 1) continue;
      i64 r1 = repunit(rf.q, d1), r2 = repunit(rf.q, d2);
      i64 prod = r1 * (ipow(rf.q, d2) - 1);  // even since q is odd
      CatalogEntry e;
      e.line = 10;
      e.q = rf.q;
      e.d = rf.d;
      e.d1 = d1;
      e.d2 = d2;
      e.exceptional_type = CycleType(n, {static_cast<int>(prod / 2), static_cast<int>(prod / 2),
                                         static_cast<int>(r2), static_cast<int>(r1)});
      add_entry(es, std::move(e));
    }
  }
  return cat;
}

}  // namespace

const PrimitiveCatalog& primitive_catalog(int n) {
  static std::mutex mu;
  static std::unordered_map<int, std::unique_ptr<PrimitiveCatalog>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it == memo.end())
    it = memo.emplace(n, std::make_unique<PrimitiveCatalog>(build_catalog(n))).first;
  return *it->second;
}

// ---------------------------------------------------------------------------
// SubgroupClass
// ---------------------------------------------------------------------------

SubgroupClass SubgroupClass::intransitive(int n, int k) {
  if (k < 1 || k > n - 1)
    throw std::domain_error("intransitive class: k must lie in [1, n-1]");
  SubgroupClass c;
  c.kind_ = SubgroupKind::Intransitive;
  c.n_ = n;
  c.param_ = std::min(k, n - k);  // k and n-k give the same class
  return c;
}

SubgroupClass SubgroupClass::imprimitive(int n, int b) {
  if (b <= 1 || b >= n || n % b != 0)
    throw std::domain_error("imprimitive class: block size must be a nontrivial proper divisor");
  SubgroupClass c;
  c.kind_ = SubgroupKind::Imprimitive;
  c.n_ = n;
  c.param_ = b;
  return c;
}

SubgroupClass SubgroupClass::affine(int p) {
  if (!is_prime(p)) throw std::domain_error("affine class: degree must be prime");
  SubgroupClass c;
  c.kind_ = SubgroupKind::Affine;
  c.n_ = p;
  c.param_ = p;
  return c;
}

SubgroupClass SubgroupClass::primitive_wildcard(int n) {
  const auto& cat = primitive_catalog(n);
  if (cat.entries.empty())
    throw std::domain_error("primitive wildcard: catalog is empty at this degree");
  SubgroupClass c;
  c.kind_ = SubgroupKind::PrimitiveWildcard;
  c.n_ = n;
  for (const auto& e : cat.entries) c.wildcard_types_.push_back(e.exceptional_type);
  std::sort(c.wildcard_types_.begin(), c.wildcard_types_.end());
  return c;
}

SubgroupClass SubgroupClass::alternating(int n) {
  SubgroupClass c;
  c.kind_ = SubgroupKind::Alternating;
  c.n_ = n;
  return c;
}

std::string SubgroupClass::description() const {
  switch (kind_) {
    case SubgroupKind::Intransitive:
      return "S_" + std::to_string(param_) + "xS_" + std::to_string(n_ - param_);
    case SubgroupKind::Imprimitive:
      return "S_" + std::to_string(param_) + "wrS_" + std::to_string(n_ / param_);
    case SubgroupKind::Affine:
      return "AGL_1(" + std::to_string(param_) + ")";
    case SubgroupKind::PrimitiveWildcard:
      return "primitive(" + std::to_string(wildcard_types_.size()) + " types)";
    case SubgroupKind::Alternating:
      return "A_" + std::to_string(n_);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Coverage predicates
// ---------------------------------------------------------------------------

bool covers_intransitive(int k, const CycleType& t) {
  if (k < 1 || k > t.n() - 1)
    throw std::domain_error("covers_intransitive: k must lie in [1, n-1]");
  return invariant_set_bits(t).test(k);
}

namespace {

// Backtracking search for a decomposition of the cycle multiset into cells,
// each cell of total d*b with d dividing every member.
struct ImprimitiveSearch {
  i64 b;
  std::map<std::vector<int>, bool> memo;

  bool feasible(const std::vector<int>& rem) {
    if (rem.empty()) return true;
    auto it = memo.find(rem);
    if (it != memo.end()) return it->second;
    bool ok = false;
    int x = rem[0];
    std::vector<int> rest(rem.begin() + 1, rem.end());
    i64 total_rem = 0;
    for (int v : rem) total_rem += v;
    for (i64 d : divisors(x)) {
      i64 cell = d * b;
      if (cell < x || cell > total_rem) continue;
      std::vector<char> taken(rest.size(), 0);
      if (pick(rest, taken, d, cell - x, 0)) {
        ok = true;
        break;
      }
    }
    memo[rem] = ok;
    return ok;
  }

  // Choose elements of rest (sorted desc) divisible by d summing to target,
  // then recurse on the leftover.  Runs of equal values are decided by count
  // to avoid duplicate submultisets.
  bool pick(std::vector<int>& rest, std::vector<char>& taken, i64 d, i64 target, size_t i) {
    if (target == 0) {
      std::vector<int> leftover;
      for (size_t j = 0; j < rest.size(); ++j)
        if (!taken[j]) leftover.push_back(rest[j]);
      return feasible(leftover);
    }
    if (i >= rest.size()) return false;
    size_t j = i;
    while (j < rest.size() && rest[j] == rest[i]) ++j;
    i64 v = rest[i];
    i64 max_take = 0;
    if (v % d == 0) max_take = std::min<i64>(static_cast<i64>(j - i), target / v);
    for (i64 c = max_take; c >= 0; --c) {
      for (i64 t2 = 0; t2 < c; ++t2) taken[i + static_cast<size_t>(t2)] = 1;
      bool ok = pick(rest, taken, d, target - c * v, j);
      for (i64 t2 = 0; t2 < c; ++t2) taken[i + static_cast<size_t>(t2)] = 0;
      if (ok) return true;
    }
    return false;
  }
};

}  // namespace

bool covers_imprimitive_exact(int b, const CycleType& t) {
  const int n = t.n();
  if (b <= 1 || b >= n || n % b != 0)
    throw std::domain_error("covers_imprimitive_exact: invalid block size");
  const auto& parts = t.parts();
  bool all_b = true, all_d0 = true;
  const int d0 = n / b;
  for (int p : parts) {
    all_b = all_b && p % b == 0;
    all_d0 = all_d0 && p % d0 == 0;
  }
  if (all_b || all_d0) return true;
  ImprimitiveSearch search{b, {}};
  return search.feasible(parts);
}

namespace {

constexpr int kMaxCellEnumeration = 10;

// Enumerate set partitions of {0..k-1} via restricted growth strings and
// test the block-size criterion with b = gcd of cell sums.
std::optional<int> imprimitive_by_cells(const CycleType& t) {
  const int k = t.cycle_count();
  const auto& parts = t.parts();
  std::vector<int> assign(static_cast<size_t>(k), 0);
  std::optional<int> found;
  auto rec = [&](auto&& self, int i, int num_cells) -> bool {
    if (found) return true;
    if (i == k) {
      if (num_cells <= 1 || num_cells >= k) return false;  // neither trivial nor discrete
      std::vector<i64> sums(static_cast<size_t>(num_cells), 0);
      for (int j = 0; j < k; ++j) sums[static_cast<size_t>(assign[static_cast<size_t>(j)])] += parts[static_cast<size_t>(j)];
      i64 b = 0;
      for (i64 s : sums) b = std::gcd(b, s);
      if (b <= 1) return false;
      for (int j = 0; j < k; ++j) {
        i64 q = sums[static_cast<size_t>(assign[static_cast<size_t>(j)])] / b;
        if (parts[static_cast<size_t>(j)] % q != 0) return false;
      }
      found = static_cast<int>(b);
      return true;
    }
    for (int c = 0; c <= num_cells; ++c) {
      assign[static_cast<size_t>(i)] = c;
      if (self(self, i + 1, std::max(num_cells, c + 1))) return true;
    }
    return false;
  };
  rec(rec, 1, 1);  // first index pinned to cell 0
  return found;
}

}  // namespace

ImprimitiveWitness covered_by_some_imprimitive(const CycleType& t) {
  const int n = t.n();
  std::vector<int> blocks;
  for (i64 b : divisors(n))
    if (b > 1 && b < n) blocks.push_back(static_cast<int>(b));
  if (blocks.empty()) return {false, std::nullopt};  // prime degree
  if (t.cycle_count() == 1) return {true, blocks.front()};
  int g = t.parts_gcd();
  if (g > 1) return {true, static_cast<int>(smallest_prime_factor(g))};
  if (t.cycle_count() <= kMaxCellEnumeration) {
    if (auto b = imprimitive_by_cells(t)) return {true, *b};
    return {false, std::nullopt};
  }
  for (int b : blocks)
    if (covers_imprimitive_exact(b, t)) return {true, b};
  return {false, std::nullopt};
}

bool imprimitive_shortcut_small_k(const CycleType& t) {
  const int k = t.cycle_count();
  if (k < 2 || k > 4)
    throw std::domain_error("imprimitive_shortcut_small_k: requires 2 <= k <= 4");
  if (t.parts_gcd() != 1)
    throw std::domain_error("imprimitive_shortcut_small_k: requires part-gcd 1");
  const i64 n = t.n();
  const auto& p = t.parts();
  if (k == 2) return false;  // only cell partitions are the trivial and discrete ones

  auto divides_all = [](i64 q, std::initializer_list<i64> xs) {
    for (i64 x : xs)
      if (x % q != 0) return false;
    return true;
  };

  if (k == 3) {
    for (int s = 0; s < 3; ++s) {
      i64 rest = n - p[static_cast<size_t>(s)];
      i64 q = rest / std::gcd(rest, n);
      i64 a = p[static_cast<size_t>((s + 1) % 3)], c = p[static_cast<size_t>((s + 2) % 3)];
      if (divides_all(q, {a, c})) return true;
    }
    return false;
  }

  // k == 4
  const i64 x0 = p[0], x1 = p[1], x2 = p[2], x3 = p[3];
  const i64 xs[4] = {x0, x1, x2, x3};
  // (a): three cycles against one
  for (int s = 0; s < 4; ++s) {
    i64 rest = n - xs[s];
    i64 q = rest / std::gcd(rest, n);
    bool ok = true;
    for (int j = 0; j < 4; ++j)
      if (j != s && xs[j] % q != 0) ok = false;
    if (ok) return true;
  }
  // (b): a pair against two singletons
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      int l = -1, m = -1;
      for (int r = 0; r < 4; ++r)
        if (r != i && r != j) (l < 0 ? l : m) = r;
      i64 b = std::gcd(std::gcd(xs[l], xs[m]), n);
      i64 q = (xs[i] + xs[j]) / b;
      if (divides_all(q, {xs[i], xs[j]})) return true;
    }
  }
  // (c): two pairs
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pr : pairings) {
    i64 s1 = xs[pr[0]] + xs[pr[1]], s2 = n - s1;
    i64 b = std::gcd(s1, n);
    if (divides_all(s1 / b, {xs[pr[0]], xs[pr[1]]}) &&
        divides_all(s2 / b, {xs[pr[2]], xs[pr[3]]}))
      return true;
  }
  return false;
}

bool covers_affine(i64 p, const CycleType& t) {
  if (t.n() != p || !is_prime(p))
    throw std::domain_error("covers_affine: degree must be the given prime");
  if (t.is_n_cycle() || t.is_identity()) return true;
  const auto& parts = t.parts();  // descending, so any fixed point is last
  size_t k = parts.size();
  if (parts[k - 1] != 1) return false;
  if (k >= 2 && parts[k - 2] == 1) return false;  // more than one fixed point
  int d = parts[0];
  for (size_t i = 0; i + 1 < k; ++i)
    if (parts[i] != d) return false;
  return (p - 1) % d == 0;
}

bool class_covers(const SubgroupClass& c, const CycleType& t) {
  if (c.n() != t.n()) throw std::domain_error("class_covers: degree mismatch");
  if (t.is_identity()) return true;  // the identity lies in every subgroup
  switch (c.kind()) {
    case SubgroupKind::Intransitive:
      return covers_intransitive(c.param(), t);
    case SubgroupKind::Imprimitive:
      return covers_imprimitive_exact(c.param(), t);
    case SubgroupKind::Affine:
      return covers_affine(c.param(), t);
    case SubgroupKind::Alternating:
      return t.sign() == +1;
    case SubgroupKind::PrimitiveWildcard: {
      if (t.is_n_cycle()) return true;  // merged classes are transitive
      const auto& types = c.wildcard_types();
      return std::binary_search(types.begin(), types.end(), t);
    }
  }
  return false;
}

}  // namespace nct
