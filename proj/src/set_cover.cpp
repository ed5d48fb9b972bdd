#include "nct/set_cover.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nct {

int Bits::count() const {
  int c = 0;
  for (auto x : w_) c += std::popcount(x);
  return c;
}

bool Bits::is_subset_of(const Bits& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool Bits::intersects(const Bits& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

int Bits::find_first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
  return -1;
}

Bits& Bits::operator|=(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bits& Bits::and_not(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

std::uint64_t Bits::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto x : w_) h = (h ^ x) * 0xbf58476d1ce4e5b9ull;
  return h;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Reduced {
  std::vector<Bits> rows;  // minimal distinct rows still to cover
  std::vector<int> base;   // candidates forced by singleton rows
  Bits base_bits;
};

// Duplicate rows collapse; a row containing another row as a subset is
// redundant (covering the subset covers it); singleton rows force their
// candidate.
Reduced reduce_rows(const SetCoverProblem& prob) {
  const int C = prob.candidate_count;
  std::unordered_map<std::uint64_t, std::vector<int>> seen;
  std::vector<Bits> distinct;
  for (int i = 0; i < static_cast<int>(prob.rows.size()); ++i) {
    const Bits& r = prob.rows[i];
    if (r.none()) throw InfeasibleCover(i, "set cover: element has no covering candidate");
    auto& bucket = seen[r.hash()];
    bool dup = false;
    for (int j : bucket)
      if (distinct[static_cast<size_t>(j)] == r) {
        dup = true;
        break;
      }
    if (!dup) {
      bucket.push_back(static_cast<int>(distinct.size()));
      distinct.push_back(r);
    }
  }
  std::sort(distinct.begin(), distinct.end(),
            [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
  std::vector<Bits> minimal;
  for (const Bits& r : distinct) {
    bool subsumed = false;
    for (const Bits& m : minimal)
      if (m.is_subset_of(r)) {
        subsumed = true;
        break;
      }
    if (!subsumed) minimal.push_back(r);
  }

  Reduced red;
  red.base_bits = Bits(C);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Bits& r : minimal) {
      if (r.intersects(red.base_bits)) continue;
      if (r.count() == 1) {
        int c = r.find_first();
        red.base.push_back(c);
        red.base_bits.set(c);
        changed = true;
      }
    }
  }
  for (const Bits& r : minimal)
    if (!r.intersects(red.base_bits)) red.rows.push_back(r);
  std::sort(red.base.begin(), red.base.end());
  return red;
}

// Trail-based search state: a doubly-linked list of uncovered rows, per-row
// available-candidate counts maintained under exclusions, and an undo trail.
struct Engine {
  int C = 0, R = 0;
  std::vector<Bits> rows;  // row -> candidate bits
  std::vector<std::vector<int>> row_cands;
  std::vector<std::vector<int>> cand_rows;

  Bits excluded;
  std::vector<char> included;
  std::vector<int> avail;    // valid while a row is uncovered
  std::vector<char> covered;
  std::vector<int> unc_rows;  // compact array of uncovered rows
  std::vector<int> unc_pos;   // row -> index in unc_rows
  int uncovered_count = 0;

  enum class Op : char { Exclude, Include, Cover };
  struct TrailOp {
    Op op;
    int idx;
  };
  std::vector<TrailOp> trail;

  std::vector<int> unit_queue;
  std::vector<std::vector<int>> buckets;
  Bits used_scratch;

  // matching scratch over candidate vertices, version-stamped
  std::vector<int> match_, stamp_, color_, visit_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> touched_, comp_queue_, comp_list_;
  int stamp_now_ = 0, visit_now_ = 0;

  Engine(const std::vector<Bits>& rows_, int C_)
      : C(C_), R(static_cast<int>(rows_.size())), rows(rows_), excluded(C_), used_scratch(C_) {
    row_cands.resize(static_cast<size_t>(R));
    cand_rows.resize(static_cast<size_t>(C));
    for (int r = 0; r < R; ++r)
      rows[static_cast<size_t>(r)].for_each_set([&](int c) {
        row_cands[static_cast<size_t>(r)].push_back(c);
        cand_rows[static_cast<size_t>(c)].push_back(r);
      });
    included.assign(static_cast<size_t>(C), 0);
    covered.assign(static_cast<size_t>(R), 0);
    avail.resize(static_cast<size_t>(R));
    for (int r = 0; r < R; ++r)
      avail[static_cast<size_t>(r)] = static_cast<int>(row_cands[static_cast<size_t>(r)].size());
    unc_rows.resize(static_cast<size_t>(R));
    unc_pos.resize(static_cast<size_t>(R));
    for (int r = 0; r < R; ++r) {
      unc_rows[static_cast<size_t>(r)] = r;
      unc_pos[static_cast<size_t>(r)] = r;
    }
    uncovered_count = R;
    buckets.resize(9);
    match_.assign(static_cast<size_t>(C), -1);
    stamp_.assign(static_cast<size_t>(C), 0);
    color_.assign(static_cast<size_t>(C), 0);
    visit_.assign(static_cast<size_t>(C), 0);
    adj_.resize(static_cast<size_t>(C));
  }

  size_t mark() const { return trail.size(); }

  void unwind(size_t to) {
    while (trail.size() > to) {
      TrailOp t = trail.back();
      trail.pop_back();
      switch (t.op) {
        case Op::Exclude:
          excluded.reset(t.idx);
          for (int r : cand_rows[static_cast<size_t>(t.idx)])
            if (!covered[static_cast<size_t>(r)]) ++avail[static_cast<size_t>(r)];
          break;
        case Op::Include:
          included[static_cast<size_t>(t.idx)] = 0;
          break;
        case Op::Cover: {
          int r = t.idx;
          covered[static_cast<size_t>(r)] = 0;
          unc_pos[static_cast<size_t>(r)] = static_cast<int>(unc_rows.size());
          unc_rows.push_back(r);
          ++uncovered_count;
          break;
        }
      }
    }
  }

  // false if some row lost its last candidate
  bool exclude_candidate(int c) {
    excluded.set(c);
    trail.push_back({Op::Exclude, c});
    bool ok = true;
    for (int r : cand_rows[static_cast<size_t>(c)]) {
      if (covered[static_cast<size_t>(r)]) continue;
      int a = --avail[static_cast<size_t>(r)];
      if (a == 0) ok = false;
      if (a == 1) unit_queue.push_back(r);
    }
    return ok;
  }

  void include_candidate(int c) {
    included[static_cast<size_t>(c)] = 1;
    trail.push_back({Op::Include, c});
    for (int r : cand_rows[static_cast<size_t>(c)]) {
      if (covered[static_cast<size_t>(r)]) continue;
      covered[static_cast<size_t>(r)] = 1;
      int pos = unc_pos[static_cast<size_t>(r)];
      int last = unc_rows.back();
      unc_rows[static_cast<size_t>(pos)] = last;
      unc_pos[static_cast<size_t>(last)] = pos;
      unc_rows.pop_back();
      --uncovered_count;
      trail.push_back({Op::Cover, r});
    }
  }

  int first_avail(int r) const {
    for (int c : row_cands[static_cast<size_t>(r)])
      if (!excluded.test(c)) return c;
    return -1;
  }

  // Settle queued unit rows; forced inclusions are appended to the given
  // stack.  Returns -1 on a conflict, otherwise the number of inclusions.
  // Inclusions only cover rows, so settling the queue once is complete.
  int propagate(std::vector<int>& chosen_out) {
    int count = 0;
    while (!unit_queue.empty()) {
      int r = unit_queue.back();
      unit_queue.pop_back();
      if (covered[static_cast<size_t>(r)]) continue;
      if (avail[static_cast<size_t>(r)] == 0) {
        unit_queue.clear();
        return -1;
      }
      if (avail[static_cast<size_t>(r)] != 1) continue;
      int c = first_avail(r);
      include_candidate(c);
      chosen_out.push_back(c);
      ++count;
    }
    return count;
  }

  // One pass over the uncovered list: buckets rows by availability, finds
  // the tightest row, queues every unit row.  Returns false on an empty row.
  bool scan(int& min_row) {
    for (auto& b : buckets) b.clear();
    min_row = -1;
    int min_cnt = INT32_MAX;
    bool units = false;
    for (size_t i = 0; i < unc_rows.size(); ++i) {
      const int r = unc_rows[i];
      const int a = avail[static_cast<size_t>(r)];
      if (a == 0) return false;
      if (a == 1) {
        unit_queue.push_back(r);
        units = true;
        continue;
      }
      if (!units) {
        buckets[static_cast<size_t>(std::min(a, 8))].push_back(r);
        if (a < min_cnt) {
          min_cnt = a;
          min_row = r;
        }
      }
    }
    return true;
  }

  bool try_augment(int u) {
    for (int v : adj_[static_cast<size_t>(u)]) {
      if (visit_[static_cast<size_t>(v)] == visit_now_) continue;
      visit_[static_cast<size_t>(v)] = visit_now_;
      if (match_[static_cast<size_t>(v)] < 0 || try_augment(match_[static_cast<size_t>(v)])) {
        match_[static_cast<size_t>(v)] = u;
        match_[static_cast<size_t>(u)] = v;
        return true;
      }
    }
    return false;
  }

  // Lower bound on the candidates still needed, from groups of rows with
  // pairwise-disjoint supports.  Rows with two available candidates form a
  // graph; per connected component, covering its rows needs at least a
  // maximum matching, plus one more when the component is not bipartite
  // (half-integral matching duality).  Wider rows pack greedily on
  // candidates no component touches.
  int lower_bound() {
    int lb = 0;
    auto& used = used_scratch.words_mut();
    std::fill(used.begin(), used.end(), 0);
    const auto& exc = excluded.words();
    const size_t W = used.size();

    if (!buckets[2].empty()) {
      ++stamp_now_;
      touched_.clear();
      for (int r : buckets[2]) {
        int uv[2], k = 0;
        for (int c : row_cands[static_cast<size_t>(r)]) {
          if (excluded.test(c)) continue;
          uv[k++] = c;
          if (k == 2) break;
        }
        for (int s = 0; s < 2; ++s) {
          int c = uv[s];
          if (stamp_[static_cast<size_t>(c)] != stamp_now_) {
            stamp_[static_cast<size_t>(c)] = stamp_now_;
            adj_[static_cast<size_t>(c)].clear();
            match_[static_cast<size_t>(c)] = -1;
            color_[static_cast<size_t>(c)] = -1;
            touched_.push_back(c);
          }
        }
        adj_[static_cast<size_t>(uv[0])].push_back(uv[1]);
        adj_[static_cast<size_t>(uv[1])].push_back(uv[0]);
      }
      // components by BFS; 2-color to detect odd cycles
      for (int root : touched_) {
        if (color_[static_cast<size_t>(root)] != -1) continue;
        auto& queue = comp_queue_;
        auto& comp = comp_list_;
        queue.clear();
        comp.clear();
        queue.push_back(root);
        color_[static_cast<size_t>(root)] = 0;
        bool bipartite = true;
        while (!queue.empty()) {
          int u = queue.back();
          queue.pop_back();
          comp.push_back(u);
          for (int v : adj_[static_cast<size_t>(u)]) {
            if (color_[static_cast<size_t>(v)] == -1) {
              color_[static_cast<size_t>(v)] = 1 - color_[static_cast<size_t>(u)];
              queue.push_back(v);
            } else if (color_[static_cast<size_t>(v)] == color_[static_cast<size_t>(u)]) {
              bipartite = false;
            }
          }
        }
        int matched = 0;
        for (int u : comp) {
          if (match_[static_cast<size_t>(u)] >= 0) continue;
          ++visit_now_;
          if (try_augment(u)) ++matched;
        }
        // a bare odd cycle needs one more vertex than its matching; for
        // other non-bipartite components matching alone stays valid
        size_t deg_sum = 0;
        bool all_deg2 = true;
        for (int u : comp) {
          deg_sum += adj_[static_cast<size_t>(u)].size();
          if (adj_[static_cast<size_t>(u)].size() != 2) all_deg2 = false;
        }
        bool bare_odd_cycle = !bipartite && all_deg2 && deg_sum == 2 * comp.size();
        lb += matched + (bare_odd_cycle ? 1 : 0);
        for (int u : comp) used[static_cast<size_t>(u) >> 6] |= 1ull << (u & 63);
      }
    }

    for (size_t bi = 3; bi < buckets.size(); ++bi) {
      for (int r : buckets[bi]) {
        const auto& rw = rows[static_cast<size_t>(r)].words();
        bool disjoint = true;
        for (size_t w = 0; w < W; ++w)
          if (rw[w] & ~exc[w] & used[w]) {
            disjoint = false;
            break;
          }
        if (disjoint) {
          ++lb;
          for (size_t w = 0; w < W; ++w) used[w] |= rw[w] & ~exc[w];
        }
      }
    }
    return lb;
  }
};

struct SharedBest {
  std::atomic<int> best{INT32_MAX};
  std::mutex mutex;
  std::vector<int> cover;  // non-base candidates of a cover attaining best
  std::atomic<bool> aborted{false};
};

struct ValueSearch {
  Engine eng;
  int base_size;
  SharedBest* shared;
  Clock::time_point deadline;
  bool has_deadline = false;
  std::uint64_t nodes = 0;
  std::vector<int> chosen_stack;

  ValueSearch(const std::vector<Bits>& rows, int C, int base, SharedBest* sh)
      : eng(rows, C), base_size(base), shared(sh) {}

  bool out_of_time() {
    if (shared->aborted.load(std::memory_order_relaxed)) return true;
    if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) {
      shared->aborted.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  void record_cover(int total) {
    int cur = shared->best.load(std::memory_order_relaxed);
    while (total < cur && !shared->best.compare_exchange_weak(cur, total)) {
    }
    std::lock_guard<std::mutex> lock(shared->mutex);
    if (total <= shared->best.load(std::memory_order_relaxed)) shared->cover = chosen_stack;
  }

  void dfs(int included) {
    ++nodes;
    if (out_of_time()) return;
    const size_t m = eng.mark();
    const size_t sm = chosen_stack.size();
    auto bail = [&] {
      eng.unit_queue.clear();
      eng.unwind(m);
      chosen_stack.resize(sm);
    };

    for (;;) {
      int np = eng.propagate(chosen_stack);
      if (np < 0) {
        bail();
        return;
      }
      included += np;
      int min_row = -1;
      if (!eng.scan(min_row)) {
        bail();
        return;
      }
      if (!eng.unit_queue.empty()) continue;
      if (eng.uncovered_count == 0) {
        record_cover(base_size + included);
        bail();
        return;
      }
      if (base_size + included + eng.lower_bound() >=
          shared->best.load(std::memory_order_relaxed)) {
        bail();
        return;
      }
      std::array<std::pair<int, int>, 64> cand_buf;
      std::vector<std::pair<int, int>> cand_spill;
      std::pair<int, int>* cands = cand_buf.data();
      if (eng.avail[static_cast<size_t>(min_row)] > 64) {
        cand_spill.resize(static_cast<size_t>(eng.avail[static_cast<size_t>(min_row)]));
        cands = cand_spill.data();
      }
      size_t ncands = 0;
      for (int c : eng.row_cands[static_cast<size_t>(min_row)]) {
        if (eng.excluded.test(c)) continue;
        int cov = 0;
        for (int r : eng.cand_rows[static_cast<size_t>(c)])
          cov += !eng.covered[static_cast<size_t>(r)];
        cands[ncands++] = {-cov, c};
      }
      std::sort(cands, cands + ncands);
      for (size_t ci = 0; ci < ncands; ++ci) {
        int c = cands[ci].second;
        const size_t m2 = eng.mark();
        eng.include_candidate(c);
        chosen_stack.push_back(c);
        dfs(included + 1);
        chosen_stack.pop_back();
        eng.unwind(m2);
        if (shared->aborted.load(std::memory_order_relaxed)) break;
        if (!eng.exclude_candidate(c)) break;  // some row just died
      }
      bail();
      return;
    }
  }
};

std::vector<int> greedy_cover(const std::vector<Bits>& rows, int C, const Bits& inactive) {
  const int R = static_cast<int>(rows.size());
  std::vector<Bits> cover_rows(static_cast<size_t>(C), Bits(R));
  for (int r = 0; r < R; ++r)
    rows[static_cast<size_t>(r)].for_each_set(
        [&](int c) { cover_rows[static_cast<size_t>(c)].set(r); });
  Bits uncovered(R);
  for (int r = 0; r < R; ++r) uncovered.set(r);
  std::vector<int> out;
  while (!uncovered.none()) {
    int best_c = -1, best_cov = 0;
    for (int c = 0; c < C; ++c) {
      if (inactive.test(c)) continue;
      Bits cov = cover_rows[static_cast<size_t>(c)];
      cov &= uncovered;
      int cnt = cov.count();
      if (cnt > best_cov) {
        best_cov = cnt;
        best_c = c;
      }
    }
    if (best_c < 0) break;
    out.push_back(best_c);
    uncovered.and_not(cover_rows[static_cast<size_t>(best_c)]);
  }
  return out;
}

// Feasibility probe: is there a cover using at most `budget` additional
// candidates, honoring the current inclusions/exclusions?  Same
// row-branching search as the value phase, stopping at the first hit.
struct FindCover {
  Engine eng;
  int budget = 0;
  Clock::time_point deadline;
  bool has_deadline = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  std::vector<int> scratch_stack;

  FindCover(const std::vector<Bits>& rows, int C) : eng(rows, C) {}

  bool out_of_time() {
    if (aborted) return true;
    if (has_deadline && (nodes & 1023) == 1 && Clock::now() > deadline) aborted = true;
    return aborted;
  }

  bool dfs(int included) {
    ++nodes;
    if (out_of_time()) return false;
    const size_t m = eng.mark();
    const size_t sm = scratch_stack.size();
    auto bail = [&] {
      eng.unit_queue.clear();
      eng.unwind(m);
      scratch_stack.resize(sm);
    };
    for (;;) {
      int np = eng.propagate(scratch_stack);
      if (np < 0) break;
      included += np;
      int min_row = -1;
      if (!eng.scan(min_row)) break;
      if (!eng.unit_queue.empty()) continue;
      if (eng.uncovered_count == 0) {
        if (included <= budget) return true;
        break;
      }
      if (included + eng.lower_bound() > budget) break;
      std::array<std::pair<int, int>, 64> cand_buf;
      std::vector<std::pair<int, int>> cand_spill;
      std::pair<int, int>* cands = cand_buf.data();
      if (eng.avail[static_cast<size_t>(min_row)] > 64) {
        cand_spill.resize(static_cast<size_t>(eng.avail[static_cast<size_t>(min_row)]));
        cands = cand_spill.data();
      }
      size_t ncands = 0;
      for (int c : eng.row_cands[static_cast<size_t>(min_row)]) {
        if (eng.excluded.test(c)) continue;
        int cov = 0;
        for (int r : eng.cand_rows[static_cast<size_t>(c)])
          cov += !eng.covered[static_cast<size_t>(r)];
        cands[ncands++] = {-cov, c};
      }
      std::sort(cands, cands + ncands);
      for (size_t ci = 0; ci < ncands; ++ci) {
        int c = cands[ci].second;
        const size_t m2 = eng.mark();
        eng.include_candidate(c);
        if (dfs(included + 1)) return true;
        eng.unwind(m2);
        if (aborted) break;
        if (!eng.exclude_candidate(c)) break;
      }
      break;
    }
    bail();
    return false;
  }
};

// The lexicographically least optimal cover, by greedy fixing: walk the
// candidates in index order and keep one exactly when some optimal cover
// extends the decisions made so far with it.  Each test is a budgeted
// feasibility search.
std::vector<int> lex_least_cover(const std::vector<Bits>& rows, int C, const Bits& base_bits,
                                 int target_extra, Clock::time_point deadline,
                                 bool has_deadline, bool& aborted, std::uint64_t& nodes) {
  std::vector<int> fixed;
  Bits banned(C);
  for (int c = 0; c < C && static_cast<int>(fixed.size()) < target_extra; ++c) {
    if (base_bits.test(c)) continue;
    FindCover fc(rows, C);
    fc.budget = target_extra;
    fc.deadline = deadline;
    fc.has_deadline = has_deadline;
    for (int f : fixed) fc.eng.include_candidate(f);
    fc.eng.include_candidate(c);
    bool viable = true;
    banned.for_each_set([&](int b) {
      if (!fc.eng.exclude_candidate(b)) viable = false;
    });
    fc.eng.unit_queue.clear();
    bool feasible = viable && fc.dfs(static_cast<int>(fixed.size()) + 1);
    nodes += fc.nodes;
    if (fc.aborted) {
      aborted = true;
      return {};
    }
    if (feasible)
      fixed.push_back(c);
    else
      banned.set(c);
  }
  return fixed;
}

}  // namespace

SetCoverSolution solve_set_cover(const SetCoverProblem& prob, const SetCoverOptions& opt) {
  const int C = prob.candidate_count;
  Reduced red = reduce_rows(prob);
  const int R = static_cast<int>(red.rows.size());

  SetCoverSolution sol;
  if (R == 0) {
    sol.size = static_cast<int>(red.base.size());
    sol.chosen = red.base;
    sol.optimal = true;
    sol.lex_witness = true;
    return sol;
  }

  // dominated candidates never improve the value search
  std::vector<Bits> cover_rows(static_cast<size_t>(C), Bits(R));
  for (int r = 0; r < R; ++r)
    red.rows[static_cast<size_t>(r)].for_each_set(
        [&](int c) { cover_rows[static_cast<size_t>(c)].set(r); });
  Bits inactive(C);
  inactive |= red.base_bits;
  for (int c = 0; c < C; ++c) {
    if (inactive.test(c)) continue;
    const Bits& cov_c = cover_rows[static_cast<size_t>(c)];
    if (cov_c.none()) {
      inactive.set(c);
      continue;
    }
    for (int c2 = 0; c2 < C; ++c2) {
      if (c2 == c || inactive.test(c2)) continue;
      const Bits& cov_2 = cover_rows[static_cast<size_t>(c2)];
      if (cov_c.is_subset_of(cov_2) && (cov_c.count() < cov_2.count() || c2 < c)) {
        inactive.set(c);
        break;
      }
    }
  }

  std::vector<int> greedy = greedy_cover(red.rows, C, inactive);
  int incumbent_size = static_cast<int>(red.base.size() + greedy.size());
  std::vector<int> incumbent_cover = greedy;
  if (!opt.incumbent.empty()) {
    Bits chosen(C);
    for (int c : opt.incumbent) chosen.set(c);
    bool covers_all = true;
    for (const Bits& r : red.rows)
      if (!r.intersects(chosen)) {
        covers_all = false;
        break;
      }
    if (covers_all && static_cast<int>(opt.incumbent.size()) < incumbent_size) {
      std::vector<int> extra;
      for (int c : opt.incumbent)
        if (!red.base_bits.test(c)) extra.push_back(c);
      incumbent_size = static_cast<int>(red.base.size() + extra.size());
      incumbent_cover = std::move(extra);
    }
  }

  Clock::time_point deadline{};
  const bool has_deadline = opt.time_budget_seconds > 0;
  if (has_deadline)
    deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(opt.time_budget_seconds));

  SharedBest shared;
  shared.best.store(incumbent_size);
  shared.cover = incumbent_cover;
  std::uint64_t total_nodes = 0;

  auto exclude_inactive = [&](Engine& eng) {
    inactive.for_each_set([&](int c) {
      if (!red.base_bits.test(c)) eng.exclude_candidate(c);
    });
    eng.unit_queue.clear();  // root exclusions; the first scan re-detects units
  };

  bool ran_parallel = false;
#ifdef _OPENMP
  if (opt.threads > 1) {
    std::vector<int> root_cands;
    {
      Engine probe(red.rows, C);
      exclude_inactive(probe);
      int min_row = -1, min_cnt = INT32_MAX;
      for (int r = 0; r < probe.R; ++r)
        if (probe.avail[static_cast<size_t>(r)] > 1 &&
            probe.avail[static_cast<size_t>(r)] < min_cnt) {
          min_cnt = probe.avail[static_cast<size_t>(r)];
          min_row = r;
        }
      if (min_row >= 0)
        for (int c : probe.row_cands[static_cast<size_t>(min_row)])
          if (!probe.excluded.test(c)) root_cands.push_back(c);
    }
    if (root_cands.size() > 1) {
      ran_parallel = true;
      std::atomic<std::uint64_t> node_sum{0};
#pragma omp parallel for schedule(dynamic, 1) num_threads(opt.threads)
      for (size_t i = 0; i < root_cands.size(); ++i) {
        ValueSearch vs(red.rows, C, static_cast<int>(red.base.size()), &shared);
        vs.has_deadline = has_deadline;
        vs.deadline = deadline;
        exclude_inactive(vs.eng);
        bool viable = true;
        for (size_t j = 0; j < i; ++j)
          if (!vs.eng.exclude_candidate(root_cands[j])) viable = false;
        vs.eng.unit_queue.clear();
        if (viable) {
          vs.eng.include_candidate(root_cands[i]);
          vs.chosen_stack.push_back(root_cands[i]);
          vs.dfs(1);
        }
        node_sum.fetch_add(vs.nodes, std::memory_order_relaxed);
      }
      total_nodes += node_sum.load();
    }
  }
#endif
  if (!ran_parallel) {
    ValueSearch vs(red.rows, C, static_cast<int>(red.base.size()), &shared);
    vs.has_deadline = has_deadline;
    vs.deadline = deadline;
    exclude_inactive(vs.eng);
    vs.dfs(0);
    total_nodes += vs.nodes;
  }

  sol.size = shared.best.load();
  sol.optimal = !shared.aborted.load();

  bool lex_ok = false;
  std::vector<int> lex_found;
  if (sol.optimal && opt.lex_witness) {
    bool lex_aborted = false;
    lex_found = lex_least_cover(red.rows, C, red.base_bits,
                                sol.size - static_cast<int>(red.base.size()), deadline,
                                has_deadline, lex_aborted, total_nodes);
    lex_ok = !lex_aborted;
  }

  sol.nodes = total_nodes;
  std::vector<int> chosen = red.base;
  const std::vector<int>& extra = lex_ok ? lex_found : shared.cover;
  chosen.insert(chosen.end(), extra.begin(), extra.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  sol.chosen = std::move(chosen);
  sol.lex_witness = lex_ok;
  return sol;
}

}  // namespace nct
