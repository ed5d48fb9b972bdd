#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace nct {

/// Dynamic bitset sized at construction; the few operations the solver needs.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int nbits) : nbits_(nbits), w_(static_cast<size_t>((nbits + 63) / 64), 0) {}

  int size() const { return nbits_; }
  void set(int i) { w_[static_cast<size_t>(i) >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  int count() const;
  bool is_subset_of(const Bits& o) const;
  bool intersects(const Bits& o) const;
  int find_first() const;  // -1 if none

  Bits& operator|=(const Bits& o);
  Bits& operator&=(const Bits& o);
  Bits& and_not(const Bits& o);  // *this &= ~o
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t x = w_[wi];
      while (x) {
        int b = std::countr_zero(x);
        fn(static_cast<int>(wi * 64) + b);
        x &= x - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words_mut() { return w_; }
  std::uint64_t hash() const;

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Unweighted minimum set cover.  rows[i] is the set of candidates covering
/// universe element i; a cover is a candidate subset intersecting every row.
struct SetCoverProblem {
  int candidate_count = 0;
  std::vector<Bits> rows;
};

struct SetCoverOptions {
  double time_budget_seconds = 0;  // 0 = unlimited
  int threads = 1;
  /// Optional known cover (candidate indices); used as the initial incumbent.
  std::vector<int> incumbent;
  /// Run the second pass that canonicalizes the witness to the
  /// lexicographically least optimal cover.  Skipping it leaves the value
  /// exact but the witness unspecified among optimal covers.
  bool lex_witness = true;
};

struct SetCoverSolution {
  int size = 0;
  std::vector<int> chosen;  // ascending; the lexicographically least optimum
  bool optimal = false;     // false only when the time budget ran out
  bool lex_witness = false; // chosen is the lexicographically least optimal cover
  std::uint64_t nodes = 0;
};

class InfeasibleCover : public std::runtime_error {
 public:
  InfeasibleCover(int element, std::string what)
      : std::runtime_error(std::move(what)), element_(element) {}
  int element() const { return element_; }

 private:
  int element_;
};

/// Exact branch and bound: greedy incumbent, unit propagation, and
/// lower-bound pruning by packing rows with pairwise-disjoint candidate sets.
/// The value search runs on a reduced instance (duplicate/superset rows and
/// dominated candidates removed); a second lexicographic pass recovers the
/// least optimal cover over the full candidate list.
SetCoverSolution solve_set_cover(const SetCoverProblem& prob, const SetCoverOptions& opt = {});

}  // namespace nct
