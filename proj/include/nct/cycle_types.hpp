#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

/// Cycle type of a permutation of n points: the multiset of cycle lengths,
/// stored descending.  Determines the S_n-conjugacy class.  The sign of a
/// permutation with k cycles is (-1)^(n-k).
class CycleType {
 public:
  CycleType() = default;
  CycleType(int n, std::vector<int> parts);

  static CycleType single_cycle(int n) { return CycleType(n, {n}); }
  static CycleType identity(int n) { return CycleType(n, std::vector<int>(n, 1)); }

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int cycle_count() const { return static_cast<int>(parts_.size()); }
  int sign() const { return (n_ - cycle_count()) % 2 == 0 ? +1 : -1; }
  int parts_gcd() const;
  bool is_identity() const { return parts_.empty() ? false : parts_.front() == 1; }
  bool is_n_cycle() const { return parts_.size() == 1; }

  std::string to_string() const;  // "(4,2,1)"

  friend auto operator<=>(const CycleType& a, const CycleType& b) = default;

 private:
  int n_ = 0;
  std::vector<int> parts_;
};

/// Enumerates the partitions of n in descending-lexicographic order,
/// largest part first within each partition.  max_parts = 0 means
/// unrestricted.  Throws std::domain_error for n = 0.
template <typename Fn>
void for_each_partition(int n, int max_parts, Fn&& fn) {
  if (n <= 0) throw std::domain_error("for_each_partition: n must be >= 1");
  int limit = (max_parts <= 0 || max_parts > n) ? n : max_parts;
  std::vector<int> parts(static_cast<size_t>(limit));
  auto rec = [&](auto&& self, int remaining, int max_val, int depth) -> void {
    if (remaining == 0) {
      fn(std::span<const int>(parts.data(), static_cast<size_t>(depth)));
      return;
    }
    if (depth == limit) return;
    int slots = limit - depth;
    int lo = (remaining + slots - 1) / slots;
    for (int v = std::min(max_val, remaining); v >= lo; --v) {
      parts[static_cast<size_t>(depth)] = v;
      self(self, remaining - v, v, depth + 1);
    }
  };
  rec(rec, n, n, 0);
}

struct CycleTypeFilter {
  std::optional<int> max_parts;
  std::optional<int> sign;  // +1 or -1
};

/// All cycle types of degree n matching the filter, in descending-lex order.
std::vector<CycleType> enumerate_cycle_types(int n, CycleTypeFilter filter = {});

/// Subset sums of a multiset of parts, as a bitmask over [0, n].
/// Bit s is set iff some sub-multiset sums to s.
class SumBits {
 public:
  void reset(int n);
  void add_part(int p);  // bits |= bits << p
  bool test(int s) const {
    return (words_[static_cast<size_t>(s) >> 6] >> (s & 63)) & 1u;
  }
  bool intersects(const SumBits& mask) const;
  int bound() const { return n_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  std::vector<int> to_values() const;  // ascending

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Bitmask of the invariant-set cardinalities of t: exactly the subset sums
/// of its parts.  Always contains 0 and n and is symmetric under s -> n - s.
SumBits invariant_set_bits(const CycleType& t);

/// The invariant-set cardinalities as a sorted list.
std::vector<int> invariant_set_sizes(const CycleType& t);

int multiset_gcd(std::span<const int> xs);

}  // namespace nct
