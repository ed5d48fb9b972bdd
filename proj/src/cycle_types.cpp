#include "nct/cycle_types.hpp"

#include <algorithm>

namespace nct {

CycleType::CycleType(int n, std::vector<int> parts) : n_(n), parts_(std::move(parts)) {
  if (n_ <= 0) throw std::domain_error("CycleType: degree must be >= 1");
  if (parts_.empty()) throw std::domain_error("CycleType: at least one cycle required");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  long long sum = 0;
  for (int p : parts_) {
    if (p < 1) throw std::domain_error("CycleType: parts must be >= 1");
    sum += p;
  }
  if (sum != n_) throw std::domain_error("CycleType: parts must sum to the degree");
}

int CycleType::parts_gcd() const {
  return multiset_gcd(parts_);
}

std::string CycleType::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

int multiset_gcd(std::span<const int> xs) {
  int g = 0;
  for (int x : xs) g = std::gcd(g, x);
  return g;
}

std::vector<CycleType> enumerate_cycle_types(int n, CycleTypeFilter filter) {
  std::vector<CycleType> out;
  int max_parts = filter.max_parts.value_or(0);
  if (filter.max_parts && *filter.max_parts > n)
    throw std::domain_error("enumerate_cycle_types: max_parts must be <= n");
  for_each_partition(n, max_parts, [&](std::span<const int> parts) {
    if (filter.sign) {
      int k = static_cast<int>(parts.size());
      int sign = (n - k) % 2 == 0 ? +1 : -1;
      if (sign != *filter.sign) return;
    }
    out.emplace_back(n, std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

void SumBits::reset(int n) {
  n_ = n;
  words_.assign(static_cast<size_t>(n / 64 + 1), 0);
  words_[0] = 1;
}

void SumBits::add_part(int p) {
  // shift-or, in place from the top
  int word_shift = p >> 6;
  int bit_shift = p & 63;
  int w = static_cast<int>(words_.size());
  for (int i = w - 1; i >= word_shift; --i) {
    std::uint64_t v = words_[static_cast<size_t>(i - word_shift)] << bit_shift;
    if (bit_shift && i - word_shift - 1 >= 0)
      v |= words_[static_cast<size_t>(i - word_shift - 1)] >> (64 - bit_shift);
    words_[static_cast<size_t>(i)] |= v;
  }
}

bool SumBits::intersects(const SumBits& mask) const {
  size_t m = std::min(words_.size(), mask.words_.size());
  for (size_t i = 0; i < m; ++i)
    if (words_[i] & mask.words_[i]) return true;
  return false;
}

std::vector<int> SumBits::to_values() const {
  std::vector<int> vals;
  for (int s = 0; s <= n_; ++s)
    if (test(s)) vals.push_back(s);
  return vals;
}

SumBits invariant_set_bits(const CycleType& t) {
  SumBits bits;
  bits.reset(t.n());
  for (int p : t.parts()) bits.add_part(p);
  return bits;
}

std::vector<int> invariant_set_sizes(const CycleType& t) {
  return invariant_set_bits(t).to_values();
}

}  // namespace nct
