#include "nct/symmetric_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace nct {

std::string to_string(Ambient a) {
  return a == Ambient::ResiduesModN ? "residues" : "integers";
}

SymmetricSubset::SymmetricSubset(int n, Ambient ambient, std::vector<int> elements)
    : n_(n), ambient_(ambient), elems_(std::move(elements)) {
  if (n_ < 1) throw std::domain_error("SymmetricSubset: n must be >= 1");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  const int lo = ambient_ == Ambient::ResiduesModN ? 0 : 1;
  for (int x : elems_) {
    if (x < lo || x > n_ - 1)
      throw std::domain_error("SymmetricSubset: element out of range");
    int mirror = ambient_ == Ambient::ResiduesModN ? (n_ - x) % n_ : n_ - x;
    if (!std::binary_search(elems_.begin(), elems_.end(), mirror))
      throw std::domain_error("SymmetricSubset: not closed under negation");
  }
}

bool SymmetricSubset::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string SymmetricSubset::characteristic_string() const {
  const int lo = ambient_ == Ambient::ResiduesModN ? 0 : 1;
  std::string s(static_cast<size_t>(n_ - lo), '0');
  for (int x : elems_) s[static_cast<size_t>(x - lo)] = '1';
  return s;
}

std::vector<int> sumset(std::span<const int> A, std::span<const int> B, int n) {
  if (n < 1) throw std::domain_error("sumset: n must be >= 1");
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int a : A)
    for (int b : B) hit[static_cast<size_t>((a + b) % n)] = 1;
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (hit[static_cast<size_t>(x)]) out.push_back(x);
  return out;
}

std::vector<int> popular_sums(std::span<const int> A, std::span<const int> B, int n, int K) {
  if (n < 1) throw std::domain_error("popular_sums: n must be >= 1");
  if (K < 1) throw std::domain_error("popular_sums: K must be >= 1");
  std::vector<i64> reps(static_cast<size_t>(n), 0);
  for (int a : A)
    for (int b : B) reps[static_cast<size_t>((a + b) % n)]++;
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (reps[static_cast<size_t>(x)] >= K) out.push_back(x);
  return out;
}

i64 count_additive_triples(std::span<const int> X, int n) {
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (int x : X) in[static_cast<size_t>(x % n)] = 1;
  i64 count = 0;
  for (int x : X)
    for (int y : X)
      if (in[static_cast<size_t>((x + y) % n)]) ++count;
  return count;
}

std::vector<i64> cube_set(i64 x, i64 y, i64 z) {
  std::vector<i64> v{x, y, z, x + y, x + z, y + z, x + y + z};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace nct
