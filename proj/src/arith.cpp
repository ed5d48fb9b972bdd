#include "nct/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace nct {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

i64 smallest_prime_factor(i64 n) {
  if (n < 2) throw std::domain_error("smallest_prime_factor: n must be >= 2");
  if (n % 2 == 0) return 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> ps;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> ds;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

i64 totient(i64 n) {
  i64 result = n;
  for (i64 p : prime_factors(n)) result -= result / p;
  return result;
}

std::optional<i64> prime_power_base(i64 n) {
  if (n < 2) return std::nullopt;
  i64 p = smallest_prime_factor(n);
  while (n % p == 0) n /= p;
  if (n == 1) return p;
  return std::nullopt;
}

namespace {

// 1 + q + ... + q^(d-1), clamped to cap+1 on overflow past cap.
i64 repunit_value(i64 q, int d, i64 cap) {
  i64 s = 1;
  for (int i = 1; i < d; ++i) {
    if (s > cap / q) return cap + 1;
    s = s * q + 1;
    if (s > cap) return cap + 1;
  }
  return s;
}

}  // namespace

std::vector<RepunitForm> repunit_forms(i64 n) {
  std::vector<RepunitForm> forms;
  if (n < 3) return forms;
  for (int d = 2;; ++d) {
    if (repunit_value(2, d, n) > n) break;
    // strictly increasing in q, so binary search
    i64 lo = 2, hi = n;
    while (lo < hi) {
      i64 mid = lo + (hi - lo) / 2;
      if (repunit_value(mid, d, n) < n)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (repunit_value(lo, d, n) == n && prime_power_base(lo))
      forms.push_back({lo, d});
  }
  return forms;
}

ArithProfile arith_profile(i64 n) {
  if (n < 1) throw std::domain_error("arith_profile: n must be >= 1");
  ArithProfile a;
  a.n = n;
  a.divisors = divisors(n);
  a.tau = static_cast<i64>(a.divisors.size());
  a.phi = totient(n);
  auto ps = prime_factors(n);
  a.omega = static_cast<int>(ps.size());
  if (!ps.empty()) a.p1 = ps[0];
  if (ps.size() > 1) a.p2 = ps[1];
  a.repunit_forms = repunit_forms(n);
  a.is_prime = is_prime(n);
  a.is_prime_power = prime_power_base(n).has_value();
  return a;
}

}  // namespace nct
