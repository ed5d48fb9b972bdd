#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace nct {

using i64 = std::int64_t;

bool is_prime(i64 n);

/// Smallest prime factor of n; requires n >= 2.
i64 smallest_prime_factor(i64 n);

/// Distinct prime factors, ascending.
std::vector<i64> prime_factors(i64 n);

/// All divisors of n, ascending (includes 1 and n).
std::vector<i64> divisors(i64 n);

i64 totient(i64 n);

/// If n = p^e for some prime p and e >= 1, returns p.
std::optional<i64> prime_power_base(i64 n);

/// A way of writing n = (q^d - 1) / (q - 1) = 1 + q + ... + q^(d-1)
/// with q a prime power and d >= 2.  These are the degrees of projective
/// spaces over F_q.
struct RepunitForm {
  i64 q = 0;
  int d = 0;
  friend bool operator==(const RepunitForm&, const RepunitForm&) = default;
};

/// All repunit forms of n.  Complete: (q^d-1)/(q-1) > q^(d-1), so only
/// finitely many (q, d) need scanning per d.
std::vector<RepunitForm> repunit_forms(i64 n);

/// Bundle of the elementary arithmetic facts about n used throughout.
struct ArithProfile {
  i64 n = 0;
  std::vector<i64> divisors;  // ascending
  i64 tau = 0;                // divisor count
  i64 phi = 0;                // Euler totient
  int omega = 0;              // distinct prime factors
  std::optional<i64> p1, p2;  // two smallest prime factors, when they exist
  std::vector<RepunitForm> repunit_forms;
  bool is_prime = false;
  bool is_prime_power = false;
};

/// Requires n >= 1.
ArithProfile arith_profile(i64 n);

}  // namespace nct
