#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace solqsol {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// (prime, multiplicity) pairs, primes ascending.
inline std::vector<std::pair<int, int>> prime_factorization(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= n; ++p) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  return out;
}

inline int int_pow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace solqsol
