#pragma once

#include <cstddef>
#include <vector>

namespace loopforge {

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct prime divisors in increasing order.
inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Largest power of p dividing n.
inline std::size_t p_part_of(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_power_of(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Prime p if n = p^k with k >= 1, else 0.
inline std::size_t prime_of_power(std::size_t n) {
  if (n < 2) return 0;
  auto ps = prime_divisors(n);
  return ps.size() == 1 ? ps[0] : 0;
}

}  // namespace loopforge
