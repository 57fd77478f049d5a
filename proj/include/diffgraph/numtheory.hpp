#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace diffgraph::nt {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// The prime p when n = p^k with k >= 1.
inline std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

/// 1 counts as a prime power (p^0) for the EPPO property.
inline bool is_prime_power_or_one(std::uint64_t n) { return n == 1 || prime_power_base(n).has_value(); }

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_power_of_two(std::uint64_t n) { return n && !(n & (n - 1)); }

/// Inverse of a modulo m, requires gcd(a, m) = 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = a % m;
  if (a1 < 0) a1 += m;
  std::int64_t b = a1;
  while (b) {
    const std::int64_t q = g / b;
    std::tie(g, b) = std::make_pair(b, g - q * b);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  x %= m;
  if (x < 0) x += m;
  return x;
}

inline std::uint64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (num <= 0) return 0;
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

}  // namespace diffgraph::nt
