#include "rq/arith.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace rq {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && (r > UINT32_MAX || r * r > n)) --r;
  while (r + 1 <= UINT32_MAX && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  const auto r = isqrt(static_cast<std::uint64_t>(n));
  return r * r == static_cast<std::uint64_t>(n);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<uint128_t>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, n);
    base = mulmod(base, base, n);
    exp >>= 1;
  }
  return result;
}

namespace {

constexpr std::array<std::uint64_t, 15> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19,
                                                     23, 29, 31, 37, 41, 43, 47};

constexpr std::array<std::uint64_t, 7> kWitnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 53 * 53) return true;
  const int s = std::countr_zero(n - 1);
  const std::uint64_t d = (n - 1) >> s;
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

int jacobi(std::int64_t a_signed, std::uint64_t n) {
  if (n == 0 || (n & 1) == 0) throw std::invalid_argument("jacobi symbol needs odd positive n");
  std::uint64_t a;
  int result = 1;
  if (a_signed < 0) {
    // (-1/n) = (-1)^((n-1)/2)
    if (n % 4 == 3) result = -result;
    a = static_cast<std::uint64_t>(-(a_signed + 1)) + 1;
  } else {
    a = static_cast<std::uint64_t>(a_signed);
  }
  a %= n;
  while (a != 0) {
    const int twos = std::countr_zero(a);
    a >>= twos;
    if ((twos & 1) && (n % 8 == 3 || n % 8 == 5)) result = -result;
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    std::uint64_t t = n % a;
    n = a;
    a = t;
  }
  return n == 1 ? result : 0;
}

int legendre(std::int64_t d, std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre symbol needs an odd prime");
  return jacobi(d, p);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace rq
