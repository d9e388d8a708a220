#pragma once

#include <cstdint>
#include <vector>

namespace rq {

__extension__ typedef __int128 int128_t;
__extension__ typedef unsigned __int128 uint128_t;

// floor(sqrt(n)), exact for every 64-bit n.
std::uint64_t isqrt(std::uint64_t n);
bool is_perfect_square(std::int64_t n);

// Deterministic for all n < 2^64: trial division by small primes, then
// strong-probable-prime tests to the seven bases of Jim Sinclair's set.
bool is_prime(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

// Jacobi symbol (a/n) for odd n > 0, by quadratic reciprocity.
int jacobi(std::int64_t a, std::uint64_t n);

// Legendre symbol (D/p) for an odd prime p.
int legendre(std::int64_t d, std::uint64_t p);

// Every prime p <= hi, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t hi);

}  // namespace rq
