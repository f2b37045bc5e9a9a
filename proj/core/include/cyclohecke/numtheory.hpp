#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclo::nt {

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, as (prime, exponent) pairs in
// increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// base^exp, throwing ConfigError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// Smallest l >= 1 with p^l = 1 (mod e). Requires e >= 2 and gcd(e, p) = 1.
unsigned frobenius_period(std::uint64_t p, std::uint64_t e);

// Smallest l >= 0 with p^l >= m.
unsigned ceil_log(std::uint64_t p, std::uint64_t m);

}  // namespace cyclo::nt
