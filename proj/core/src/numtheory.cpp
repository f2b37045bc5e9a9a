#include "cyclohecke/numtheory.hpp"

#include <limits>
#include <string>

#include "cyclohecke/errors.hpp"

namespace cyclo::nt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ConfigError("integer overflow computing " + std::to_string(base) +
                        "^" + std::to_string(exp));
    }
    r *= base;
  }
  return r;
}

unsigned frobenius_period(std::uint64_t p, std::uint64_t e) {
  if (e < 2) throw ConfigError("frobenius_period: need e >= 2");
  if (gcd(e, p) != 1) {
    throw ConfigError("frobenius_period: gcd(e, p) = " +
                      std::to_string(gcd(e, p)) + " != 1");
  }
  // The residues p^l mod e cycle through a subgroup of (Z/e)^x, so the scan
  // terminates within e steps.
  std::uint64_t x = p % e;
  for (unsigned l = 1;; ++l) {
    if (x == 1) return l;
    x = (x * (p % e)) % e;
  }
}

unsigned ceil_log(std::uint64_t p, std::uint64_t m) {
  unsigned l = 0;
  std::uint64_t v = 1;
  while (v < m) {
    v *= p;
    ++l;
  }
  return l;
}

}  // namespace cyclo::nt
