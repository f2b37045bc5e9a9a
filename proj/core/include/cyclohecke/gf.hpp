#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cyclo::gf {

// An element of GF(p^k), stored as the integer code sum_i c_i p^i of its
// coefficient vector (c_0, ..., c_{k-1}) in the polynomial basis 1, t, ..,
// t^{k-1}. Elements carry no field pointer; all arithmetic goes through the
// owning Field.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(const FieldElement&,
                                    const FieldElement&) = default;
};

// GF(p^k) with the lexicographically smallest monic irreducible modulus.
// Immutable after construction and safe to share across threads.
class Field {
 public:
  // Largest supported field order; keeps the log/antilog tables small.
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // Throws ConfigError when p is not prime, k == 0 or p^k > kMaxOrder.
  static std::shared_ptr<const Field> create(std::uint32_t p, unsigned k = 1);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return order_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  // Coefficients m_0, ..., m_k of the modulus, m_k = 1. For k = 1 this is
  // the trivial modulus t (i.e. {0, 1}).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  // Image of an integer under Z -> GF(p) -> GF(p^k).
  FieldElement from_int(std::int64_t v) const noexcept;
  // Element from its enumeration code in [0, p^k); throws on out of range.
  FieldElement element(std::uint32_t code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept;
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement mul(FieldElement a, FieldElement b) const noexcept;
  // Throws std::domain_error on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t exp) const noexcept;
  // q^m for a signed exponent; a must be nonzero when m < 0.
  FieldElement pow_signed(FieldElement a, std::int64_t m) const;
  // a^(p^t).
  FieldElement frobenius(FieldElement a, unsigned t) const noexcept;

  // Order of a in GF(p^k)^x, by factoring p^k - 1. Throws on zero.
  std::uint64_t multiplicative_order(FieldElement a) const;

  std::string to_string(FieldElement a) const;

 private:
  Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::pair<std::uint64_t, unsigned>> group_factors_;
  std::vector<std::uint32_t> exp_;  // generator powers, length 2 (order - 1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_;  // full table when order is small
};

// Smallest e >= 1 with 1 + q + ... + q^{e-1} = 0. Throws ConfigError on 0.
unsigned quantum_characteristic(const Field& field, FieldElement q);

// Smallest element (by code) with quantum characteristic e. Requires e >= 2,
// gcd(e, p) = 1 and e | p^k - 1.
FieldElement element_of_order(const Field& field, unsigned e);

// Monic irreducibility of a degree >= 1 polynomial over GF(p), coefficients
// low to high.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace cyclo::gf
