#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclohecke/gf.hpp"

namespace cyclo::gf {

// Univariate polynomial over a Field, coefficients low to high with a
// nonzero leading coefficient (empty = zero polynomial). Arithmetic takes
// the field explicitly.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<FieldElement> coeffs);

  static Polynomial constant(FieldElement c);
  static Polynomial monomial(FieldElement c, std::size_t degree);
  // x - root
  static Polynomial linear(const Field& field, FieldElement root);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  FieldElement coeff(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : FieldElement{};
  }
  FieldElement leading() const noexcept {
    return coeffs_.empty() ? FieldElement{} : coeffs_.back();
  }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<FieldElement> coeffs_;
};

namespace poly {

Polynomial add(const Field& F, const Polynomial& a, const Polynomial& b);
Polynomial sub(const Field& F, const Polynomial& a, const Polynomial& b);
Polynomial neg(const Field& F, const Polynomial& a);
Polynomial scale(const Field& F, FieldElement c, const Polynomial& a);
Polynomial mul(const Field& F, const Polynomial& a, const Polynomial& b);
Polynomial pow(const Field& F, const Polynomial& a, std::uint64_t exp);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
// Throws std::domain_error when b is zero.
DivMod divmod(const Field& F, const Polynomial& a, const Polynomial& b);
Polynomial mod(const Field& F, const Polynomial& a, const Polynomial& b);

Polynomial monic(const Field& F, const Polynomial& a);

struct Xgcd {
  Polynomial g;  // monic
  Polynomial u;
  Polynomial v;
};
// u a + v b = g with g the monic gcd. Throws ConfigError when both are zero.
Xgcd xgcd(const Field& F, const Polynomial& a, const Polynomial& b);
Polynomial gcd(const Field& F, const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Field& F, const Polynomial& a, const Polynomial& b);

FieldElement eval(const Field& F, const Polynomial& a, FieldElement x);

// Largest m with (x - root)^m | a; a must be nonzero.
unsigned root_multiplicity(const Field& F, const Polynomial& a, FieldElement root);

std::string to_string(const Field& F, const Polynomial& a);

}  // namespace poly
}  // namespace cyclo::gf
