#include "cyclohecke/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclohecke/errors.hpp"

namespace cyclo::gf {

Polynomial::Polynomial(std::vector<FieldElement> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldElement c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(FieldElement c, std::size_t degree) {
  std::vector<FieldElement> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Field& field, FieldElement root) {
  return Polynomial({field.neg(root), field.one()});
}

namespace poly {

Polynomial add(const Field& F, const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(c));
}

Polynomial neg(const Field& F, const Polynomial& a) {
  std::vector<FieldElement> c = a.coeffs();
  for (auto& x : c) x = F.neg(x);
  return Polynomial(std::move(c));
}

Polynomial sub(const Field& F, const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(c));
}

Polynomial scale(const Field& F, FieldElement s, const Polynomial& a) {
  std::vector<FieldElement> c = a.coeffs();
  for (auto& x : c) x = F.mul(s, x);
  return Polynomial(std::move(c));
}

Polynomial mul(const Field& F, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<FieldElement> c(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].code == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      c[i + j] = F.add(c[i + j], F.mul(ac[i], bc[j]));
    }
  }
  return Polynomial(std::move(c));
}

Polynomial pow(const Field& F, const Polynomial& a, std::uint64_t exp) {
  Polynomial result = Polynomial::constant(F.one());
  Polynomial base = a;
  while (exp > 0) {
    if (exp & 1) result = mul(F, result, base);
    exp >>= 1;
    if (exp > 0) base = mul(F, base, base);
  }
  return result;
}

DivMod divmod(const Field& F, const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<FieldElement> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<FieldElement> quo(rem.size() - db);
  const FieldElement lead_inv = F.inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    const FieldElement c = F.mul(rem[i], lead_inv);
    if (c.code == 0) continue;
    const std::size_t shift = i - db;
    quo[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[shift + j] = F.sub(rem[shift + j], F.mul(c, bc[j]));
    }
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial mod(const Field& F, const Polynomial& a, const Polynomial& b) {
  return divmod(F, a, b).remainder;
}

Polynomial monic(const Field& F, const Polynomial& a) {
  if (a.is_zero()) return a;
  return scale(F, F.inv(a.leading()), a);
}

Xgcd xgcd(const Field& F, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw ConfigError("xgcd(0, 0) is undefined");
  // Invariants: r0 = s0 a + t0 b, r1 = s1 a + t1 b.
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(F.one()), s1;
  Polynomial t0, t1 = Polynomial::constant(F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(F, r0, r1);
    Polynomial s2 = sub(F, s0, mul(F, q, s1));
    Polynomial t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const FieldElement li = F.inv(r0.leading());
  return {scale(F, li, r0), scale(F, li, s0), scale(F, li, t0)};
}

Polynomial gcd(const Field& F, const Polynomial& a, const Polynomial& b) {
  return xgcd(F, a, b).g;
}

Polynomial lcm(const Field& F, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial g = gcd(F, a, b);
  return monic(F, mul(F, divmod(F, a, g).quotient, b));
}

FieldElement eval(const Field& F, const Polynomial& a, FieldElement x) {
  FieldElement acc = F.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = F.add(F.mul(acc, x), a.coeffs()[i]);
  }
  return acc;
}

unsigned root_multiplicity(const Field& F, const Polynomial& a, FieldElement root) {
  if (a.is_zero()) throw std::domain_error("root multiplicity in the zero polynomial");
  const Polynomial lin = Polynomial::linear(F, root);
  unsigned m = 0;
  Polynomial cur = a;
  while (true) {
    auto [q, r] = divmod(F, cur, lin);
    if (!r.is_zero()) return m;
    ++m;
    cur = std::move(q);
  }
}

std::string to_string(const Field& F, const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    const FieldElement c = a.coeffs()[i];
    if (c.code == 0) continue;
    if (!s.empty()) s += " + ";
    const bool unit = c == F.one();
    if (!unit || i == 0) s += F.to_string(c);
    if (i > 0) {
      if (!unit) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace poly
}  // namespace cyclo::gf
