#include "cyclohecke/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/numtheory.hpp"

namespace cyclo::gf {
namespace {

// Dense polynomials over GF(p), low to high, used only while the field
// itself is being set up.
using RawPoly = std::vector<std::uint32_t>;

void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small: Fermat.
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

RawPoly raw_mod(RawPoly a, const RawPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = c * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f,
                   std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return raw_mod(std::move(c), f, p);
}

RawPoly raw_powmod(RawPoly base, std::uint64_t e, const RawPoly& f,
                   std::uint32_t p) {
  RawPoly r{1};
  base = raw_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = raw_mulmod(r, base, f, p);
    base = raw_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RawPoly r = raw_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RawPoly code_to_raw(std::uint32_t code, std::uint32_t p, unsigned k) {
  RawPoly r(k);
  for (unsigned i = 0; i < k; ++i) {
    r[i] = code % p;
    code /= p;
  }
  trim(r);
  return r;
}

std::uint32_t raw_to_code(const RawPoly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  RawPoly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  // Ben-Or: f is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= k/2.
  RawPoly h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = raw_powmod(h, p, f, p);
    RawPoly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    if (d.empty()) return false;  // x^{p^i} = x mod f, f has a small factor
    if (raw_gcd(d, f, p).size() > 1) return false;
  }
  return true;
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, unsigned k) {
  if (!nt::is_prime(p)) {
    throw ConfigError("field characteristic " + std::to_string(p) +
                      " is not prime");
  }
  if (k == 0) throw ConfigError("field extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw ConfigError("GF(" + std::to_string(p) + "^" + std::to_string(k) +
                        ") exceeds the supported field order");
    }
  }
  std::vector<std::uint32_t> modulus;
  if (k == 1) {
    modulus = {0, 1};
  } else {
    // Scan monic polynomials in increasing code order of (c_0..c_{k-1}),
    // i.e. lexicographically from c_{k-1} down to c_0.
    const auto tail = static_cast<std::uint32_t>(q);
    for (std::uint32_t code = 0; code < tail; ++code) {
      RawPoly cand(k + 1, 0);
      std::uint32_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[k] = 1;
      if (is_irreducible_mod_p(cand, p)) {
        modulus = std::move(cand);
        break;
      }
    }
    if (modulus.empty()) throw InternalError("no irreducible modulus found");
  }
  return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
}

Field::Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  order_ = static_cast<std::uint32_t>(q);
  const std::uint32_t group = order_ - 1;
  group_factors_ = nt::factorize(group);

  // Find the smallest primitive element by code.
  std::uint32_t gen = 0;
  for (std::uint32_t code = 1; code < order_; ++code) {
    const RawPoly a = code_to_raw(code, p_, k_);
    bool primitive = true;
    for (const auto& [prime, mult] : group_factors_) {
      (void)mult;
      if (raw_powmod(a, group / prime, modulus_, p_) == RawPoly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = code;
      break;
    }
  }
  if (gen == 0) throw InternalError("no primitive element found");

  exp_.assign(2 * static_cast<std::size_t>(group), 0);
  log_.assign(order_, 0);
  const RawPoly g = code_to_raw(gen, p_, k_);
  RawPoly cur{1};
  for (std::uint32_t j = 0; j < group; ++j) {
    const std::uint32_t code = raw_to_code(cur, p_);
    exp_[j] = code;
    exp_[j + group] = code;
    log_[code] = j;
    cur = raw_mulmod(cur, g, modulus_, p_);
  }

  neg_.resize(order_);
  for (std::uint32_t code = 0; code < order_; ++code) {
    std::uint32_t c = code, out = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      const std::uint32_t digit = c % p_;
      c /= p_;
      out += ((p_ - digit) % p_) * place;
      place *= p_;
    }
    neg_[code] = out;
  }

  if (k_ > 1 && order_ <= 256) {
    add_.resize(static_cast<std::size_t>(order_) * order_);
    for (std::uint32_t a = 0; a < order_; ++a) {
      for (std::uint32_t b = 0; b < order_; ++b) {
        std::uint32_t x = a, y = b, out = 0, place = 1;
        for (unsigned i = 0; i < k_; ++i) {
          out += ((x % p_ + y % p_) % p_) * place;
          x /= p_;
          y /= p_;
          place *= p_;
        }
        add_[static_cast<std::size_t>(a) * order_ + b] = out;
      }
    }
  }
}

FieldElement Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement Field::element(std::uint32_t code) const {
  if (code >= order_) throw std::out_of_range("field element code out of range");
  return {code};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > k_) throw ConfigError("too many coefficients for field element");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw ConfigError("field coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return {code};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> out(k_);
  std::uint32_t c = a.code;
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const noexcept {
  if (k_ == 1) {
    const std::uint32_t s = a.code + b.code;
    return {s >= p_ ? s - p_ : s};
  }
  if (!add_.empty()) return {add_[static_cast<std::size_t>(a.code) * order_ + b.code]};
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return {out};
}

FieldElement Field::neg(FieldElement a) const noexcept { return {neg_[a.code]}; }

FieldElement Field::sub(FieldElement a, FieldElement b) const noexcept {
  return add(a, neg(b));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const noexcept {
  if (a.code == 0 || b.code == 0) return {0};
  if (k_ == 1) {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.code) * b.code % p_)};
  }
  return {exp_[log_[a.code] + log_[b.code]]};
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero in " + to_string(a));
  const std::uint32_t group = order_ - 1;
  return {exp_[(group - log_[a.code]) % group]};
}

FieldElement Field::div(FieldElement a, FieldElement b) const {
  return mul(a, inv(b));
}

FieldElement Field::pow(FieldElement a, std::uint64_t exp) const noexcept {
  if (exp == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t group = order_ - 1;
  const std::uint64_t e = exp % group;
  return {exp_[(static_cast<std::uint64_t>(log_[a.code]) * e) % group]};
}

FieldElement Field::pow_signed(FieldElement a, std::int64_t m) const {
  if (m >= 0) return pow(a, static_cast<std::uint64_t>(m));
  return inv(pow(a, static_cast<std::uint64_t>(-m)));
}

FieldElement Field::frobenius(FieldElement a, unsigned t) const noexcept {
  if (a.code == 0) return a;
  const std::uint64_t group = order_ - 1;
  std::uint64_t e = 1 % group;
  for (unsigned i = 0; i < t; ++i) e = e * p_ % group;
  if (group == 1) return a;
  return {exp_[(static_cast<std::uint64_t>(log_[a.code]) * e) % group]};
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("multiplicative order of zero");
  std::uint64_t ord = order_ - 1;
  for (const auto& [prime, mult] : group_factors_) {
    for (unsigned i = 0; i < mult; ++i) {
      if (pow(a, ord / prime) == one()) {
        ord /= prime;
      } else {
        break;
      }
    }
  }
  return ord;
}

std::string Field::to_string(FieldElement a) const {
  if (k_ == 1) return std::to_string(a.code);
  std::string s = "(";
  const auto c = coeffs(a);
  for (unsigned i = 0; i < k_; ++i) {
    if (i > 0) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

unsigned quantum_characteristic(const Field& field, FieldElement q) {
  if (q == field.zero()) throw ConfigError("quantum characteristic of q = 0");
  FieldElement sum = field.one();
  FieldElement term = field.one();
  for (unsigned e = 1; e <= field.order(); ++e) {
    if (sum == field.zero()) return e;
    term = field.mul(term, q);
    sum = field.add(sum, term);
  }
  throw InternalError("geometric sums of q never vanish in a finite field");
}

FieldElement element_of_order(const Field& field, unsigned e) {
  const std::uint32_t p = field.characteristic();
  if (e < 2) throw ConfigError("quantum characteristic e must be >= 2");
  if (nt::gcd(e, p) != 1) {
    throw ConfigError("gcd(e, p) = gcd(" + std::to_string(e) + ", " +
                      std::to_string(p) + ") != 1");
  }
  if ((field.order() - 1) % e != 0) {
    throw ConfigError("e = " + std::to_string(e) + " does not divide " +
                      std::to_string(field.order()) + " - 1; enlarge the "
                      "extension degree to at least " +
                      std::to_string(nt::frobenius_period(p, e)));
  }
  for (std::uint32_t code = 1; code < field.order(); ++code) {
    if (field.multiplicative_order({code}) == e) return {code};
  }
  throw InternalError("no element of the requested order");
}

}  // namespace cyclo::gf
