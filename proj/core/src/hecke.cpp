#include "cyclohecke/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/numtheory.hpp"

namespace cyclo::hecke {

using gf::FieldElement;

std::string to_string(Flavor f) {
  return f == Flavor::kDegenerate ? "deg" : "nondeg";
}

std::string to_string(Fault f) {
  switch (f) {
    case Fault::kNone: return "none";
    case Fault::kCommutationShift: return "commutation-shift";
    case Fault::kCyclotomicConstant: return "cyclotomic-constant";
  }
  return "none";
}

Fault fault_from_string(const std::string& s) {
  if (s == "none") return Fault::kNone;
  if (s == "commutation-shift") return Fault::kCommutationShift;
  if (s == "cyclotomic-constant") return Fault::kCyclotomicConstant;
  throw ConfigError("unknown fault '" + s + "'");
}

// ---------------------------------------------------------------------------
// AlgebraParams

namespace {

std::vector<unsigned> canonical_kappa(std::vector<unsigned> kappa, unsigned e) {
  for (auto& k : kappa) k %= e;
  std::sort(kappa.begin(), kappa.end());
  return kappa;
}

}  // namespace

bool AlgebraParams::kappa_all_zero() const noexcept {
  return !kappa.empty() &&
         std::all_of(kappa.begin(), kappa.end(), [](unsigned k) { return k == 0; });
}

AlgebraParams AlgebraParams::degenerate(std::uint32_t p, unsigned n,
                                        std::vector<unsigned> kappa) {
  AlgebraParams params;
  params.flavor = Flavor::kDegenerate;
  params.field = gf::Field::create(p, 1);
  params.q = params.field->one();
  params.e = p;
  params.n = n;
  params.kappa = canonical_kappa(std::move(kappa), p);
  params.validate();
  return params;
}

AlgebraParams AlgebraParams::nondegenerate(std::uint32_t p, unsigned e, unsigned n,
                                           std::vector<unsigned> kappa) {
  if (!nt::is_prime(p)) throw ConfigError("p = " + std::to_string(p) + " is not prime");
  if (e < 2) throw ConfigError("non-degenerate flavor needs e >= 2");
  if (nt::gcd(e, p) != 1) {
    throw ConfigError("non-degenerate flavor needs gcd(e, p) = 1, got gcd(" +
                      std::to_string(e) + ", " + std::to_string(p) + ") = " +
                      std::to_string(nt::gcd(e, p)));
  }
  const unsigned k = nt::frobenius_period(p, e);
  auto field = gf::Field::create(p, k);
  const FieldElement q = gf::element_of_order(*field, e);
  return nondegenerate(std::move(field), q, n, std::move(kappa));
}

AlgebraParams AlgebraParams::nondegenerate(std::shared_ptr<const gf::Field> field,
                                           FieldElement q, unsigned n,
                                           std::vector<unsigned> kappa) {
  AlgebraParams params;
  params.flavor = Flavor::kNonDegenerate;
  params.field = std::move(field);
  params.q = q;
  params.e = gf::quantum_characteristic(*params.field, q);
  params.n = n;
  params.kappa = canonical_kappa(std::move(kappa), params.e);
  params.validate();
  return params;
}

void AlgebraParams::validate() const {
  if (!field) throw ConfigError("algebra parameters have no field");
  if (n < 1) throw ConfigError("n must be >= 1");
  if (n > 12) throw ConfigError("n > 12 is outside the supported range");
  if (kappa.empty()) throw ConfigError("kappa must be non-empty (ell >= 1)");
  if (q == field->zero()) throw ConfigError("q must be nonzero");
  const unsigned qe = gf::quantum_characteristic(*field, q);
  if (qe != e) throw ConfigError("e does not match the quantum characteristic of q");
  for (auto k : kappa) {
    if (k >= e) throw ConfigError("kappa entries must be residues in [0, e)");
  }
  if (!std::is_sorted(kappa.begin(), kappa.end())) throw ConfigError("kappa must be sorted");
  if (flavor == Flavor::kDegenerate) {
    if (q != field->one()) throw ConfigError("degenerate flavor requires q = 1");
    if (e != p()) throw ConfigError("degenerate flavor requires e = p");
  } else {
    if (q == field->one()) throw ConfigError("non-degenerate flavor requires q != 1");
    if (nt::gcd(e, p()) != 1) throw ConfigError("non-degenerate flavor requires gcd(e, p) = 1");
  }
}

std::string AlgebraParams::describe() const {
  std::string s = to_string(flavor) + " p=" + std::to_string(p());
  if (field->degree() > 1) s += " field=GF(" + std::to_string(p()) + "^" +
                                std::to_string(field->degree()) + ")";
  s += " q=" + field->to_string(q) + " e=" + std::to_string(e) +
       " n=" + std::to_string(n) + " kappa=(";
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(kappa[i]);
  }
  return s + ")";
}

std::uint64_t dimension(unsigned ell, unsigned n) {
  std::uint64_t d = nt::checked_pow(ell, n);
  for (unsigned i = 2; i <= n; ++i) {
    if (d > UINT64_MAX / i) throw ConfigError("dimension overflows 64 bits");
    d *= i;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Accumulator: dense scratch with a touched list, reused across steps.

class Algebra::Accumulator {
 public:
  Accumulator(const gf::Field& field, std::size_t dim)
      : field_(field), dense_(dim), mark_(dim, 0) {}

  void add(std::uint32_t index, FieldElement c) {
    if (c.code == 0) return;
    if (!mark_[index]) {
      mark_[index] = 1;
      touched_.push_back(index);
    }
    dense_[index] = field_.add(dense_[index], c);
  }

  std::vector<Term> take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<Term> out;
    out.reserve(touched_.size());
    for (auto idx : touched_) {
      if (dense_[idx].code != 0) out.push_back({idx, dense_[idx]});
      dense_[idx] = FieldElement{};
      mark_[idx] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  const gf::Field& field_;
  std::vector<FieldElement> dense_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::uint32_t> touched_;
};

// ---------------------------------------------------------------------------
// Algebra

std::shared_ptr<const Algebra> Algebra::create(AlgebraParams params, AlgebraOptions options) {
  params.validate();
  const std::uint64_t dim = hecke::dimension(params.ell(), params.n);
  if (dim > options.size_cap) {
    throw ConfigError("dimension " + std::to_string(dim) + " exceeds the size cap " +
                      std::to_string(options.size_cap));
  }
  std::shared_ptr<Algebra> alg(new Algebra(std::move(params), options));
  alg->build_tables();
  return alg;
}

Algebra::Algebra(AlgebraParams params, AlgebraOptions options)
    : params_(std::move(params)), options_(options) {
  const unsigned n = params_.n;
  const unsigned ell = params_.ell();
  perms_ = enumerate_permutations(n);
  std::uint64_t nfact = perms_.size();

  lex_to_pos_.assign(nfact, 0);
  for (std::size_t pos = 0; pos < perms_.size(); ++pos) {
    // lexicographic rank via the Lehmer code
    const auto& w = perms_[pos].one_line();
    std::uint64_t rank = 0;
    for (unsigned i = 0; i < n; ++i) {
      unsigned smaller = 0;
      for (unsigned j = i + 1; j < n; ++j) {
        if (w[j] < w[i]) ++smaller;
      }
      rank = rank * (n - i) + smaller;
    }
    lex_to_pos_[rank] = static_cast<std::uint32_t>(pos);
  }
  reduced_words_.reserve(perms_.size());
  for (const auto& w : perms_) reduced_words_.push_back(w.reduced_word());

  const std::uint64_t nexp = nt::checked_pow(ell, n);
  basis_.reserve(nexp * nfact);
  std::vector<unsigned> a(n, 0);
  for (std::uint64_t code = 0; code < nexp; ++code) {
    std::uint64_t c = code;
    for (unsigned t = n; t-- > 0;) {
      a[t] = static_cast<unsigned>(c % ell);
      c /= ell;
    }
    for (const auto& w : perms_) basis_.push_back({a, w});
  }

  if (options_.fuel != 0) {
    fuel_per_call_ = options_.fuel;
  } else {
    const std::uint64_t d = basis_.size();
    const std::uint64_t word = static_cast<std::uint64_t>(n) * (ell - 1) + n * (n - 1) / 2 + 1;
    fuel_per_call_ = 16 * d * d * d * word + 4096;
  }
}

std::size_t Algebra::perm_position(const Permutation& w) const {
  const auto& v = w.one_line();
  const unsigned n = params_.n;
  std::uint64_t rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j) {
      if (v[j] < v[i]) ++smaller;
    }
    rank = rank * (n - i) + smaller;
  }
  return lex_to_pos_[rank];
}

std::size_t Algebra::exponent_index(std::span<const unsigned> a) const {
  std::size_t idx = 0;
  for (auto x : a) idx = idx * params_.ell() + x;
  return idx;
}

std::size_t Algebra::index_of(const NormalWord& word) const {
  if (word.exponents.size() != params_.n || word.w.size() != params_.n) {
    throw ConfigError("normal word has the wrong number of strands");
  }
  for (auto x : word.exponents) {
    if (x >= params_.ell()) throw ConfigError("normal word exponent out of range");
  }
  return exponent_index(word.exponents) * perms_.size() + perm_position(word.w);
}

void Algebra::charge(std::uint64_t& fuel, std::uint64_t amount) const {
  if (amount > fuel) {
    throw InternalError("straightening fuel exhausted (" + params_.describe() + ")");
  }
  fuel -= amount;
}

FieldElement Algebra::residue_value(unsigned i) const {
  const auto& F = field();
  i %= params_.e;
  if (params_.flavor == Flavor::kDegenerate) return F.from_int(i);
  return F.pow(params_.q, i);
}

gf::Polynomial Algebra::cyclotomic_polynomial() const {
  const auto& F = field();
  gf::Polynomial c = gf::Polynomial::constant(F.one());
  for (auto k : params_.kappa) {
    c = gf::poly::mul(F, c, gf::Polynomial::linear(F, residue_value(k)));
  }
  return c;
}

void Algebra::build_tables() {
  const auto& F = field();
  const unsigned n = params_.n;
  const unsigned ell = params_.ell();
  const std::size_t D = basis_.size();
  const bool degenerate = params_.flavor == Flavor::kDegenerate;
  const FieldElement q = params_.q;
  const FieldElement qm1 = F.sub(q, F.one());
  const std::size_t nfact = perms_.size();

  // Coefficient of the correction terms in T_r f = (s_r f) T_r + ...
  FieldElement corr = degenerate ? F.one() : qm1;
  if (options_.fault == Fault::kCommutationShift) corr = F.add(corr, F.one());
  const FieldElement neg_corr = F.neg(corr);

  Accumulator acc(F, D);
  std::uint64_t fuel = fuel_per_call_;

  auto index = [&](const std::vector<unsigned>& a, std::size_t perm_pos) {
    return static_cast<std::uint32_t>(exponent_index(a) * nfact + perm_pos);
  };

  t_tables_.assign(n > 0 ? n - 1 : 0, {});
  for (unsigned r = 1; r < n; ++r) {
    ActionTable& tab = t_tables_[r - 1];
    tab.offset.reserve(D + 1);
    tab.offset.push_back(0);
    for (std::size_t j = 0; j < D; ++j) {
      const NormalWord& word = basis_[j];
      const std::size_t wpos = j % nfact;
      const Permutation& w = perms_[wpos];
      std::vector<unsigned> a = word.exponents;
      const unsigned A = a[r - 1];
      const unsigned B = a[r];

      // (s_r X^a) T_r T_w
      std::vector<unsigned> swapped = a;
      std::swap(swapped[r - 1], swapped[r]);
      const std::size_t sw = perm_position(w.left_simple(r));
      if (degenerate || w.left_ascent(r)) {
        acc.add(index(swapped, sw), F.one());
      } else {
        acc.add(index(swapped, sw), q);
        acc.add(index(swapped, wpos), qm1);
      }

      // Divided-difference correction, times T_w.
      std::vector<unsigned> c = a;
      if (degenerate) {
        if (A < B) {
          for (unsigned m = 0; m < B - A; ++m) {
            c[r - 1] = B - 1 - m;
            c[r] = A + m;
            acc.add(index(c, wpos), corr);
          }
        } else if (A > B) {
          for (unsigned m = 0; m < A - B; ++m) {
            c[r - 1] = A - 1 - m;
            c[r] = B + m;
            acc.add(index(c, wpos), neg_corr);
          }
        }
      } else {
        if (A < B) {
          for (unsigned m = 1; m <= B - A; ++m) {
            c[r - 1] = B - m;
            c[r] = A + m;
            acc.add(index(c, wpos), corr);
          }
        } else if (A > B) {
          for (unsigned m = 1; m <= A - B; ++m) {
            c[r - 1] = A - m;
            c[r] = B + m;
            acc.add(index(c, wpos), neg_corr);
          }
        }
      }
      charge(fuel, 2 + (A > B ? A - B : B - A));
      auto col = acc.take();
      tab.terms.insert(tab.terms.end(), col.begin(), col.end());
      tab.offset.push_back(static_cast<std::uint32_t>(tab.terms.size()));
    }
  }

  // X_1^ell reduces by the cyclotomic polynomial.
  gf::Polynomial cyc = cyclotomic_polynomial();
  std::vector<FieldElement> low(ell);
  for (unsigned m = 0; m < ell; ++m) low[m] = F.neg(cyc.coeff(m));
  if (options_.fault == Fault::kCyclotomicConstant) low[0] = F.add(low[0], F.one());

  x_tables_.assign(n, {});
  for (unsigned t = 1; t <= n; ++t) {
    ActionTable& tab = x_tables_[t - 1];
    tab.offset.reserve(D + 1);
    tab.offset.push_back(0);
    for (std::size_t j = 0; j < D; ++j) {
      const NormalWord& word = basis_[j];
      const std::size_t wpos = j % nfact;
      std::vector<Term> col;
      if (word.exponents[t - 1] + 1 < ell) {
        std::vector<unsigned> a = word.exponents;
        ++a[t - 1];
        col.push_back({index(a, wpos), F.one()});
      } else if (t == 1) {
        std::vector<unsigned> a = word.exponents;
        for (unsigned m = 0; m < ell; ++m) {
          a[0] = m;
          acc.add(index(a, wpos), low[m]);
        }
        col = acc.take();
      } else {
        // Descent: X_t = q^{-1} T_{t-1} X_{t-1} T_{t-1}, resp.
        // x_t = s_{t-1} x_{t-1} s_{t-1} + s_{t-1}.
        const Term unit{static_cast<std::uint32_t>(j), F.one()};
        const std::vector<Term> v1 = apply_table(t_tables_[t - 2], {&unit, 1}, acc, fuel);
        const std::vector<Term> v2 = apply_table(x_tables_[t - 2], v1, acc, fuel);
        const std::vector<Term> v3 = apply_table(t_tables_[t - 2], v2, acc, fuel);
        if (degenerate) {
          for (const auto& tm : v3) acc.add(tm.index, tm.coeff);
          for (const auto& tm : v1) acc.add(tm.index, tm.coeff);
        } else {
          const FieldElement qinv = F.inv(q);
          for (const auto& tm : v3) acc.add(tm.index, F.mul(qinv, tm.coeff));
        }
        col = acc.take();
      }
      tab.terms.insert(tab.terms.end(), col.begin(), col.end());
      tab.offset.push_back(static_cast<std::uint32_t>(tab.terms.size()));
    }
  }
}

std::vector<Term> Algebra::apply_table(const ActionTable& table, std::span<const Term> v,
                                       Accumulator& acc, std::uint64_t& fuel) const {
  const auto& F = field();
  for (const auto& tm : v) {
    const auto col = table.column(tm.index);
    charge(fuel, col.size() + 1);
    for (const auto& c : col) acc.add(c.index, F.mul(tm.coeff, c.coeff));
  }
  return acc.take();
}

std::vector<Term> Algebra::apply_word(std::size_t index, std::span<const Term> v,
                                      Accumulator& acc, std::uint64_t& fuel) const {
  const NormalWord& word = basis_[index];
  const auto& rw = reduced_words_[index % perms_.size()];
  std::vector<Term> cur(v.begin(), v.end());
  for (std::size_t k = rw.size(); k-- > 0;) {
    cur = apply_table(t_tables_[rw[k] - 1], cur, acc, fuel);
  }
  for (unsigned t = params_.n; t-- > 0;) {
    for (unsigned m = 0; m < word.exponents[t]; ++m) {
      cur = apply_table(x_tables_[t], cur, acc, fuel);
    }
  }
  return cur;
}

std::vector<Term> Algebra::apply_T(unsigned r, std::span<const Term> v) const {
  if (r < 1 || r >= params_.n) throw std::out_of_range("T_r index out of range");
  Accumulator acc(field(), dimension());
  std::uint64_t fuel = fuel_per_call_;
  return apply_table(t_tables_[r - 1], v, acc, fuel);
}

std::vector<Term> Algebra::apply_X(unsigned t, std::span<const Term> v) const {
  if (t < 1 || t > params_.n) throw std::out_of_range("X_t index out of range");
  Accumulator acc(field(), dimension());
  std::uint64_t fuel = fuel_per_call_;
  return apply_table(x_tables_[t - 1], v, acc, fuel);
}

AlgebraElement Algebra::from_terms(std::vector<Term> terms) const {
  Accumulator acc(field(), dimension());
  for (const auto& t : terms) {
    if (t.index >= dimension()) throw std::out_of_range("term index out of range");
    acc.add(t.index, t.coeff);
  }
  return AlgebraElement(shared_from_this(), acc.take());
}

AlgebraElement Algebra::from_coords(std::span<const FieldElement> coords) const {
  if (coords.size() != dimension()) throw std::invalid_argument("coordinate vector has wrong size");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].code != 0) terms.push_back({static_cast<std::uint32_t>(i), coords[i]});
  }
  return AlgebraElement(shared_from_this(), std::move(terms));
}

AlgebraElement Algebra::zero() const { return AlgebraElement(shared_from_this(), {}); }

AlgebraElement Algebra::one() const { return scalar(field().one()); }

AlgebraElement Algebra::scalar(FieldElement c) const {
  if (c.code == 0) return zero();
  return AlgebraElement(shared_from_this(), {{0, c}});
}

AlgebraElement Algebra::basis_element(std::size_t index) const {
  if (index >= dimension()) throw std::out_of_range("basis index out of range");
  return AlgebraElement(shared_from_this(), {{static_cast<std::uint32_t>(index), field().one()}});
}

AlgebraElement Algebra::gen_T(unsigned r) const {
  if (r < 1 || r >= params_.n) throw std::out_of_range("gen_T: r must satisfy 1 <= r < n");
  return AlgebraElement(shared_from_this(), apply_T(r, one().terms()));
}

AlgebraElement Algebra::gen_X(unsigned r) const {
  if (r < 1 || r > params_.n) throw std::out_of_range("gen_X: r must satisfy 1 <= r <= n");
  return AlgebraElement(shared_from_this(), apply_X(r, one().terms()));
}

AlgebraElement Algebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
  Accumulator acc(field(), dimension());
  for (const auto& t : a.terms()) acc.add(t.index, t.coeff);
  for (const auto& t : b.terms()) acc.add(t.index, t.coeff);
  return AlgebraElement(shared_from_this(), acc.take());
}

AlgebraElement Algebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  const auto& F = field();
  Accumulator acc(F, dimension());
  for (const auto& t : a.terms()) acc.add(t.index, t.coeff);
  for (const auto& t : b.terms()) acc.add(t.index, F.neg(t.coeff));
  return AlgebraElement(shared_from_this(), acc.take());
}

AlgebraElement Algebra::scale(FieldElement c, const AlgebraElement& a) const {
  if (c.code == 0) return zero();
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.coeff = field().mul(c, t.coeff);
  return AlgebraElement(shared_from_this(), std::move(terms));
}

AlgebraElement Algebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  if (a.alg_.get() != this || b.alg_.get() != this) {
    throw std::invalid_argument("mul: operands belong to a different algebra");
  }
  const auto& F = field();
  Accumulator scratch(F, dimension());
  Accumulator result(F, dimension());
  std::uint64_t fuel = fuel_per_call_;
  for (const auto& t : a.terms()) {
    const auto v = apply_word(t.index, b.terms(), scratch, fuel);
    for (const auto& x : v) result.add(x.index, F.mul(t.coeff, x.coeff));
  }
  return AlgebraElement(shared_from_this(), result.take());
}

AlgebraElement Algebra::pow(const AlgebraElement& a, std::uint64_t m) const {
  AlgebraElement result = one();
  AlgebraElement base = a;
  while (m > 0) {
    if (m & 1) result = mul(result, base);
    m >>= 1;
    if (m > 0) base = mul(base, base);
  }
  return result;
}

AlgebraElement Algebra::jm_power(unsigned r, std::uint64_t m) const {
  return pow(gen_X(r), m);
}

// ---------------------------------------------------------------------------
// AlgebraElement

FieldElement AlgebraElement::coefficient(std::size_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const Term& t, std::size_t i) { return t.index < i; });
  if (it != terms_.end() && it->index == index) return it->coeff;
  return {};
}

std::string AlgebraElement::to_string() const {
  if (!alg_ || terms_.empty()) return "0";
  const auto& F = alg_->field();
  const bool deg = alg_->params().flavor == Flavor::kDegenerate;
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    const NormalWord& w = alg_->basis()[t.index];
    std::string mono;
    for (std::size_t i = 0; i < w.exponents.size(); ++i) {
      if (w.exponents[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += (deg ? "x" : "X") + std::to_string(i + 1);
      if (w.exponents[i] > 1) mono += "^" + std::to_string(w.exponents[i]);
    }
    if (w.w.length() > 0) {
      if (!mono.empty()) mono += " ";
      mono += (deg ? "s" : "T") + w.w.to_string();
    }
    if (mono.empty()) {
      s += F.to_string(t.coeff);
    } else if (t.coeff == F.one()) {
      s += mono;
    } else {
      s += F.to_string(t.coeff) + "*" + mono;
    }
  }
  return s;
}

}  // namespace cyclo::hecke
