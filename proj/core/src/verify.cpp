#include "cyclohecke/verify.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/numtheory.hpp"

namespace cyclo::verify {

using gf::Field;
using gf::FieldElement;
using gf::Polynomial;
using hecke::Algebra;
using hecke::AlgebraElement;
using linalg::Matrix;

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform enough for sampling; modulo keeps the stream portable.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

 private:
  std::mt19937_64 gen_;
};

void record(SuiteResult& s, bool ok, const std::string& what) {
  ++s.cases;
  if (ok) return;
  if (s.failures == 0) s.first_failure = what;
  ++s.failures;
}

AlgebraElement random_element(const Algebra& alg, Rng& rng) {
  const auto& F = alg.field();
  std::vector<hecke::Term> terms;
  const std::uint64_t count = 1 + rng.below(4);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::uint32_t>(rng.below(alg.dimension()));
    const FieldElement c = F.element(static_cast<std::uint32_t>(1 + rng.below(F.order() - 1)));
    terms.push_back({idx, c});
  }
  return alg.from_terms(std::move(terms));
}

Polynomial pow_mod(const Field& F, Polynomial base, std::uint64_t m, const Polynomial& modulus) {
  Polynomial result = gf::poly::mod(F, Polynomial::constant(F.one()), modulus);
  base = gf::poly::mod(F, base, modulus);
  while (m > 0) {
    if (m & 1) result = gf::poly::mod(F, gf::poly::mul(F, result, base), modulus);
    m >>= 1;
    if (m > 0) base = gf::poly::mod(F, gf::poly::mul(F, base, base), modulus);
  }
  return result;
}

}  // namespace

bool all_passed(const std::vector<SuiteResult>& suites) {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

std::vector<SuiteResult> algebra_suites(const RegularRep& rep, std::uint64_t seed) {
  const Algebra& alg = rep.algebra();
  const auto& F = alg.field();
  const unsigned n = alg.n();
  const std::size_t D = alg.dimension();
  const unsigned e = alg.params().e;
  Rng rng(seed);
  std::vector<SuiteResult> out;

  {
    SuiteResult s{"closure"};
    for (int k = 0; k < 200; ++k) {
      const auto a = alg.basis_element(rng.below(D));
      const auto b = alg.basis_element(rng.below(D));
      const auto c = a * b;
      bool ok = true;
      for (const auto& t : c.terms()) ok = ok && t.index < D && t.coeff.code != 0;
      record(s, ok, a.to_string() + " * " + b.to_string());
    }
    out.push_back(std::move(s));
  }
  {
    SuiteResult s{"associativity"};
    for (int k = 0; k < 200; ++k) {
      const auto a = alg.basis_element(rng.below(D));
      const auto b = alg.basis_element(rng.below(D));
      const auto c = alg.basis_element(rng.below(D));
      record(s, (a * b) * c == a * (b * c),
             "(" + a.to_string() + ")(" + b.to_string() + ")(" + c.to_string() + ")");
    }
    out.push_back(std::move(s));
  }
  {
    SuiteResult hom{"homomorphism"};
    SuiteResult faith{"faithfulness"};
    for (int k = 0; k < 20; ++k) {
      const auto a = random_element(alg, rng);
      const auto b = random_element(alg, rng);
      const Matrix ma = rep.to_matrix(a);
      const Matrix mb = rep.to_matrix(b);
      record(hom, rep.to_matrix(a * b) == linalg::mul(F, ma, mb), a.to_string());
      record(faith, ma.is_zero() == a.is_zero() && rep.from_action_on_one(ma) == a, a.to_string());
    }
    out.push_back(std::move(hom));
    out.push_back(std::move(faith));
  }
  {
    SuiteResult s{"jucys-murphy commutativity"};
    for (unsigned r = 1; r <= n; ++r) {
      for (unsigned t = r + 1; t <= n; ++t) {
        const auto xr = alg.gen_X(r);
        const auto xt = alg.gen_X(t);
        record(s, xr * xt == xt * xr, "r=" + std::to_string(r) + " t=" + std::to_string(t));
      }
    }
    if (s.cases == 0) record(s, true, "");
    out.push_back(std::move(s));
  }
  {
    SuiteResult s{"cyclotomic relation (elements)"};
    AlgebraElement prod = alg.one();
    for (unsigned k : alg.params().kappa) prod = prod * (alg.gen_X(1) - alg.scalar(alg.residue_value(k)));
    record(s, prod.is_zero(), prod.to_string());
    out.push_back(std::move(s));
  }
  {
    // Every eigenvalue is some q_i: min poly divides prod_i (x - q_i)^D.
    SuiteResult s{"eigenvalue support"};
    Polynomial all = Polynomial::constant(F.one());
    for (unsigned i = 0; i < e; ++i) all = gf::poly::mul(F, all, Polynomial::linear(F, alg.residue_value(i)));
    const Polynomial bound = gf::poly::pow(F, all, D);
    for (unsigned r = 1; r <= n; ++r) {
      record(s, gf::poly::mod(F, bound, rep.min_poly_X(r)).is_zero(), "r=" + std::to_string(r));
    }
    out.push_back(std::move(s));
  }
  {
    SuiteResult s{"weight projectors"};
    Matrix sum(D, D);
    for (unsigned r = 1; r <= n; ++r) {
      Matrix per(D, D);
      for (unsigned i = 0; i < e; ++i) {
        const Matrix& P = rep.weight_projector(r, i);
        per = linalg::add(F, per, P);
        const std::string tag = "r=" + std::to_string(r) + " i=" + std::to_string(i);
        record(s, linalg::mul(F, P, P) == P, "idempotent " + tag);
        for (unsigned t = 1; t <= n; ++t) {
          record(s, linalg::mul(F, P, rep.X(t)) == linalg::mul(F, rep.X(t), P),
                 "commutes with X" + std::to_string(t) + " " + tag);
          if (t == r) continue;
          for (unsigned j : rep.spectrum(t)) {
            const Matrix& Q = rep.weight_projector(t, j);
            record(s, linalg::mul(F, P, Q) == linalg::mul(F, Q, P), "pairwise " + tag);
          }
        }
      }
      record(s, per.is_identity(F), "per-strand sum r=" + std::to_string(r));
    }
    out.push_back(std::move(s));
  }
  {
    // L_r(i)^D equals the sum of e(j) with j_r = i_r, and each factor
    // L_{i_r, j}^D fixes e(j) when j_r = i_r and kills it when j_r = j.
    SuiteResult partial{"interpolation partial sums"};
    SuiteResult factors{"interpolation factors"};
    const auto support = idem::residue_support(rep);
    std::vector<Matrix> spectral;
    for (const auto& seq : support) spectral.push_back(idem::spectral_matrix(rep, seq));
    for (unsigned r = 1; r <= n; ++r) {
      const Polynomial& mu = rep.min_poly_X(r);
      for (unsigned ir = 0; ir < e; ++ir) {
        const FieldElement qi = alg.residue_value(ir);
        const Polynomial base =
            pow_mod(F, gf::poly::sub(F, Polynomial::constant(qi), Polynomial::monomial(F.one(), 1)), D, mu);
        Polynomial L = Polynomial::constant(F.one());
        for (unsigned j = 0; j < e; ++j) {
          if (j == ir) continue;
          const FieldElement c = F.pow(F.inv(F.sub(qi, alg.residue_value(j))), D);
          const Polynomial Lij =
              gf::poly::sub(F, Polynomial::constant(F.one()), gf::poly::scale(F, c, base));
          L = gf::poly::mod(F, gf::poly::mul(F, L, Lij), mu);
          const Matrix Mij = linalg::eval(F, pow_mod(F, Lij, D, mu), rep.X(r));
          for (std::size_t k = 0; k < support.size(); ++k) {
            const unsigned jr = support[k][r - 1];
            if (jr != ir && jr != j) continue;
            const Matrix lhs = linalg::mul(F, Mij, spectral[k]);
            const bool ok = jr == ir ? lhs == spectral[k] : lhs.is_zero();
            record(factors, ok, "r=" + std::to_string(r) + " i=" + std::to_string(ir) +
                                    " j=" + std::to_string(j) + " " + idem::to_string(support[k]));
          }
        }
        const Matrix lhs = linalg::eval(F, pow_mod(F, L, D, mu), rep.X(r));
        record(partial, lhs == rep.weight_projector(r, ir),
               "r=" + std::to_string(r) + " i=" + std::to_string(ir));
      }
    }
    if (factors.cases == 0) record(factors, true, "");
    out.push_back(std::move(partial));
    out.push_back(std::move(factors));
  }
  {
    // f(x_r) e(i) h != 0 whenever f(i_r) != 0 and e(i) h != 0.
    SuiteResult s{"nonvanishing off the residue"};
    const auto support = idem::residue_support(rep);
    for (int k = 0; k < 20 && !support.empty(); ++k) {
      const auto& seq = support[rng.below(support.size())];
      const unsigned r = 1 + static_cast<unsigned>(rng.below(n));
      const Matrix E = idem::spectral_matrix(rep, seq);
      const Matrix H = rep.to_matrix(random_element(alg, rng));
      const Matrix EH = linalg::mul(F, E, H);
      if (EH.is_zero()) continue;
      std::vector<FieldElement> coeffs(1 + rng.below(4));
      for (auto& c : coeffs) c = F.element(static_cast<std::uint32_t>(rng.below(F.order())));
      Polynomial f(coeffs);
      const FieldElement at = gf::poly::eval(F, f, alg.residue_value(seq[r - 1]));
      if (at.code == 0) f = gf::poly::add(F, f, Polynomial::constant(F.one()));
      record(s, !linalg::mul(F, linalg::eval(F, f, rep.X(r)), EH).is_zero(),
             idem::to_string(seq) + " r=" + std::to_string(r));
    }
    if (s.cases == 0) record(s, true, "");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SuiteResult> arithmetic_suites(std::uint64_t seed, std::uint64_t instances) {
  Rng rng(seed);
  std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const Field>> fields;
  auto field = [&](std::uint32_t p, unsigned k) {
    auto& f = fields[{p, k}];
    if (!f) f = Field::create(p, k);
    return f;
  };
  const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  std::vector<SuiteResult> out;

  {
    SuiteResult s{"frobenius additivity"};
    const std::vector<std::pair<std::uint32_t, unsigned>> shapes{{2, 1}, {2, 3}, {3, 1}, {3, 2},
                                                                 {5, 1}, {5, 2}, {7, 1}, {2, 4}};
    for (std::uint64_t t = 0; t < instances; ++t) {
      const auto [p, k] = shapes[rng.below(shapes.size())];
      const auto F = field(p, k);
      const FieldElement a = F->element(static_cast<std::uint32_t>(rng.below(F->order())));
      const FieldElement b = F->element(static_cast<std::uint32_t>(rng.below(F->order())));
      const unsigned kp = static_cast<unsigned>(rng.below(6));
      record(s, F->frobenius(F->sub(a, b), kp) == F->sub(F->frobenius(a, kp), F->frobenius(b, kp)),
             F->to_string(a) + "," + F->to_string(b));
    }
    out.push_back(std::move(s));
  }

  // Random (p, e) with gcd 1 realised in the smallest field containing an
  // element of order e.
  auto random_pe = [&]() {
    while (true) {
      const std::uint32_t p = primes[rng.below(primes.size())];
      const unsigned e = 2 + static_cast<unsigned>(rng.below(11));
      if (nt::gcd(p, e) != 1) continue;
      const unsigned k = nt::frobenius_period(p, e);
      if (nt::checked_pow(p, k) > 5000) continue;
      return std::make_pair(p, e);
    }
  };

  {
    SuiteResult s{"geometric sums"};
    for (std::uint64_t t = 0; t < instances; ++t) {
      const auto [p, e] = random_pe();
      const auto F = field(p, nt::frobenius_period(p, e));
      const FieldElement q = gf::element_of_order(*F, e);
      const std::uint64_t k = rng.below(4 * e);
      FieldElement sum = F->zero();
      for (unsigned j = 0; j < e; ++j) sum = F->add(sum, F->pow(q, j * k));
      const FieldElement expect = k % e == 0 ? F->from_int(e) : F->zero();
      record(s, sum == expect && (k % e != 0 || expect.code != 0),
             "p=" + std::to_string(p) + " e=" + std::to_string(e) + " k=" + std::to_string(k));
    }
    out.push_back(std::move(s));
  }
  {
    SuiteResult s{"interpolation polynomial identity"};
    for (std::uint64_t t = 0; t < instances; ++t) {
      const auto [p, e] = random_pe();
      const auto F = field(p, nt::frobenius_period(p, e));
      const FieldElement q = gf::element_of_order(*F, e);
      unsigned sexp = 0;
      do {
        sexp = 1 + static_cast<unsigned>(rng.below(3 * e));
      } while (nt::gcd(sexp, e) != 1);
      const FieldElement r = F->pow(q, sexp);
      const unsigned i = static_cast<unsigned>(rng.below(e));
      const FieldElement ri = F->pow(r, i);
      const Polynomial x = Polynomial::monomial(F->one(), 1);
      Polynomial f = Polynomial::constant(F->one());
      for (unsigned j = 0; j < e; ++j) {
        if (j == i) continue;
        const FieldElement c = F->inv(F->sub(ri, F->pow(r, j)));
        const Polynomial frac = gf::poly::scale(*F, c, gf::poly::sub(*F, Polynomial::constant(ri), x));
        f = gf::poly::mul(*F, f, gf::poly::sub(*F, Polynomial::constant(F->one()), frac));
      }
      std::vector<FieldElement> g(e);
      const FieldElement einv = F->inv(F->from_int(e));
      const FieldElement rinv = F->inv(ri);
      for (unsigned m = 0; m < e; ++m) g[m] = F->mul(einv, F->pow(rinv, m));
      record(s, f == Polynomial(g),
             "p=" + std::to_string(p) + " e=" + std::to_string(e) + " s=" + std::to_string(sexp) +
                 " i=" + std::to_string(i));
    }
    out.push_back(std::move(s));
  }
  {
    SuiteResult s{"characteristic constraints"};
    for (std::uint64_t t = 0; t < instances; ++t) {
      const std::uint32_t p = primes[rng.below(primes.size())];
      const unsigned e = 2 + static_cast<unsigned>(rng.below(40));
      const std::string tag = "p=" + std::to_string(p) + " e=" + std::to_string(e);
      if (nt::gcd(p, e) != 1) {
        bool rejected = false;
        try {
          (void)hecke::AlgebraParams::nondegenerate(p, e, 1, {0});
        } catch (const ConfigError&) {
          rejected = true;
        }
        record(s, rejected, tag + " accepted");
        continue;
      }
      const unsigned l = nt::frobenius_period(p, e);
      bool ok = true;
      std::uint64_t pk = 1;
      for (unsigned j = 1; j <= l; ++j) {
        pk = pk * p % e;
        ok = ok && (pk == 1) == (j == l);
      }
      if (l <= 12 && nt::checked_pow(p, l) <= 5000) {
        const auto F = field(p, l);
        ok = ok && gf::quantum_characteristic(*F, gf::element_of_order(*F, e)) == e;
      }
      record(s, ok, tag);
    }
    out.push_back(std::move(s));
  }
  {
    SuiteResult s{"frobenius-power factorisation"};
    for (std::uint64_t t = 0; t < instances; ++t) {
      const std::uint32_t p = primes[rng.below(4)];
      const auto F = field(p, 1);
      const unsigned tt = static_cast<unsigned>(rng.below(p <= 3 ? 3 : 2));
      const std::uint64_t k = rng.below(8);
      const FieldElement i = F->element(static_cast<std::uint32_t>(1 + rng.below(p - 1)));
      const std::uint64_t pt = nt::checked_pow(p, tt);
      const Polynomial lhs = gf::poly::sub(*F, Polynomial::monomial(F->one(), k),
                                           Polynomial::monomial(F->one(), k + pt * (p - 1)));
      const FieldElement iinv = F->inv(i);
      Polynomial geo;
      for (unsigned m = 0; m + 2 <= p; ++m) {
        geo = gf::poly::add(*F, geo, Polynomial::monomial(F->pow(iinv, m), m * pt));
      }
      const Polynomial f = gf::poly::mul(*F, Polynomial::monomial(iinv, k), geo);
      const Polynomial lin = gf::poly::pow(
          *F, gf::poly::sub(*F, Polynomial::constant(i), Polynomial::monomial(F->one(), 1)), pt);
      const auto dm = gf::poly::divmod(*F, lhs, lin);
      record(s, gf::poly::mul(*F, f, lin) == lhs && dm.remainder.is_zero() && dm.quotient == f,
             "p=" + std::to_string(p) + " t=" + std::to_string(tt) + " k=" + std::to_string(k));
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool InstanceReport::relations_passed() const { return regrep::all_passed(relations); }

bool InstanceReport::periods_passed() const {
  return std::all_of(periods.begin(), periods.end(), [](const period::PeriodReport& r) {
    return r.verdict && r.checks_passed();
  });
}

bool InstanceReport::passed() const {
  return relations_passed() && idempotents.passed() && periods_passed() && all_passed(suites);
}

InstanceReport verify_instance(const RegularRep& rep, std::uint64_t seed) {
  InstanceReport report;
  report.relations = regrep::relation_check(rep);
  report.suites = algebra_suites(rep, seed);
  report.idempotents = idem::verify_idempotent_system(rep);
  report.periods = period::verify_periodicity(rep);
  return report;
}

}  // namespace cyclo::verify
