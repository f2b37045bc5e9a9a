#include "cyclohecke/periodicity.hpp"

#include <algorithm>
#include <unordered_map>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/numtheory.hpp"

namespace cyclo::period {

using gf::FieldElement;

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kDegenerateZeroResidue: return "degenerate-with-zero-residue";
    case CaseTag::kDegenerateNoZeroResidue: return "degenerate-no-zero-residue";
    case CaseTag::kNonDegenerateFirstStrand: return "non-degenerate-first-strand";
    case CaseTag::kNonDegenerateGeneral: return "non-degenerate-general";
  }
  return "non-degenerate-general";
}

Nilpotency nilpotency(const RegularRep& rep, unsigned r) {
  const auto& F = rep.field();
  const Matrix y = idem::y_matrix(rep, r);
  Matrix power = y;
  for (unsigned s = 1; s <= rep.dimension() + 1; ++s) {
    if (power.is_zero()) return {s, nt::ceil_log(F.characteristic(), s)};
    power = linalg::mul(F, power, y);
  }
  throw InternalError("y_" + std::to_string(r) + " is not nilpotent (" +
                      rep.algebra().params().describe() + ")");
}

std::uint64_t default_bound(const RegularRep& rep) {
  const auto& params = rep.algebra().params();
  const std::uint64_t p = params.p();
  const std::uint64_t D = rep.dimension();
  return params.e * nt::checked_pow(p, nt::ceil_log(p, D)) * (p - 1) + D + 1;
}

EventualPeriod eventual_period(const gf::Field& F, const Matrix& m, std::uint64_t bound) {
  std::unordered_multimap<std::uint64_t, std::uint64_t> seen;
  std::vector<Matrix> powers;
  Matrix cur = Matrix::identity(F, m.rows());
  for (std::uint64_t k = 0; k <= bound; ++k) {
    const std::uint64_t h = linalg::hash(cur);
    auto [lo, hi] = seen.equal_range(h);
    std::uint64_t first = k;
    for (auto it = lo; it != hi; ++it) {
      if (powers[it->second] == cur) first = std::min(first, it->second);
    }
    if (first < k) return {first, k - first};
    seen.emplace(h, k);
    powers.push_back(cur);
    cur = linalg::mul(F, cur, m);
  }
  throw InternalError("power sequence did not repeat within exponent " + std::to_string(bound));
}

EventualPeriod eventual_period(const RegularRep& rep, unsigned r, std::uint64_t bound) {
  return eventual_period(rep.field(), rep.X(r), bound == 0 ? default_bound(rep) : bound);
}

namespace {

bool has_residue(const RegularRep& rep, unsigned r, unsigned i) {
  const auto& spec = rep.spectrum(r);
  return std::find(spec.begin(), spec.end(), i) != spec.end();
}

}  // namespace

Prediction predicted_period(const RegularRep& rep, unsigned r) {
  const auto& F = rep.field();
  const auto& params = rep.algebra().params();
  const std::uint64_t p = params.p();
  const unsigned l = nilpotency(rep, r).l;
  Prediction pred;
  if (params.flavor == hecke::Flavor::kDegenerate) {
    pred.period = nt::checked_pow(p, l) * (p - 1);
    if (has_residue(rep, r, 0)) {
      pred.tag = CaseTag::kDegenerateZeroResidue;
      Matrix cur = rep.weight_projector(r, 0);
      std::uint64_t k = 0;
      while (!cur.is_zero()) {
        if (++k > rep.dimension()) {
          throw InternalError("x_r is not nilpotent on its zero weight space");
        }
        cur = linalg::mul(F, rep.X(r), cur);
      }
      pred.pre_period = k;
    } else {
      pred.tag = CaseTag::kDegenerateNoZeroResidue;
      pred.pre_period = 0;
    }
  } else {
    if (r == 1 && params.kappa_all_zero()) {
      pred.tag = CaseTag::kNonDegenerateFirstStrand;
      pred.period = nt::checked_pow(p, l);
    } else {
      pred.tag = CaseTag::kNonDegenerateGeneral;
      pred.period = params.e * nt::checked_pow(p, l);
    }
    pred.pre_period = 0;
  }
  return pred;
}

bool PeriodReport::checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<PeriodReport> verify_periodicity(const RegularRep& rep) {
  const auto& F = rep.field();
  const auto& params = rep.algebra().params();
  const bool deg = params.flavor == hecke::Flavor::kDegenerate;
  const std::uint64_t p = params.p();
  const std::uint64_t e = params.e;
  const std::uint64_t bound = default_bound(rep);

  std::vector<PeriodReport> out;
  for (unsigned r = 1; r <= rep.n(); ++r) {
    PeriodReport rep_r;
    rep_r.r = r;
    const Nilpotency nil = nilpotency(rep, r);
    rep_r.nil_index = nil.nil_index;
    rep_r.l = nil.l;
    const EventualPeriod obs = eventual_period(rep, r, bound);
    rep_r.n_observed = obs.pre_period;
    rep_r.d_observed = obs.period;
    const Prediction pred = predicted_period(rep, r);
    rep_r.n_predicted = pred.pre_period;
    rep_r.d_predicted = pred.period;
    rep_r.tag = pred.tag;
    rep_r.verdict = obs.pre_period == pred.pre_period && obs.period == pred.period;

    const Matrix& X = rep.X(r);
    const Matrix y = idem::y_matrix(rep, r);
    auto xp = [&](std::uint64_t k) { return linalg::pow(F, X, k); };
    auto y_vanishes = [&](std::uint64_t k) { return linalg::pow(F, y, k).is_zero(); };
    auto& checks = rep_r.checks;
    const std::string sr = std::to_string(r);

    std::vector<unsigned> s_values;
    if (nil.l >= 1) s_values.push_back(nil.l - 1);
    s_values.push_back(nil.l);

    if (deg) {
      for (unsigned s : s_values) {
        const std::uint64_t ps = nt::checked_pow(p, s);
        const bool lhs = xp(ps * p) == xp(ps);
        const bool rhs = y_vanishes(ps);
        checks.push_back({"x" + sr + "^{p^{s+1}} = x" + sr + "^{p^s} iff y^{p^s} = 0, s=" +
                              std::to_string(s),
                          lhs == rhs && rhs == (s >= nil.l)});
      }
      if (!has_residue(rep, r, 0)) {
        checks.push_back({"x" + sr + "^d = 1 without residue 0", xp(pred.period).is_identity(F)});
      }
      // x^k = x^{k + p^m (p-1)} iff m >= l and k >= N, around the threshold.
      bool theorem = true;
      for (unsigned m = nil.l >= 1 ? nil.l - 1 : 0; m <= nil.l + 1; ++m) {
        const std::uint64_t shift = nt::checked_pow(p, m) * (p - 1);
        const std::uint64_t k0 = pred.pre_period >= 1 ? pred.pre_period - 1 : 0;
        for (std::uint64_t k = k0; k <= pred.pre_period + 1; ++k) {
          const bool holds = xp(k) == xp(k + shift);
          if (holds != (m >= nil.l && k >= pred.pre_period)) theorem = false;
        }
      }
      checks.push_back({"x" + sr + "^k = x" + sr + "^{k+p^m(p-1)} iff m >= l and k >= N", theorem});
      if (p > 2 && has_residue(rep, r, static_cast<unsigned>(p - 1))) {
        checks.push_back({"(p-1) divides d with residue p-1 present", obs.period % (p - 1) == 0});
      }
    } else {
      const std::uint64_t el = e * nt::checked_pow(p, nil.l);
      checks.push_back({"X" + sr + "^{e p^l} = 1", xp(el).is_identity(F)});
      if (nil.l >= 1) {
        checks.push_back({"X" + sr + "^{e p^{l-1}} != 1",
                          !xp(e * nt::checked_pow(p, nil.l - 1)).is_identity(F)});
      }
      for (unsigned s : s_values) {
        const std::uint64_t ps = nt::checked_pow(p, s);
        checks.push_back({"X" + sr + "^{e p^s} = 1 iff y^{p^s} = 0, s=" + std::to_string(s),
                          xp(e * ps).is_identity(F) == y_vanishes(ps)});
      }
      const bool only_zero = rep.spectrum(r) == std::vector<unsigned>{0};
      const bool first_branch = r == 1 && params.kappa_all_zero();
      checks.push_back({"p-power branch iff every supported i_" + sr + " = 0",
                        only_zero == first_branch});
      if (first_branch) {
        for (unsigned s : s_values) {
          const std::uint64_t ps = nt::checked_pow(p, s);
          checks.push_back({"X1^{p^s} = 1 iff y1^{p^s} = 0, s=" + std::to_string(s),
                            xp(ps).is_identity(F) == y_vanishes(ps)});
        }
      }
      const unsigned frob = nt::frobenius_period(p, e);
      bool frob_ok = true;
      for (unsigned s = 0; s <= 3; ++s) {
        for (unsigned t = 1; t <= 2; ++t) {
          if (F.frobenius(params.q, s + frob * t) != F.frobenius(params.q, s)) frob_ok = false;
        }
      }
      checks.push_back({"q^{p^k} = q^{p^s} for k = s + t * frobenius period", frob_ok});
    }

    bool stable = true;
    for (std::uint64_t k = obs.pre_period; k <= obs.pre_period + 1; ++k) {
      const Matrix base = xp(k);
      for (std::uint64_t j = 1; j <= 3 && k + j * obs.period <= bound; ++j) {
        if (xp(k + j * obs.period) != base) stable = false;
      }
    }
    checks.push_back({"x" + sr + "^k = x" + sr + "^{k+jd} beyond the pre-period", stable});
    out.push_back(std::move(rep_r));
  }
  return out;
}

}  // namespace cyclo::period
