// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cyclohecke/idempotents.hpp"
#include "cyclohecke/periodicity.hpp"
#include "cyclohecke/regrep.hpp"
#include "cyclohecke/verify.hpp"

using namespace cyclo;
using hecke::AlgebraParams;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Instance {
  AlgebraParams params;
  std::shared_ptr<const regrep::RegularRep> rep;
  double build_seconds = 0;
};

Instance make(const AlgebraParams& params) {
  const auto t0 = clock_type::now();
  Instance inst{params, regrep::RegularRep::build(hecke::Algebra::create(params)), 0};
  inst.build_seconds = seconds_since(t0);
  return inst;
}

std::vector<AlgebraParams> parameter_sets() {
  std::vector<AlgebraParams> out;
  for (unsigned n : {2u, 3u}) {
    for (const std::vector<unsigned>& kappa : {std::vector<unsigned>{0}, std::vector<unsigned>{0, 1}}) {
      out.push_back(AlgebraParams::degenerate(2, n, kappa));
      out.push_back(AlgebraParams::degenerate(3, n, kappa));
      out.push_back(AlgebraParams::nondegenerate(3, 2, n, kappa));
      out.push_back(AlgebraParams::nondegenerate(2, 3, n, kappa));
    }
  }
  return out;
}

hecke::AlgebraElement random_element(const hecke::Algebra& alg, std::mt19937_64& rng) {
  std::vector<gf::FieldElement> c(alg.dimension());
  for (auto& x : c) x = alg.field().element(static_cast<std::uint32_t>(rng() % alg.field().order()));
  return alg.from_coords(c);
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
};

std::string period_line(const AlgebraParams& params, const period::PeriodReport& r) {
  std::ostringstream s;
  s << params.describe() << " r=" << r.r << ": l=" << r.l << " observed (N,d)=(" << r.n_observed
    << "," << r.d_observed << ") predicted (" << r.n_predicted << "," << r.d_predicted << ")";
  for (const auto& c : r.checks) {
    if (!c.passed) s << "; check failed: " << c.name;
  }
  return s.str();
}

Outcome relation_soundness(const std::vector<Instance>& sets) {
  Outcome o;
  for (const auto& inst : sets) {
    const auto t0 = clock_type::now();
    const auto rs = regrep::relation_check(*inst.rep);
    const double secs = inst.build_seconds + seconds_since(t0);
    for (const auto& r : rs) {
      if (!r.passed) o.fail(inst.params.describe() + ": " + r.name);
    }
    if (secs >= 30) o.fail(inst.params.describe() + ": took " + std::to_string(secs) + " s");
  }
  return o;
}

Outcome dimension_and_homomorphism(const std::vector<Instance>& sets) {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (const auto& inst : sets) {
    const auto& alg = inst.rep->algebra();
    const std::uint64_t expected = hecke::dimension(inst.params.ell(), inst.params.n);
    if (alg.basis().size() != expected) o.fail(inst.params.describe() + ": basis size");
    for (int k = 0; k < 20; ++k) {
      const auto a = random_element(alg, rng);
      const auto b = random_element(alg, rng);
      const auto lhs = inst.rep->to_matrix(a * b);
      const auto rhs = linalg::mul(alg.field(), inst.rep->to_matrix(a), inst.rep->to_matrix(b));
      if (lhs != rhs) {
        o.fail(inst.params.describe() + ": product " + std::to_string(k));
        break;
      }
    }
  }
  return o;
}

Outcome idempotent_system(const std::vector<idem::IdempotentReport>& reports,
                          const std::vector<Instance>& sets) {
  Outcome o;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& rep = reports[k];
    const std::string who = sets[k].params.describe();
    if (rep.support.empty()) o.fail(who + ": empty support");
    if (!rep.orthogonal) o.fail(who + ": not orthogonal");
    if (!rep.complete) o.fail(who + ": does not sum to 1");
    for (const auto& v : rep.sequences) {
      if (!v.idempotent) o.fail(who + ": e" + idem::to_string(v.seq) + " not idempotent");
    }
  }
  return o;
}

Outcome formula_equivalence(const std::vector<idem::IdempotentReport>& reports,
                            const std::vector<Instance>& sets, double seconds) {
  Outcome o;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::string who = sets[k].params.describe();
    for (const auto& v : reports[k].sequences) {
      const std::string seq = idem::to_string(v.seq);
      if (!v.interpolation_equal) o.fail(who + " " + seq + ": interpolation differs");
      if (!v.restricted_equal) o.fail(who + " " + seq + ": restricted interpolation differs");
      if (!v.closed_equal) o.fail(who + " " + seq + ": closed formula differs");
      if (!v.closed_stable) o.fail(who + " " + seq + ": closed formula unstable in s");
    }
  }
  if (seconds >= 60) o.fail("took " + std::to_string(seconds) + " s");
  return o;
}

Outcome periodicity(const std::vector<Instance>& sets) {
  Outcome o;
  for (const auto& inst : sets) {
    for (const auto& r : period::verify_periodicity(*inst.rep)) {
      if (!r.verdict || !r.checks_passed()) o.fail(period_line(inst.params, r));
    }
  }
  return o;
}

Outcome nondegenerate_micro_case() {
  Outcome o;
  const auto inst = make(AlgebraParams::nondegenerate(3, 2, 2, {0}));
  const auto d = period::eventual_period(*inst.rep, 2);
  if (d.period != 6 || d.pre_period != 0) o.fail("q=2 in GF(3), n=2: d2 != 6");
  return o;
}

Outcome arithmetic_lemmas(double* seconds) {
  Outcome o;
  const auto t0 = clock_type::now();
  for (const auto& s : verify::arithmetic_suites(20240601, 500)) {
    if (s.cases < 500) o.fail(s.name + ": only " + std::to_string(s.cases) + " cases");
    if (!s.passed()) o.fail(s.name + ": " + s.first_failure);
  }
  *seconds = seconds_since(t0);
  if (*seconds >= 10) o.fail("took " + std::to_string(*seconds) + " s");
  return o;
}

Outcome benchmark_gate() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"--flavor", "deg", "--p", "2", "--n", "3", "--kappa", "0,1", "bench"},
                            out, err);
  if (code != 0) {
    o.fail("bench exited " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto j = nlohmann::json::parse(out.str())["instances"][0];
  if (j["params"]["dimension"] != 48) o.fail("dimension is not 48");
  if (j["agree"] != true) o.fail("constructions disagree");
  if (j["closed_matrix_inversions"] != 0) o.fail("closed formula inverted a matrix");
  if (j["closed_within_bound"] != true) o.fail("closed formula exceeded its multiplication bound");
  o.notes.push_back("closed multiplications " + j["closed_multiplications"].dump() + " over " +
                    j["support_size"].dump() + " sequences, bound " +
                    j["closed_multiplication_bound_per_sequence"].dump() + " each; spectral " +
                    j["spectral_total_ms"].dump() + " ms, interpolation " +
                    j["interpolation_total_ms"].dump() + " ms, closed " +
                    j["closed_total_ms"].dump() + " ms");
  return o;
}

bool report(int id, const std::string& title, const Outcome& o) {
  std::printf("criterion %d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str());
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main() {
  std::vector<Instance> sets;
  for (const auto& p : parameter_sets()) sets.push_back(make(p));

  bool ok = true;
  ok &= report(1, "relation soundness", relation_soundness(sets));
  ok &= report(2, "dimension and matrix homomorphism", dimension_and_homomorphism(sets));

  const auto t0 = clock_type::now();
  std::vector<idem::IdempotentReport> reports;
  for (const auto& inst : sets) reports.push_back(idem::verify_idempotent_system(*inst.rep));
  const double idem_seconds = seconds_since(t0);
  ok &= report(3, "idempotent system", idempotent_system(reports, sets));
  ok &= report(4, "spectral, interpolation and closed constructions agree",
               formula_equivalence(reports, sets, idem_seconds));

  std::vector<Instance> degenerate, nondegenerate;
  for (const auto& inst : sets) {
    (inst.params.flavor == hecke::Flavor::kDegenerate ? degenerate : nondegenerate).push_back(inst);
  }
  degenerate.push_back(make(AlgebraParams::degenerate(2, 4, {0})));
  ok &= report(5, "degenerate periodicity", periodicity(degenerate));

  Outcome nd = periodicity(nondegenerate);
  const Outcome micro = nondegenerate_micro_case();
  if (!micro.pass) {
    nd.pass = false;
    nd.notes.insert(nd.notes.end(), micro.notes.begin(), micro.notes.end());
  }
  ok &= report(6, "non-degenerate periodicity", nd);

  double arith_seconds = 0;
  ok &= report(7, "arithmetic identity suites", arithmetic_lemmas(&arith_seconds));
  ok &= report(8, "benchmark gate", benchmark_gate());

  std::printf("%s\n", ok ? "all criteria pass" : "some criteria fail");
  return ok ? 0 : 1;
}
