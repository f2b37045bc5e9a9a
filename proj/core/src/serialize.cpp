#include "cyclohecke/serialize.hpp"

#include "cyclohecke/errors.hpp"

namespace cyclo::io {

using gf::FieldElement;

json to_json(const gf::Field& F, FieldElement a) {
  if (F.is_prime_field()) return a.code;
  return F.coeffs(a);
}

FieldElement field_element_from_json(const gf::Field& F, const json& j) {
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(F.characteristic())) {
      throw ConfigError("field element " + j.dump() + " out of range");
    }
    return F.from_int(v);
  }
  if (!j.is_array() || j.size() != F.degree()) {
    throw ConfigError("field element " + j.dump() + " needs " + std::to_string(F.degree()) +
                      " coefficients");
  }
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    const auto v = x.get<std::int64_t>();
    if (v < 0 || v >= static_cast<std::int64_t>(F.characteristic())) {
      throw ConfigError("coefficient " + x.dump() + " out of range");
    }
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return F.from_coeffs(c);
}

json to_json(const hecke::AlgebraParams& params) {
  const auto& F = *params.field;
  return {
      {"flavor", hecke::to_string(params.flavor)},
      {"p", F.characteristic()},
      {"k", F.degree()},
      {"modulus", F.modulus()},
      {"q", to_json(F, params.q)},
      {"e", params.e},
      {"n", params.n},
      {"kappa", params.kappa},
      {"ell", params.ell()},
      {"dimension", hecke::dimension(params.ell(), params.n)},
  };
}

json to_json(const hecke::AlgebraElement& a) {
  json out = json::array();
  if (!a.algebra_ptr()) return out;
  const auto& alg = a.algebra();
  for (const auto& t : a.terms()) {
    const auto& word = alg.basis()[t.index];
    std::vector<unsigned> w;
    for (auto v : word.w.one_line()) w.push_back(v + 1u);
    out.push_back({{"a", word.exponents}, {"w", w}, {"c", to_json(alg.field(), t.coeff)}});
  }
  return out;
}

hecke::AlgebraElement element_from_json(const hecke::Algebra& alg, const json& j) {
  if (!j.is_array()) throw ConfigError("element must be a JSON array of terms");
  std::vector<hecke::Term> terms;
  for (const auto& t : j) {
    hecke::NormalWord word;
    word.exponents = t.at("a").get<std::vector<unsigned>>();
    std::vector<std::uint8_t> w;
    for (auto v : t.at("w").get<std::vector<unsigned>>()) {
      if (v < 1) throw ConfigError("permutation entries are 1-based");
      w.push_back(static_cast<std::uint8_t>(v - 1));
    }
    word.w = hecke::Permutation(std::move(w));
    terms.push_back({static_cast<std::uint32_t>(alg.index_of(word)),
                     field_element_from_json(alg.field(), t.at("c"))});
  }
  return alg.from_terms(std::move(terms));
}

json to_json(const gf::Field& F, const linalg::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(F, m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const std::vector<regrep::RelationResult>& relations) {
  json out = json::array();
  for (const auto& r : relations) out.push_back({{"relation", r.name}, {"pass", r.passed}});
  return out;
}

json to_json(const idem::IdempotentReport& report) {
  json support = json::array();
  for (const auto& s : report.support) support.push_back(s);
  json seqs = json::array();
  for (const auto& v : report.sequences) {
    seqs.push_back({
        {"i", v.seq},
        {"supported", v.supported},
        {"idempotent", v.idempotent},
        {"interpolation_equal", v.interpolation_equal},
        {"restricted_equal", v.restricted_equal},
        {"closed_equal", v.closed_equal},
        {"closed_stable", v.closed_stable},
        {"terms", v.element.terms().size()},
    });
  }
  json nil = json::array();
  for (const auto& r : report.nilpotency) {
    nil.push_back({{"r", r.r}, {"nil_index", r.nil_index}, {"l", r.l}});
  }
  return {
      {"support", support},
      {"sequences", seqs},
      {"orthogonal", report.orthogonal},
      {"complete", report.complete},
      {"nilpotency", nil},
      {"pass", report.passed()},
  };
}

json to_json(const std::vector<period::PeriodReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"pass", c.passed}});
    out.push_back({
        {"r", r.r},
        {"nil_index", r.nil_index},
        {"l", r.l},
        {"N_observed", r.n_observed},
        {"d_observed", r.d_observed},
        {"N_predicted", r.n_predicted},
        {"d_predicted", r.d_predicted},
        {"case", period::to_string(r.tag)},
        {"verdict", r.verdict ? "pass" : "fail"},
        {"checks", checks},
    });
  }
  return out;
}

json to_json(const std::vector<verify::SuiteResult>& suites) {
  json out = json::array();
  for (const auto& s : suites) {
    json entry = {{"suite", s.name}, {"cases", s.cases}, {"failures", s.failures}};
    if (!s.passed()) entry["first_failure"] = s.first_failure;
    out.push_back(std::move(entry));
  }
  return out;
}

json to_json(const verify::InstanceReport& report) {
  return {
      {"relations", to_json(report.relations)},
      {"suites", to_json(report.suites)},
      {"idempotents", to_json(report.idempotents)},
      {"periods", to_json(report.periods)},
      {"pass", report.passed()},
  };
}

std::string period_csv_header() {
  return "flavor,p,e,n,kappa,r,nil_index,l_r,N_obs,d_obs,N_pred,d_pred,case,verdict\n";
}

std::string period_csv_rows(const hecke::AlgebraParams& params,
                            const std::vector<period::PeriodReport>& reports) {
  std::string kappa;
  for (std::size_t i = 0; i < params.kappa.size(); ++i) {
    if (i > 0) kappa += " ";
    kappa += std::to_string(params.kappa[i]);
  }
  std::string out;
  for (const auto& r : reports) {
    out += hecke::to_string(params.flavor) + "," + std::to_string(params.p()) + "," +
           std::to_string(params.e) + "," + std::to_string(params.n) + "," + kappa + "," +
           std::to_string(r.r) + "," + std::to_string(r.nil_index) + "," + std::to_string(r.l) +
           "," + std::to_string(r.n_observed) + "," + std::to_string(r.d_observed) + "," +
           std::to_string(r.n_predicted) + "," + std::to_string(r.d_predicted) + "," +
           period::to_string(r.tag) + "," + (r.verdict && r.checks_passed() ? "pass" : "fail") +
           "\n";
  }
  return out;
}

}  // namespace cyclo::io
