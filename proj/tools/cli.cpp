#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/serialize.hpp"

namespace cyclo::cli {

using io::json;

namespace {

unsigned parse_unsigned(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ConfigError("bad " + what + " '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(s));
}

json envelope(const std::string& command) { return {{"v", io::kSchemaVersion}, {"command", command}}; }

struct Instance {
  std::shared_ptr<const hecke::Algebra> alg;
  std::shared_ptr<const regrep::RegularRep> rep;
};

Instance build(const RunConfig& config, const hecke::AlgebraParams& params) {
  hecke::AlgebraOptions opts;
  opts.size_cap = config.size_cap;
  opts.fault = config.fault;
  Instance inst;
  inst.alg = hecke::Algebra::create(params, opts);
  inst.rep = regrep::RegularRep::build(inst.alg);
  return inst;
}

std::vector<RunConfig> expand(const RunConfig& config) {
  if (!config.sweep) return {config};
  std::vector<RunConfig> out;
  for (unsigned v = config.sweep->from; v <= config.sweep->to; ++v) {
    RunConfig c = config;
    c.sweep.reset();
    if (config.sweep->key == "n") c.n = v;
    if (config.sweep->key == "p") c.p = v;
    if (config.sweep->key == "e") c.e = v;
    out.push_back(c);
  }
  return out;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

ExitCode cmd_dims(const RunConfig& config, std::ostream& out) {
  json result = envelope("dims");
  json rows = json::array();
  for (const auto& c : expand(config)) {
    const auto params = make_params(c);
    const std::uint64_t D = hecke::dimension(params.ell(), params.n);
    rows.push_back({{"n", params.n},
                    {"ell", params.ell()},
                    {"dimension", D},
                    {"size_cap", c.size_cap},
                    {"within_cap", D <= c.size_cap}});
  }
  result["instances"] = rows;
  print(out, result);
  return ExitCode::kOk;
}

ExitCode cmd_idempotents(const RunConfig& config, std::ostream& out) {
  json result = envelope("idempotents");
  json rows = json::array();
  bool ok = true;
  for (const auto& c : expand(config)) {
    const auto params = make_params(c);
    const Instance inst = build(c, params);
    const auto report = idem::verify_idempotent_system(*inst.rep);
    ok = ok && report.passed();
    rows.push_back({{"params", io::to_json(params)}, {"report", io::to_json(report)}});
  }
  result["instances"] = rows;
  result["pass"] = ok;
  print(out, result);
  return ok ? ExitCode::kOk : ExitCode::kVerification;
}

ExitCode cmd_periods(const RunConfig& config, std::ostream& out) {
  json rows = json::array();
  std::string csv = io::period_csv_header();
  bool ok = true;
  for (const auto& c : expand(config)) {
    const auto params = make_params(c);
    const Instance inst = build(c, params);
    const auto reports = period::verify_periodicity(*inst.rep);
    for (const auto& r : reports) ok = ok && r.verdict && r.checks_passed();
    csv += io::period_csv_rows(params, reports);
    rows.push_back({{"params", io::to_json(params)}, {"periods", io::to_json(reports)}});
  }
  if (config.output == "csv") {
    out << csv;
  } else {
    json result = envelope("periods");
    result["instances"] = rows;
    result["pass"] = ok;
    print(out, result);
  }
  return ok ? ExitCode::kOk : ExitCode::kVerification;
}

ExitCode cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  json result = envelope("verify");
  json rows = json::array();
  bool ok = true;
  for (const auto& c : expand(config)) {
    const auto params = make_params(c);
    const Instance inst = build(c, params);
    json row = {{"params", io::to_json(params)}};
    const auto relations = regrep::relation_check(*inst.rep);
    err << params.describe() << "\n";
    if (!regrep::all_passed(relations)) {
      // Nothing downstream is meaningful once a relation fails.
      for (const auto& r : relations) {
        if (!r.passed) err << "  relation FAILED: " << r.name << "\n";
      }
      row["relations"] = io::to_json(relations);
      row["pass"] = false;
      rows.push_back(row);
      ok = false;
      continue;
    }
    const auto report = verify::verify_instance(*inst.rep, c.seed);
    err << "  relations: " << report.relations.size() << " pass\n";
    err << "  idempotents: support " << report.idempotents.support.size() << ", "
        << (report.idempotents.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& s : report.suites) {
      err << "  suite " << s.name << ": " << s.cases << " cases, "
          << (s.passed() ? "pass" : "FAIL at " + s.first_failure) << "\n";
    }
    for (const auto& r : report.periods) {
      err << "  r=" << r.r << " l=" << r.l << " N=" << r.n_observed << " d=" << r.d_observed
          << " predicted N=" << r.n_predicted << " d=" << r.d_predicted << " "
          << (r.verdict && r.checks_passed() ? "pass" : "FAIL") << "\n";
    }
    row["report"] = io::to_json(report);
    rows.push_back(row);
    ok = ok && report.passed();
  }
  result["instances"] = rows;
  result["pass"] = ok;
  print(out, result);
  err << (ok ? "verify: pass" : "verify: FAIL") << "\n";
  return ok ? ExitCode::kOk : ExitCode::kVerification;
}

ExitCode cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  json result = envelope("bench");
  json rows = json::array();
  for (const auto& c : expand(config)) {
    const auto params = make_params(c);
    const auto t0 = clock::now();
    const Instance inst = build(c, params);
    const auto t1 = clock::now();
    const auto& rep = *inst.rep;
    const auto support = idem::residue_support(rep);
    const std::uint64_t D = rep.dimension();

    std::vector<unsigned> l;
    for (unsigned r = 1; r <= rep.n(); ++r) l.push_back(period::nilpotency(rep, r).l);

    // Agreement gate before any timing is reported.
    for (const auto& seq : support) {
      const auto spectral = idem::e_spectral(rep, seq);
      if (idem::e_interpolation(*inst.alg, seq, D) != spectral ||
          idem::e_closed(*inst.alg, seq, l) != spectral) {
        err << "bench: constructions disagree at " << idem::to_string(seq) << "\n";
        return ExitCode::kVerification;
      }
    }

    json per = json::array();
    double total_spectral = 0, total_interp = 0, total_closed = 0;
    idem::ClosedCost total_cost;
    for (const auto& seq : support) {
      const auto a = clock::now();
      (void)idem::e_spectral(rep, seq);
      const auto b = clock::now();
      (void)idem::e_interpolation(*inst.alg, seq, D);
      const auto c2 = clock::now();
      idem::ClosedCost cost;
      (void)idem::e_closed(*inst.alg, seq, l, &cost);
      const auto d = clock::now();
      total_spectral += ms(b - a);
      total_interp += ms(c2 - b);
      total_closed += ms(d - c2);
      total_cost.element_multiplications += cost.element_multiplications;
      total_cost.scalar_inversions += cost.scalar_inversions;
      per.push_back({{"i", seq},
                     {"spectral_ms", ms(b - a)},
                     {"interpolation_ms", ms(c2 - b)},
                     {"closed_ms", ms(d - c2)},
                     {"closed_multiplications", cost.element_multiplications},
                     {"closed_matrix_inversions", cost.matrix_inversions}});
    }
    const std::uint64_t budget = idem::closed_multiplication_bound(params, l);
    bool within = true;
    for (const auto& entry : per) within = within && entry["closed_multiplications"] <= budget;
    rows.push_back({{"params", io::to_json(params)},
                    {"agree", true},
                    {"support_size", support.size()},
                    {"regular_rep_build_ms", ms(t1 - t0)},
                    {"spectral_total_ms", total_spectral},
                    {"interpolation_total_ms", total_interp},
                    {"closed_total_ms", total_closed},
                    {"closed_matrix_inversions", total_cost.matrix_inversions},
                    {"closed_scalar_inversions", total_cost.scalar_inversions},
                    {"closed_multiplications", total_cost.element_multiplications},
                    {"closed_multiplication_bound_per_sequence", budget},
                    {"closed_within_bound", within},
                    {"per_sequence", per}});
  }
  result["instances"] = rows;
  print(out, result);
  return ExitCode::kOk;
}

}  // namespace

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ConfigError("sweep must look like key=a..b");
  Sweep s;
  s.key = text.substr(0, eq);
  if (s.key != "n" && s.key != "p" && s.key != "e") {
    throw ConfigError("sweep key must be one of n, p, e");
  }
  const std::string range = text.substr(eq + 1);
  const auto dots = range.find("..");
  if (dots == std::string::npos) {
    s.from = s.to = parse_unsigned(range, "sweep bound");
  } else {
    s.from = parse_unsigned(range.substr(0, dots), "sweep bound");
    s.to = parse_unsigned(range.substr(dots + 2), "sweep bound");
  }
  if (s.from > s.to) throw ConfigError("empty sweep range");
  return s;
}

std::vector<unsigned> parse_kappa(const std::string& text) {
  std::vector<unsigned> kappa;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    kappa.push_back(parse_unsigned(item, "kappa entry"));
  }
  if (kappa.empty()) throw ConfigError("kappa must be non-empty");
  return kappa;
}

hecke::AlgebraParams make_params(const RunConfig& config) {
  if (config.flavor == "deg") {
    if (config.e && *config.e != config.p) {
      throw ConfigError("degenerate flavor forces e = p; got e = " + std::to_string(*config.e));
    }
    return hecke::AlgebraParams::degenerate(config.p, config.n, config.kappa);
  }
  if (config.flavor == "nondeg") {
    if (!config.e) throw ConfigError("non-degenerate flavor needs --e");
    return hecke::AlgebraParams::nondegenerate(config.p, *config.e, config.n, config.kappa);
  }
  throw ConfigError("flavor must be deg or nondeg");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Idempotents and Jucys-Murphy periods of cyclotomic Hecke algebras over finite fields",
               "cyclohecke"};
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  std::string kappa_text = "0";
  std::string sweep_text;
  std::string fault_text = "none";
  unsigned e_value = 0;
  app.add_option("--flavor", config.flavor, "deg or nondeg")->check(CLI::IsMember({"deg", "nondeg"}));
  app.add_option("--p", config.p, "characteristic");
  auto* e_opt = app.add_option("--e", e_value, "quantum characteristic (nondeg)");
  app.add_option("--n", config.n, "number of strands");
  app.add_option("--kappa", kappa_text, "comma-separated residues");
  app.add_option("--out", config.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", config.seed, "seed for sampled property checks");
  app.add_option("--size-cap", config.size_cap, "largest dimension accepted");
  app.add_option("--sweep", sweep_text, "key=a..b over n, p or e");
  app.add_option("--fault", fault_text, "inject a straightening fault (testing)")
      ->check(CLI::IsMember({"none", "commutation-shift", "cyclotomic-constant"}));

  for (const char* name : {"idempotents", "periods", "verify", "bench", "dims"}) {
    app.add_subcommand(name, "")->callback([&config, name] { config.command = name; });
  }
  app.get_subcommand("idempotents")->description("construct e(i) three ways and cross-check");
  app.get_subcommand("periods")->description("nilpotency, periods and pre-periods of X_r");
  app.get_subcommand("verify")->description("relations, idempotents, periods and invariants");
  app.get_subcommand("bench")->description("time the three idempotent constructions");
  app.get_subcommand("dims")->description("dimension ell^n n! and the size-cap verdict");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kConfig);
  }

  try {
    if (e_opt->count() > 0) config.e = e_value;
    config.kappa = parse_kappa(kappa_text);
    if (!sweep_text.empty()) config.sweep = parse_sweep(sweep_text);
    config.fault = hecke::fault_from_string(fault_text);
    for (const auto& c : expand(config)) (void)make_params(c);

    ExitCode code = ExitCode::kOk;
    if (config.command == "dims") code = cmd_dims(config, out);
    if (config.command == "idempotents") code = cmd_idempotents(config, out);
    if (config.command == "periods") code = cmd_periods(config, out);
    if (config.command == "verify") code = cmd_verify(config, out, err);
    if (config.command == "bench") code = cmd_bench(config, out, err);
    return static_cast<int>(code);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kConfig);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kVerification);
  } catch (const std::domain_error& e) {
    err << "arithmetic failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kVerification);
  }
}

}  // namespace cyclo::cli
