#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclohecke/hecke.hpp"

namespace cyclo::cli {

enum class ExitCode : int { kOk = 0, kConfig = 2, kVerification = 3 };

struct Sweep {
  std::string key;  // n, p or e
  unsigned from = 0;
  unsigned to = 0;
};

struct RunConfig {
  std::string flavor = "deg";
  std::uint32_t p = 2;
  std::optional<unsigned> e;
  unsigned n = 1;
  std::vector<unsigned> kappa{0};
  std::string command;
  std::string output = "json";
  std::uint64_t seed = 1;
  std::uint64_t size_cap = 5000;
  std::optional<Sweep> sweep;
  hecke::Fault fault = hecke::Fault::kNone;
};

// "n=1..3" or "p=2"; throws ConfigError.
Sweep parse_sweep(const std::string& text);
std::vector<unsigned> parse_kappa(const std::string& text);

// Throws ConfigError with the violated invariant.
hecke::AlgebraParams make_params(const RunConfig& config);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
