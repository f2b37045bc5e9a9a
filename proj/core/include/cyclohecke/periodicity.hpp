#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclohecke/idempotents.hpp"

namespace cyclo::period {

using linalg::Matrix;
using regrep::RegularRep;

struct Nilpotency {
  unsigned nil_index = 0;  // smallest s >= 1 with y_r^s = 0
  unsigned l = 0;          // smallest l with p^l >= nil_index
};

// Throws InternalError if y_r is not nilpotent.
Nilpotency nilpotency(const RegularRep& rep, unsigned r);

struct EventualPeriod {
  std::uint64_t pre_period = 0;  // N
  std::uint64_t period = 0;      // d
};

// e p^{ceil(log_p D)} (p - 1) + D + 1
std::uint64_t default_bound(const RegularRep& rep);

// First repeat M^a = M^b among M^0, M^1, ...: N = a, d = b - a. Hashes are
// only a filter; a repeat is accepted after entrywise comparison. Throws
// InternalError if no repeat occurs by exponent `bound`.
EventualPeriod eventual_period(const gf::Field& F, const Matrix& m, std::uint64_t bound);
EventualPeriod eventual_period(const RegularRep& rep, unsigned r, std::uint64_t bound = 0);

enum class CaseTag {
  kDegenerateZeroResidue,
  kDegenerateNoZeroResidue,
  kNonDegenerateFirstStrand,  // r = 1, kappa all zero
  kNonDegenerateGeneral,
};

std::string to_string(CaseTag tag);

struct Prediction {
  std::uint64_t pre_period = 0;
  std::uint64_t period = 0;
  CaseTag tag = CaseTag::kNonDegenerateGeneral;
};

// degenerate: d = p^l (p - 1), N = least k with x_r^k P_{r,0} = 0;
// non-degenerate: d = p^l for r = 1 with kappa all zero, else e p^l; N = 0.
Prediction predicted_period(const RegularRep& rep, unsigned r);

struct Check {
  std::string name;
  bool passed = false;
};

struct PeriodReport {
  unsigned r = 0;
  unsigned nil_index = 0;
  unsigned l = 0;
  std::uint64_t n_observed = 0;
  std::uint64_t d_observed = 0;
  std::uint64_t n_predicted = 0;
  std::uint64_t d_predicted = 0;
  CaseTag tag = CaseTag::kNonDegenerateGeneral;
  bool verdict = false;  // observed == predicted
  std::vector<Check> checks;

  bool checks_passed() const;
};

std::vector<PeriodReport> verify_periodicity(const RegularRep& rep);

}  // namespace cyclo::period
