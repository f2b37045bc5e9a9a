#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclohecke/idempotents.hpp"
#include "cyclohecke/periodicity.hpp"
#include "cyclohecke/regrep.hpp"

namespace cyclo::verify {

using regrep::RegularRep;

struct SuiteResult {
  explicit SuiteResult(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when everything passed

  bool passed() const noexcept { return failures == 0; }
};

bool all_passed(const std::vector<SuiteResult>& suites);

// Randomized and exhaustive algebra-level invariants on one instance:
// closure, associativity, homomorphism into matrices, faithfulness,
// Jucys-Murphy commutativity, eigenvalue support, projector algebra and
// the interpolation partial sums. Deterministic for a given seed.
std::vector<SuiteResult> algebra_suites(const RegularRep& rep, std::uint64_t seed);

// Field and polynomial identities the period and idempotent formulas rest
// on; `instances` random cases each.
std::vector<SuiteResult> arithmetic_suites(std::uint64_t seed, std::uint64_t instances = 500);

struct InstanceReport {
  std::vector<regrep::RelationResult> relations;
  idem::IdempotentReport idempotents;
  std::vector<period::PeriodReport> periods;
  std::vector<SuiteResult> suites;

  bool relations_passed() const;
  bool periods_passed() const;  // verdicts and checks
  bool passed() const;
};

InstanceReport verify_instance(const RegularRep& rep, std::uint64_t seed);

}  // namespace cyclo::verify
