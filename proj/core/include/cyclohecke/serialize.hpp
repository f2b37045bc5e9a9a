#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclohecke/verify.hpp"

namespace cyclo::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Bare integer in a prime field, coefficient array (c_0, ..., c_{k-1})
// otherwise.
json to_json(const gf::Field& F, gf::FieldElement a);
gf::FieldElement field_element_from_json(const gf::Field& F, const json& j);

json to_json(const hecke::AlgebraParams& params);
// [{"a": [...], "w": [one-line, 1-based], "c": ...}, ...] in basis order.
json to_json(const hecke::AlgebraElement& a);
hecke::AlgebraElement element_from_json(const hecke::Algebra& alg, const json& j);
json to_json(const gf::Field& F, const linalg::Matrix& m);

json to_json(const std::vector<regrep::RelationResult>& relations);
json to_json(const idem::IdempotentReport& report);
json to_json(const std::vector<period::PeriodReport>& reports);
json to_json(const std::vector<verify::SuiteResult>& suites);
json to_json(const verify::InstanceReport& report);

std::string period_csv_header();
std::string period_csv_rows(const hecke::AlgebraParams& params,
                            const std::vector<period::PeriodReport>& reports);

}  // namespace cyclo::io
