#pragma once

#include <memory>

#include "cyclohecke/hecke.hpp"
#include "cyclohecke/regrep.hpp"

namespace cyclo::fixtures {

inline std::shared_ptr<const hecke::Algebra> algebra(const hecke::AlgebraParams& params,
                                                     hecke::Fault fault = hecke::Fault::kNone) {
  hecke::AlgebraOptions opts;
  opts.fault = fault;
  return hecke::Algebra::create(params, opts);
}

inline std::shared_ptr<const regrep::RegularRep> regular(const hecke::AlgebraParams& params,
                                                         hecke::Fault fault = hecke::Fault::kNone) {
  return regrep::RegularRep::build(algebra(params, fault));
}

// deg, p = 2, kappa = (0), n = 2: x1 = 0, x2 = s1.
inline hecke::AlgebraParams small_degenerate() { return hecke::AlgebraParams::degenerate(2, 2, {0}); }

// q = 2 in GF(3), kappa = (0), n = 2: X1 = 1, X2 = 2 T1 + 1.
inline hecke::AlgebraParams small_nondegenerate() {
  return hecke::AlgebraParams::nondegenerate(3, 2, 2, {0});
}

}  // namespace cyclo::fixtures
