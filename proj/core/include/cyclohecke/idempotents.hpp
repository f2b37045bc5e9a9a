#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclohecke/regrep.hpp"

namespace cyclo::idem {

using hecke::Algebra;
using hecke::AlgebraElement;
using linalg::Matrix;
using regrep::RegularRep;

// (i_1, ..., i_n), entries in [0, e).
using ResidueSequence = std::vector<unsigned>;

std::string to_string(const ResidueSequence& seq);

// Sequences with a nonzero simultaneous weight space, lexicographic.
std::vector<ResidueSequence> residue_support(const RegularRep& rep);

// Product of the per-strand weight projectors, as a matrix and as an element.
Matrix spectral_matrix(const RegularRep& rep, const ResidueSequence& seq);
AlgebraElement e_spectral(const RegularRep& rep, const ResidueSequence& seq);

// prod_r L_r(i)^N with every factor 1 - ((q_{i_r} - X_r) / (q_{i_r} - q_j))^N.
// With a support given, j only runs over residues that occur at strand r
// in some supported sequence. Throws ConfigError when N < 1.
AlgebraElement e_interpolation(const Algebra& alg, const ResidueSequence& seq, std::uint64_t N,
                               const std::vector<ResidueSequence>* support = nullptr);

// Cost of one closed-formula evaluation.
struct ClosedCost {
  std::uint64_t element_multiplications = 0;
  std::uint64_t scalar_inversions = 0;
  std::uint64_t matrix_inversions = 0;  // always 0, there are no matrices here
};

// Frobenius-power formulas with explicit per-strand exponents s_r:
//   degenerate      prod_r (1 - x_r^{(p-1)p^s})          if i_r = 0
//                   prod_r (-sum_k x_r^{k p^s} / i_r^k)  otherwise
//   non-degenerate  e^{-n} prod_r sum_{k<e} (X_r^{p^s} / q^{p^s i_r})^k
AlgebraElement e_closed(const Algebra& alg, const ResidueSequence& seq,
                        std::span<const unsigned> s, ClosedCost* cost = nullptr);
// Worst case of ClosedCost::element_multiplications for exponents s:
// sum_r 2 bitlen((p-1) p^{s_r}) + max(p, e). Linear in n, p and log p^s.
std::uint64_t closed_multiplication_bound(const hecke::AlgebraParams& params,
                                          std::span<const unsigned> s);

// s_r = l_r from the nilpotency of y_r.
AlgebraElement e_closed_auto(const RegularRep& rep, const ResidueSequence& seq,
                             ClosedCost* cost = nullptr);

// Nilpotent part of X_r: sum over residues of (x_r - i) P_{r,i}, resp.
// (1 - q^{-i} X_r) P_{r,i}.
Matrix y_matrix(const RegularRep& rep, unsigned r);
AlgebraElement y_element(const RegularRep& rep, unsigned r);

struct SequenceVerdict {
  ResidueSequence seq;
  bool supported = false;
  bool idempotent = false;
  bool interpolation_equal = false;
  bool restricted_equal = false;  // support-restricted factors
  bool closed_equal = false;
  bool closed_stable = false;     // s_r = l_r + 1 agrees with s_r = l_r
  AlgebraElement element;         // e_spectral
};

struct NilpotencyRecord {
  unsigned r = 0;
  unsigned nil_index = 0;
  unsigned l = 0;
};

struct IdempotentReport {
  std::vector<ResidueSequence> support;
  std::vector<SequenceVerdict> sequences;  // supported first, then a sample outside
  bool orthogonal = false;
  bool complete = false;
  std::vector<NilpotencyRecord> nilpotency;

  bool passed() const;
};

// Unsupported sequences checked: all of them when e^n <= limit, otherwise
// the first `limit` in lexicographic order.
IdempotentReport verify_idempotent_system(const RegularRep& rep, std::size_t outside_limit = 64);

}  // namespace cyclo::idem
