#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cyclohecke/hecke.hpp"
#include "cyclohecke/linalg.hpp"

namespace cyclo::regrep {

using hecke::Algebra;
using hecke::AlgebraElement;
using linalg::Matrix;

// The algebra acting on itself by left multiplication, in the normal-word
// basis. Generator matrices, minimal polynomials of the Jucys-Murphy
// matrices and their generalized eigenspace projectors are computed once.
class RegularRep {
 public:
  static std::shared_ptr<const RegularRep> build(std::shared_ptr<const Algebra> alg);

  const Algebra& algebra() const noexcept { return *alg_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const noexcept { return alg_; }
  const gf::Field& field() const noexcept { return alg_->field(); }
  std::size_t dimension() const noexcept { return alg_->dimension(); }
  unsigned n() const noexcept { return alg_->n(); }

  const Matrix& T(unsigned r) const { return t_.at(r - 1); }
  const Matrix& X(unsigned r) const { return x_.at(r - 1); }
  const gf::Polynomial& min_poly_X(unsigned r) const { return min_x_.at(r - 1); }

  // Projector onto the generalized q_i-eigenspace of X_r; zero when q_i is
  // not an eigenvalue.
  const Matrix& weight_projector(unsigned r, unsigned residue) const;
  // Residues i with a nonzero weight projector, ascending.
  const std::vector<unsigned>& spectrum(unsigned r) const { return spectrum_.at(r - 1); }

  Matrix to_matrix(const AlgebraElement& a) const;
  // Column of the basis word 1, read back as an element.
  AlgebraElement from_action_on_one(const Matrix& m) const;

 private:
  explicit RegularRep(std::shared_ptr<const Algebra> alg) : alg_(std::move(alg)) {}

  std::shared_ptr<const Algebra> alg_;
  std::vector<Matrix> t_;
  std::vector<Matrix> x_;
  std::vector<gf::Polynomial> min_x_;
  std::vector<std::vector<Matrix>> projectors_;  // [r - 1][residue]
  std::vector<std::vector<unsigned>> spectrum_;
};

Matrix generator_matrix_T(const Algebra& alg, unsigned r);
Matrix generator_matrix_X(const Algebra& alg, unsigned r);

struct RelationResult {
  std::string name;
  bool passed = false;
};

// Every defining relation of the presentation, the cyclotomic relation and
// invertibility of X_1 (non-degenerate), evaluated as matrix identities.
std::vector<RelationResult> relation_check(const RegularRep& rep);
bool all_passed(const std::vector<RelationResult>& results);

}  // namespace cyclo::regrep
