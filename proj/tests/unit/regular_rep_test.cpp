#include <algorithm>

#include <gtest/gtest.h>

#include "cyclohecke/linalg.hpp"
#include "cyclohecke/regrep.hpp"
#include "support.hpp"

using namespace cyclo;
using hecke::AlgebraParams;
using linalg::Matrix;

namespace {

Matrix jordan2(const gf::Field& F, gf::FieldElement eigen) {
  Matrix m(2, 2);
  m.at(0, 0) = eigen;
  m.at(1, 1) = eigen;
  m.at(0, 1) = F.one();
  return m;
}

bool relation_passed(const std::vector<regrep::RelationResult>& rs, const std::string& prefix) {
  bool seen = false;
  for (const auto& r : rs) {
    if (r.name.rfind(prefix, 0) == 0) {
      seen = true;
      if (!r.passed) return false;
    }
  }
  return seen;
}

}  // namespace

TEST(LinearAlgebra, RankKernelAndMinimalPolynomial) {
  const auto F = gf::Field::create(2);
  EXPECT_EQ(linalg::rank(*F, Matrix::identity(*F, 2)), 2u);
  const Matrix j = jordan2(*F, F->zero());
  EXPECT_EQ(linalg::rank(*F, j), 1u);
  const auto ker = linalg::kernel_basis(*F, j);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0], (linalg::Vector{F->one(), F->zero()}));
  EXPECT_EQ(linalg::min_poly(*F, j), gf::Polynomial::monomial(F->one(), 2));
}

TEST(LinearAlgebra, ProjectorsForDiagonalAndJordanMatrices) {
  const auto F = gf::Field::create(5);
  Matrix d(3, 3);
  d.at(0, 0) = F->from_int(1);
  d.at(1, 1) = F->from_int(2);
  d.at(2, 2) = F->from_int(3);
  const Matrix p = linalg::crt_projector(*F, d, F->from_int(2));
  Matrix expected(3, 3);
  expected.at(1, 1) = F->one();
  EXPECT_EQ(p, expected);
  EXPECT_TRUE(linalg::crt_projector(*F, d, F->from_int(4)).is_zero());

  const auto F2 = gf::Field::create(2);
  EXPECT_TRUE(linalg::crt_projector(*F2, jordan2(*F2, F2->one()), F2->one()).is_identity(*F2));
}

TEST(LinearAlgebra, PowersAndDeterministicHash) {
  const auto F = gf::Field::create(3);
  const Matrix j = jordan2(*F, F->one());
  EXPECT_EQ(linalg::pow(*F, j, 3), Matrix::identity(*F, 2));
  EXPECT_EQ(linalg::pow(*F, j, 0), Matrix::identity(*F, 2));
  EXPECT_EQ(linalg::hash(j), linalg::hash(jordan2(*F, F->one())));
  EXPECT_NE(linalg::hash(j), linalg::hash(Matrix::identity(*F, 2)));
}

TEST(RegularRep, SmallDegenerateMatrices) {
  const auto rep = fixtures::regular(fixtures::small_degenerate());
  const auto& F = rep->field();
  EXPECT_EQ(rep->dimension(), 2u);
  EXPECT_EQ(rep->X(2), rep->T(1));
  // (x - 1)^2 = x^2 + 1 in characteristic 2.
  EXPECT_EQ(rep->min_poly_X(2),
            gf::poly::pow(F, gf::Polynomial::linear(F, F.one()), 2));
  EXPECT_TRUE(linalg::crt_projector(F, rep->X(2), F.zero()).is_zero());
}

TEST(RegularRep, NilpotentFirstStrandAtLevelTwo) {
  const auto rep = fixtures::regular(AlgebraParams::degenerate(2, 1, {0, 0}));
  const auto& F = rep->field();
  Matrix block(2, 2);
  block.at(1, 0) = F.one();
  EXPECT_EQ(rep->X(1), block);
}

TEST(RegularRep, MatrixRoundTrip) {
  const auto rep = fixtures::regular(AlgebraParams::nondegenerate(2, 3, 2, {0, 1}));
  const auto& alg = rep->algebra();
  EXPECT_TRUE(rep->to_matrix(alg.one()).is_identity(rep->field()));
  const auto a = alg.gen_X(2) * alg.gen_T(1) + alg.gen_X(1);
  EXPECT_EQ(rep->from_action_on_one(rep->to_matrix(a)), a);
  EXPECT_EQ(rep->to_matrix(a * alg.gen_X(2)),
            linalg::mul(rep->field(), rep->to_matrix(a), rep->X(2)));
}

TEST(RegularRep, ProjectorsAreCommutingIdempotents) {
  const auto rep = fixtures::regular(AlgebraParams::degenerate(3, 3, {0, 1}));
  const auto& F = rep->field();
  for (unsigned r = 1; r <= rep->n(); ++r) {
    for (unsigned i : rep->spectrum(r)) {
      const Matrix& P = rep->weight_projector(r, i);
      EXPECT_EQ(linalg::mul(F, P, P), P);
      for (unsigned s = r + 1; s <= rep->n(); ++s) {
        for (unsigned j : rep->spectrum(s)) {
          const Matrix& Q = rep->weight_projector(s, j);
          EXPECT_EQ(linalg::mul(F, P, Q), linalg::mul(F, Q, P));
        }
      }
    }
  }
}

TEST(Relations, HoldForValidParameters) {
  for (const auto& params :
       {fixtures::small_degenerate(), fixtures::small_nondegenerate(),
        AlgebraParams::degenerate(3, 3, {0, 1}), AlgebraParams::nondegenerate(2, 3, 3, {0, 1})}) {
    const auto rs = regrep::relation_check(*fixtures::regular(params));
    EXPECT_TRUE(regrep::all_passed(rs)) << params.describe();
  }
}

TEST(Relations, BraidRelationAtThreeStrands) {
  const auto rs = regrep::relation_check(*fixtures::regular(AlgebraParams::nondegenerate(3, 2, 3, {0})));
  EXPECT_TRUE(relation_passed(rs, "braid"));
}

TEST(Relations, CorruptedStraighteningIsCaught) {
  for (auto fault : {hecke::Fault::kCommutationShift, hecke::Fault::kCyclotomicConstant}) {
    for (const auto& params :
         {AlgebraParams::degenerate(3, 2, {0, 1}), AlgebraParams::nondegenerate(2, 3, 2, {0, 1})}) {
      const auto rs = regrep::relation_check(*fixtures::regular(params, fault));
      EXPECT_FALSE(regrep::all_passed(rs)) << hecke::to_string(fault) << " " << params.describe();
    }
  }
}
