#include <gtest/gtest.h>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/idempotents.hpp"
#include "cyclohecke/periodicity.hpp"
#include "support.hpp"

using namespace cyclo;
using hecke::AlgebraParams;
using idem::ResidueSequence;

TEST(Support, SmallCases) {
  const std::vector<ResidueSequence> expected{{0, 1}};
  EXPECT_EQ(idem::residue_support(*fixtures::regular(fixtures::small_degenerate())), expected);
  EXPECT_EQ(idem::residue_support(*fixtures::regular(fixtures::small_nondegenerate())), expected);
  const std::vector<ResidueSequence> single{{0}};
  EXPECT_EQ(idem::residue_support(*fixtures::regular(AlgebraParams::degenerate(3, 1, {0}))), single);
}

TEST(Spectral, SingletonSupportGivesIdentity) {
  for (const auto& params : {fixtures::small_degenerate(), fixtures::small_nondegenerate()}) {
    const auto rep = fixtures::regular(params);
    EXPECT_EQ(idem::e_spectral(*rep, {0, 1}), rep->algebra().one());
    EXPECT_TRUE(idem::e_spectral(*rep, {1, 1}).is_zero());
  }
}

TEST(Interpolation, MatchesSpectralAndRejectsZeroExponent) {
  const auto rep = fixtures::regular(AlgebraParams::degenerate(3, 2, {0, 1}));
  const auto& alg = rep->algebra();
  const auto support = idem::residue_support(*rep);
  for (const auto& seq : support) {
    const auto e = idem::e_spectral(*rep, seq);
    EXPECT_EQ(idem::e_interpolation(alg, seq, rep->dimension()), e);
    EXPECT_EQ(idem::e_interpolation(alg, seq, rep->dimension(), &support), e);
  }
  EXPECT_TRUE(idem::e_interpolation(alg, {2, 2}, rep->dimension()).is_zero());
  EXPECT_THROW((void)idem::e_interpolation(alg, {0, 1}, 0), ConfigError);
  EXPECT_THROW((void)idem::e_interpolation(alg, {0}, 4), ConfigError);
}

TEST(Closed, SmallCasesEvaluateToIdentity) {
  const std::vector<unsigned> s{0, 1};
  for (const auto& params : {fixtures::small_degenerate(), fixtures::small_nondegenerate()}) {
    const auto alg = fixtures::algebra(params);
    EXPECT_EQ(idem::e_closed(*alg, {0, 1}, s), alg->one()) << params.describe();
  }
}

TEST(Closed, CostHasNoMatrixInversion) {
  const auto rep = fixtures::regular(AlgebraParams::degenerate(2, 3, {0, 1}));
  for (const auto& seq : idem::residue_support(*rep)) {
    idem::ClosedCost cost;
    const auto e = idem::e_closed_auto(*rep, seq, &cost);
    EXPECT_EQ(e, idem::e_spectral(*rep, seq));
    EXPECT_EQ(cost.matrix_inversions, 0u);
    std::vector<unsigned> l;
    for (unsigned r = 1; r <= rep->n(); ++r) l.push_back(period::nilpotency(*rep, r).l);
    EXPECT_LE(cost.element_multiplications,
              idem::closed_multiplication_bound(rep->algebra().params(), l));
  }
}

TEST(YElements, SmallCases) {
  const auto deg = fixtures::regular(fixtures::small_degenerate());
  const auto& a = deg->algebra();
  EXPECT_EQ(idem::y_element(*deg, 2), a.gen_T(1) + a.one());
  EXPECT_TRUE(idem::y_element(*deg, 1).is_zero());

  const auto nondeg = fixtures::regular(fixtures::small_nondegenerate());
  const auto& b = nondeg->algebra();
  const auto two = b.field().from_int(2);
  EXPECT_EQ(idem::y_element(*nondeg, 2), b.scalar(two) + two * b.gen_T(1));
}

TEST(System, SmallCasesPass) {
  for (const auto& params : {fixtures::small_degenerate(), fixtures::small_nondegenerate()}) {
    const auto report = idem::verify_idempotent_system(*fixtures::regular(params));
    EXPECT_TRUE(report.passed()) << params.describe();
    EXPECT_EQ(report.support.size(), 1u);
  }
}

TEST(System, SymmetricGroupInCharacteristicTwo) {
  const auto rep = fixtures::regular(AlgebraParams::degenerate(2, 3, {0}));
  const auto report = idem::verify_idempotent_system(*rep);
  EXPECT_TRUE(report.complete);
  EXPECT_TRUE(report.orthogonal);
  EXPECT_TRUE(report.passed());
}

TEST(System, IdempotentsCommuteWithJucysMurphy) {
  const auto rep = fixtures::regular(AlgebraParams::nondegenerate(2, 3, 3, {0, 1}));
  const auto& alg = rep->algebra();
  for (const auto& seq : idem::residue_support(*rep)) {
    const auto e = idem::e_spectral(*rep, seq);
    for (unsigned r = 1; r <= rep->n(); ++r) EXPECT_EQ(e * alg.gen_X(r), alg.gen_X(r) * e);
  }
}
