#include <gtest/gtest.h>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/serialize.hpp"
#include "support.hpp"

using namespace cyclo;
using hecke::AlgebraParams;

TEST(Serialize, FieldElementsRoundTrip) {
  const auto F = gf::Field::create(3, 2);
  for (std::uint32_t c = 0; c < F->order(); ++c) {
    const auto a = F->element(c);
    EXPECT_EQ(io::field_element_from_json(*F, io::to_json(*F, a)), a);
  }
  const auto F5 = gf::Field::create(5);
  EXPECT_EQ(io::to_json(*F5, F5->from_int(3)), 3);
  EXPECT_THROW((void)io::field_element_from_json(*F5, io::json(7)), ConfigError);
  EXPECT_THROW((void)io::field_element_from_json(*F, io::json::array({1})), ConfigError);
}

TEST(Serialize, ElementsRoundTrip) {
  const auto alg = fixtures::algebra(AlgebraParams::nondegenerate(2, 3, 2, {0, 1}));
  const auto a = alg->gen_X(2) * alg->gen_T(1) + alg->scalar(alg->params().q);
  EXPECT_EQ(io::element_from_json(*alg, io::to_json(a)), a);
}

TEST(Serialize, ElementsUseOneBasedPermutations) {
  const auto alg = fixtures::algebra(fixtures::small_degenerate());
  const auto j = io::to_json(alg->gen_T(1));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["w"], io::json::array({2, 1}));
  EXPECT_EQ(j[0]["a"], io::json::array({0, 0}));
}

TEST(Serialize, ParamsCarryFieldAndDimension) {
  const auto j = io::to_json(AlgebraParams::nondegenerate(2, 3, 3, {1, 0}));
  EXPECT_EQ(j["flavor"], "nondeg");
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["kappa"], io::json::array({0, 1}));
  EXPECT_EQ(j["dimension"], 48);
}

TEST(Serialize, PeriodCsvHasOneRowPerStrand) {
  const auto params = AlgebraParams::degenerate(2, 3, {0});
  const auto reports = period::verify_periodicity(*fixtures::regular(params));
  const std::string rows = io::period_csv_rows(params, reports);
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 3);
  EXPECT_EQ(io::period_csv_header(),
            "flavor,p,e,n,kappa,r,nil_index,l_r,N_obs,d_obs,N_pred,d_pred,case,verdict\n");
}
