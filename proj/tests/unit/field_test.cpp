#include <gtest/gtest.h>

#include "cyclohecke/errors.hpp"
#include "cyclohecke/gf.hpp"
#include "cyclohecke/numtheory.hpp"

using namespace cyclo;
using gf::Field;

TEST(Field, PrimeFieldsHaveTrivialModulus) {
  const auto f2 = Field::create(2);
  EXPECT_EQ(f2->order(), 2u);
  EXPECT_EQ(f2->modulus(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(Field::create(3)->order(), 3u);
}

TEST(Field, FourElementModulus) {
  const auto f4 = Field::create(2, 2);
  EXPECT_EQ(f4->order(), 4u);
  EXPECT_EQ(f4->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::create(4), ConfigError);
  EXPECT_THROW(Field::create(3, 0), ConfigError);
  EXPECT_THROW(Field::create(2, 40), ConfigError);
}

TEST(Field, ExhaustiveInverseAndDistributivity) {
  for (auto [p, k] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 1u}, {7u, 1u}}) {
    const auto F = Field::create(p, k);
    for (std::uint32_t a = 0; a < F->order(); ++a) {
      const auto x = F->element(a);
      if (a != 0) EXPECT_EQ(F->mul(x, F->inv(x)), F->one());
      for (std::uint32_t b = 0; b < F->order(); ++b) {
        const auto y = F->element(b);
        EXPECT_EQ(F->add(F->sub(x, y), y), x);
        EXPECT_EQ(F->mul(x, F->add(y, F->one())), F->add(F->mul(x, y), x));
      }
    }
  }
}

TEST(Field, InverseOfZeroThrows) {
  const auto F = Field::create(5);
  EXPECT_THROW((void)F->inv(F->zero()), std::domain_error);
}

TEST(Field, FrobeniusIsAdditive) {
  const auto F = Field::create(3, 2);
  for (std::uint32_t a = 0; a < F->order(); ++a) {
    for (std::uint32_t b = 0; b < F->order(); ++b) {
      const auto x = F->element(a), y = F->element(b);
      EXPECT_EQ(F->frobenius(F->add(x, y), 1), F->add(F->frobenius(x, 1), F->frobenius(y, 1)));
    }
  }
}

TEST(Field, QuantumCharacteristic) {
  const auto f3 = Field::create(3);
  EXPECT_EQ(gf::quantum_characteristic(*f3, f3->from_int(1)), 3u);
  EXPECT_EQ(gf::quantum_characteristic(*f3, f3->from_int(2)), 2u);
  const auto f4 = Field::create(2, 2);
  EXPECT_EQ(gf::quantum_characteristic(*f4, f4->element(2)), 3u);
  EXPECT_THROW((void)gf::quantum_characteristic(*f3, f3->zero()), ConfigError);
}

TEST(Field, ElementOfOrder) {
  const auto f3 = Field::create(3);
  EXPECT_EQ(gf::element_of_order(*f3, 2), f3->from_int(2));
  const auto f5 = Field::create(5);
  EXPECT_EQ(gf::element_of_order(*f5, 4), f5->from_int(2));
  EXPECT_THROW((void)gf::element_of_order(*f3, 3), ConfigError);
  EXPECT_THROW((void)gf::element_of_order(*f5, 3), ConfigError);
}

TEST(NumberTheory, FrobeniusPeriod) {
  EXPECT_EQ(nt::frobenius_period(3, 2), 1u);
  EXPECT_EQ(nt::frobenius_period(2, 3), 2u);
  EXPECT_EQ(nt::frobenius_period(5, 4), 1u);
  EXPECT_EQ(nt::frobenius_period(2, 7), 3u);
}

TEST(NumberTheory, CeilLogAndPowers) {
  EXPECT_EQ(nt::ceil_log(2, 1), 0u);
  EXPECT_EQ(nt::ceil_log(2, 2), 1u);
  EXPECT_EQ(nt::ceil_log(3, 4), 2u);
  EXPECT_EQ(nt::checked_pow(3, 4), 81u);
  EXPECT_THROW((void)nt::checked_pow(2, 64), ConfigError);
  EXPECT_TRUE(nt::is_prime(7));
  EXPECT_FALSE(nt::is_prime(9));
}
