#include <gtest/gtest.h>

#include "jacobi/denominators.hpp"
#include "jacobi/enumerate.hpp"
#include "jacobi/error.hpp"
#include "jacobi/morphisms.hpp"

using namespace jacobi;

TEST(Denominators, HandValues) {
  EXPECT_EQ(bound_d(3), 3840);
  EXPECT_EQ(bound_D(1), 3840);
  BigInt d4 = factorial_product(2, 4) * factorial(4) * 9 * factorial(23);
  d4 <<= 19;
  EXPECT_EQ(bound_D(4), d4);
  EXPECT_EQ(bound_d(8), factorial(20) * (BigInt(1) << 20));
  EXPECT_THROW(bound_d(2), DomainError);
  EXPECT_THROW(bound_D(0), DomainError);
  EXPECT_THROW(bound_D2(4), DomainError);
}

TEST(Denominators, FactorizationMultipliesBack) {
  for (BoundKind k : {BoundKind::Small, BoundKind::Big, BoundKind::TwoLeg}) {
    for (int p = 5; p <= 20; ++p) {
      DenominatorBound b = bound(k, p);
      EXPECT_EQ(expand(b.factorization), b.value) << kind_name(k) << p;
    }
  }
  EXPECT_EQ(factorization_to_string(bound(BoundKind::Small, 3).factorization), "2^8 * 3 * 5");
}

TEST(Denominators, MonotoneAndBranchBoundary) {
  for (int p = 5; p < 40; ++p) {
    EXPECT_LT(bound_d(p), bound_d(p + 1));
    EXPECT_LT(bound_D(p), bound_D(p + 1));
    EXPECT_LT(bound_D2(p), bound_D2(p + 1));
  }
  EXPECT_GE(bound_d(9), bound_d(8));
}

TEST(Denominators, ObligationsPass) {
  for (const auto& id : obligation_ids()) {
    Certificate c = verify_obligation(id, 50);
    EXPECT_TRUE(c.pass) << c.to_text();
    EXPECT_GT(c.checked, 0);
  }
}

TEST(Denominators, MutationIsCaught) {
  Certificate c = verify_obligation("D-odd", 50, true);
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.witness, "k=4 prime 3 exponent 14 > 12");
  EXPECT_THROW(verify_obligation("nope", 5), DomainError);
}

TEST(Denominators, ComboDenominator) {
  const Support I = Support::interval();
  Combination x(I);
  EXPECT_EQ(combo_denominator(x), 1);
  auto classes = enumerate(I, 2, EnumerateOptions::chords());
  x.add_code(classes[0].code, Rational(1, 2));
  x.add_code(classes[1].code, Rational(1, 3));
  EXPECT_EQ(combo_denominator(x), 6);
  EXPECT_EQ(combo_denominator(Coordinates{Rational(1, 4), Rational(5, 6)}), 12);
  for (const auto& c : enumerate(I, 3)) {
    Combination y(I);
    y.add_code(c.code, 1);
    EXPECT_EQ(combo_denominator(y), 1);
  }
}
