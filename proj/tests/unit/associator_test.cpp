#include <gtest/gtest.h>

#include <random>

#include "jacobi/associator.hpp"
#include "jacobi/enumerate.hpp"
#include "jacobi/error.hpp"
#include "jacobi/morphisms.hpp"
#include "jacobi/series.hpp"

using namespace jacobi;

namespace {

Combination a(int r, int i, int j) { return chord(Support::strands(r), i - 1, j - 1); }

Combination random_p2(int k, std::mt19937_64& rng) {
  const Support s = Support::strands(2);
  Combination g(s);
  for (const auto& c : enumerate(s, k, EnumerateOptions::chords()))
    g.add_code(c.code, static_cast<long>(rng() % 7) - 3);
  return g;
}

}  // namespace

TEST(Words, ParsePrintAndCount) {
  NAWord w = NAWord::parse("((··)·)");
  EXPECT_EQ(w.length(), 3);
  EXPECT_EQ(w.to_string(), "((··)·)");
  EXPECT_EQ(NAWord::parse("((..).)"), w);
  EXPECT_FALSE(w == NAWord::parse("(·(··))"));
  EXPECT_EQ(NAWord::parse("(··)").length(), 2);
  EXPECT_EQ(all_words(4).size(), 5u);
  EXPECT_TRUE(NAWord::parse("").empty());
  EXPECT_THROW(NAWord::parse("(·)"), ParseError);
  EXPECT_THROW(NAWord::parse("(··"), ParseError);
  EXPECT_EQ(w.delete_letter(3).to_string(), "(··)");
  EXPECT_EQ(w.flipped().to_string(), "(·(··))");
  EXPECT_EQ(w.split_letter(3).to_string(), "((··)(··))");
}

TEST(Associator, CoboundaryExamples) {
  EXPECT_TRUE(coboundary(strand_unit(2)).empty());
  EXPECT_TRUE(reduce_residual(coboundary(a(2, 1, 2)), 1).zero());
}

TEST(Associator, CoboundarySquaresToZero) {
  for (int k = 0; k <= 2; ++k) {
    auto q = quotient_basis(Support::strands(2), k);
    for (int j = 0; j < q->dim(); ++j)
      EXPECT_TRUE(reduce_residual(coboundary(coboundary(q->basis_element(j))), k).zero()) << k << " " << j;
  }
}

TEST(Associator, ConstraintsAndSolver) {
  std::mt19937_64 rng(5);
  ConstraintReport zero = check_psi_constraints(Combination(Support::strands(3)), 2);
  EXPECT_TRUE(zero.all());
  ConstraintReport bad = check_psi_constraints(a(3, 1, 2), 1);
  EXPECT_FALSE(bad.c4);
  EXPECT_THROW(solve_coboundary(a(3, 1, 2), 1), DomainError);
  int nontrivial = 0;
  for (int trial = 0; trial < 4; ++trial) {
    Combination f0 = make_admissible(random_p2(2, rng));
    Combination psi = coboundary(f0);
    nontrivial += !reduce_residual(psi, 2).zero();
    EXPECT_TRUE(check_psi_constraints(psi, 2).all());
    auto f = solve_coboundary(psi, 2);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(reduce_residual(coboundary(*f) - psi, 2).zero());
    EXPECT_TRUE(reduce_residual(epsilon(*f, 1), 2).zero());
    EXPECT_TRUE(equal_in_quotient(permute_strands(*f, {2, 1}), *f, 2));
  }
  EXPECT_GT(nontrivial, 0);
}

TEST(Associator, Pentagon) {
  EXPECT_TRUE(check_pentagon(strand_unit(3), 2).zero());
  Residual r = check_pentagon(strand_unit(3) + a(3, 1, 2), 1);
  EXPECT_TRUE(equal_in_quotient(r.raw, Rational(-1) * a(4, 1, 2), 1));
  EXPECT_EQ(r.norm, 1);
}

TEST(Associator, Hexagon) {
  const Algebra p2 = Algebra::stacking(Support::strands(2));
  EXPECT_TRUE(check_hexagon(strand_unit(3), strand_unit(2), 2).zero());
  Combination R1 = series_calculus(p2, Rational(1, 2) * a(2, 1, 2), SeriesOp::Exp, 1);
  EXPECT_TRUE(check_hexagon(strand_unit(3), R1, 1).zero());
  Combination R2 = series_calculus(p2, Rational(1, 2) * a(2, 1, 2), SeriesOp::Exp, 2);
  Residual r = check_hexagon(strand_unit(3), R2, 2);
  EXPECT_FALSE(r.zero());
  // proportional to the commutator [a13, a23]
  const Algebra p3 = Algebra::stacking(Support::strands(3));
  Combination comm = p3.multiply(a(3, 1, 3), a(3, 2, 3), 2) - p3.multiply(a(3, 2, 3), a(3, 1, 3), 2);
  EXPECT_TRUE(equal_in_quotient(r.raw, Rational(1, 8) * comm, 2) || equal_in_quotient(r.raw, Rational(-1, 8) * comm, 2));
}

TEST(Twists, CablingProperties) {
  std::mt19937_64 rng(9);
  Combination F = strand_unit(2) + make_admissible(random_p2(2, rng)) + Rational(1, 3) * a(2, 1, 2);
  const int N = 2;
  ASSERT_TRUE(is_twist(F, N));
  EXPECT_EQ(twist_cable(F, NAWord::letter(), N), strand_unit(1));
  EXPECT_EQ(twist_cable(F, NAWord::parse("(··)"), N), F);
  const Algebra p3 = Algebra::stacking(Support::strands(3));
  EXPECT_EQ(twist_cable(F, NAWord::parse("((··)·)"), N), p3.multiply(delta(F, 1), tensor_one(F), N));
  for (const auto& w : all_words(3)) {
    Combination Fw = twist_cable(F, w, N);
    for (int i = 1; i <= 3; ++i) {
      EXPECT_TRUE(equal_in_quotient(twist_cable(F, w.delete_letter(i), N), epsilon(Fw, i), N));
    }
    EXPECT_TRUE(equal_in_quotient(twist_cable(F, w.flipped(), N), flip_strands(Fw), N));
  }
  for (const auto& w : all_words(2)) {
    Combination Fw = twist_cable(F, w, N);
    for (int i = 1; i <= 2; ++i) {
      // F on strands i, i+1 of three
      Combination local = i == 1 ? tensor_one(F) : one_tensor(F);
      EXPECT_TRUE(equal_in_quotient(twist_cable(F, w.split_letter(i), N), p3.multiply(delta(Fw, i), local, N), N));
    }
  }
  EXPECT_THROW(twist_cable(strand_unit(2) + a(2, 1, 1), NAWord::parse("(··)"), 1), DomainError);
}

TEST(Twists, PermutationActionComposes) {
  std::mt19937_64 rng(3);
  const Support s = Support::strands(3);
  Combination x(s);
  for (const auto& c : enumerate(s, 2, EnumerateOptions::chords())) x.add_code(c.code, static_cast<long>(rng() % 5));
  std::vector<int> sigma{2, 3, 1}, tau{1, 3, 2};
  std::vector<int> ts(3);
  for (int i = 0; i < 3; ++i) ts[i] = tau[sigma[i] - 1];
  EXPECT_EQ(permute_strands(permute_strands(x, sigma), tau), permute_strands(x, ts));
}
