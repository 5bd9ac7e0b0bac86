#include <gtest/gtest.h>

#include <random>

#include "jacobi/enumerate.hpp"
#include "jacobi/error.hpp"
#include "jacobi/morphisms.hpp"
#include "jacobi/quotient.hpp"
#include "jacobi/series.hpp"

using namespace jacobi;

namespace {

// Two-leg diagram of degree 3: each leg feeds a vertex of a tetrahedron-like core.
Combination wheel_two_leg() {
  Diagram d(two_leg_support());
  int l1 = d.add_vertex(Vertex::colored(0));
  int l2 = d.add_vertex(Vertex::colored(1));
  int t1 = d.add_vertex(Vertex::trivalent());
  int t2 = d.add_vertex(Vertex::trivalent());
  int t3 = d.add_vertex(Vertex::trivalent());
  int t4 = d.add_vertex(Vertex::trivalent());
  d.connect(half_edge(l1, 0), half_edge(t1, 0));
  d.connect(half_edge(l2, 0), half_edge(t2, 0));
  d.connect(half_edge(t1, 1), half_edge(t3, 0));
  d.connect(half_edge(t1, 2), half_edge(t4, 0));
  d.connect(half_edge(t2, 1), half_edge(t3, 1));
  d.connect(half_edge(t2, 2), half_edge(t4, 1));
  d.connect(half_edge(t3, 2), half_edge(t4, 2));
  return Combination::of(d);
}

bool equal_in_quotient(const Combination& a, const Combination& b, int N) {
  Combination diff = a - b;
  for (int d = 0; d <= N; ++d) {
    Combination p = diff.part(d);
    if (!p.empty() && !quotient_basis(p.support(), d)->vanishes(p)) return false;
  }
  return true;
}

Combination chords_up_to(const Support& s, int N) {
  Combination x(s);
  int i = 1;
  for (int n = 0; n <= N; ++n)
    for (const auto& c : enumerate(s, n, EnumerateOptions::chords())) x.add_code(c.code, i++);
  return x;
}

}  // namespace

TEST(Series, GeometricSeriesAndSquareRoot) {
  const Support I = Support::interval();
  Algebra alg = Algebra::stacking(I);
  Combination c = chord(I, 0, 0);
  Combination x = alg.unit + c;
  Combination cc = stack_product(c, c);
  EXPECT_EQ(series_calculus(alg, x, SeriesOp::Inverse, 2), alg.unit - c + cc);
  EXPECT_EQ(series_calculus(alg, x, SeriesOp::Sqrt, 2), alg.unit + Rational(1, 2) * c - Rational(1, 8) * cc);
}

TEST(Series, ExpLogInverseIdentities) {
  const Support I = Support::interval();
  Algebra alg = Algebra::stacking(I);
  Combination a(I);
  a.add(chord(I, 0, 0), Rational(1, 3));
  for (const auto& c : enumerate(I, 2)) a.add_code(c.code, Rational(-2, 5));
  const int N = 4;
  Combination e = series_calculus(alg, a, SeriesOp::Exp, N);
  Combination em = series_calculus(alg, Rational(-1) * a, SeriesOp::Exp, N);
  EXPECT_EQ(alg.multiply(e, em, N), alg.unit);
  EXPECT_EQ(series_calculus(alg, e, SeriesOp::Log, N), a);
  EXPECT_EQ(alg.multiply(e, series_calculus(alg, e, SeriesOp::Inverse, N), N), alg.unit);
  Combination r = series_calculus(alg, e, SeriesOp::Sqrt, N);
  EXPECT_EQ(alg.multiply(r, r, N), e);
  EXPECT_THROW(series_calculus(alg, e, SeriesOp::Exp, N), DomainError);
  EXPECT_THROW(series_calculus(alg, a, SeriesOp::Log, N), DomainError);
}

TEST(Series, GlueUnitAndCommutativity) {
  Combination u = two_leg_unit();
  Combination w = wheel_two_leg();
  ASSERT_FALSE(w.empty());
  EXPECT_EQ(two_leg_glue(u, w), w);
  EXPECT_EQ(two_leg_glue(w, u), w);
  EXPECT_TRUE(two_leg_symmetric(w));
  Combination ww = two_leg_glue(w, w);
  EXPECT_EQ(ww.max_degree(), 5);
}

TEST(Series, PsiOfStrutIsIdentity) {
  Combination x = chords_up_to(Support::circle(), 3);
  for (const auto& c : enumerate(Support::circle(), 3)) x.add_code(c.code, 7);
  EXPECT_EQ(psi_apply(two_leg_unit(), x, 3), x);
}

TEST(Series, PsiOfScaledStrut) {
  const Support s = Support::strands(2);
  Combination x(s);
  for (int n = 0; n <= 3; ++n)
    for (const auto& c : enumerate(s, n)) x.add_code(c.code, 1);
  Combination y = psi_apply(Rational(3) * two_leg_unit(), x, 3);
  for (int n = 0; n <= 3; ++n) {
    Rational scale = 1;
    for (int i = 0; i < n; ++i) scale *= 3;
    EXPECT_EQ(y.part(n), scale * x.part(n)) << n;
  }
}

TEST(Series, PsiLocusIndependence) {
  const Support S = Support::circle();
  Combination beta = two_leg_unit() + Rational(1, 2) * wheel_two_leg();
  std::mt19937_64 rng(11);
  for (const auto& c : enumerate(S, 2)) {
    Combination x(S);
    x.add_code(c.code, 1);
    Combination a = psi_apply(beta, x, 4);
    Combination b = psi_apply(beta, x, 4, random_locus(rng));
    EXPECT_TRUE(equal_in_quotient(a, b, 4)) << code_hex(c.code);
  }
}

TEST(Series, PsiIsMultiplicative) {
  const Support I = Support::interval();
  Combination beta = two_leg_unit() + wheel_two_leg();
  Combination x = chords_up_to(I, 1);
  Combination y = chords_up_to(I, 2);
  Algebra alg = Algebra::stacking(I);
  Combination lhs = psi_apply(beta, alg.multiply(x, y, 4), 4);
  Combination rhs = alg.multiply(psi_apply(beta, x, 4), psi_apply(beta, y, 4), 4);
  EXPECT_TRUE(equal_in_quotient(lhs, rhs, 4));
}

TEST(Series, SymbolicInversionWithoutA2) {
  auto A = symbolic_anomaly(6, {2});
  auto B = invert_anomaly(A, 6);
  EXPECT_EQ(B.at(2).to_string(), "0");
  EXPECT_EQ(B.at(4).to_string(), "-A_4");
  EXPECT_EQ(B.at(6).to_string(), "-A_6");
  for (const auto& [d, r] : anomaly_residual(A, B, 6)) EXPECT_TRUE(r.empty()) << d;
}

TEST(Series, SymbolicInversionGeneric) {
  auto A = symbolic_anomaly(6);
  auto B = invert_anomaly(A, 6);
  EXPECT_EQ(B.at(2).to_string(), "-A_2");
  EXPECT_EQ(B.at(4).to_string(), "3*A_2^2 - A_4");
  for (const auto& [d, r] : anomaly_residual(A, B, 6)) EXPECT_TRUE(r.empty()) << d;
}

TEST(Series, DiagramInversionUndoesPsi) {
  GradedParts<Combination> A;
  A.emplace(0, two_leg_unit());
  A.emplace(2, wheel_two_leg());
  const int N = 3;
  auto B = invert_anomaly(A, N);
  EXPECT_EQ(B.at(2), Rational(-1) * wheel_two_leg());
  Combination a = flatten(A, two_leg_support());
  Combination b = flatten(B, two_leg_support());
  Combination x = chords_up_to(Support::circle(), N);
  EXPECT_TRUE(equal_in_quotient(psi_apply(a, psi_apply(b, x, N), N), x, N));
}

TEST(Series, CrossingAtDegreeOne) {
  const Support I = Support::interval();
  Combination a = Rational(1, 2) * chord(I, 0, 0);
  Combination z = crossing_from_anomaly(a, 1);
  const Support P2 = Support::strands(2);
  EXPECT_EQ(z, Combination::unit(P2) + Rational(1, 2) * chord(P2, 0, 1));
  EXPECT_NE(crossing_from_anomaly(Rational(2) * a, 1), Rational(2) * z);
  EXPECT_EQ(crossing_from_anomaly(Combination(I), 3), Combination::unit(P2));
}

TEST(Series, CrossingIsStrandSymmetric) {
  const Support I = Support::interval();
  Combination a = Rational(1, 2) * chord(I, 0, 0);
  for (const auto& c : enumerate(I, 3)) a.add_code(c.code, Rational(1, 7));
  Combination z = crossing_from_anomaly(a, 3);
  EXPECT_TRUE(equal_in_quotient(permute_components(z, {1, 0}), z, 3));
}

TEST(Series, FramingTwistCancels) {
  const Support S = Support::circle();
  Combination a = Rational(1, 2) * chord(Support::interval(), 0, 0);
  Combination x = chords_up_to(S, 2);
  EXPECT_EQ(framing_twist(x, 0, 0, a, 3), Algebra::stacking(S).truncate(x, 3));
  Combination back = framing_twist(framing_twist(x, 0, 2, a, 3), 0, -2, a, 3);
  EXPECT_TRUE(equal_in_quotient(back, x, 3));
}

TEST(Series, ParityIsInvolution) {
  Combination x = chords_up_to(Support::circle(), 3);
  Combination y = parity_involution(x);
  EXPECT_EQ(y.part(3), Rational(-1) * x.part(3));
  EXPECT_EQ(y.part(2), x.part(2));
  EXPECT_EQ(parity_involution(y), x);
}
