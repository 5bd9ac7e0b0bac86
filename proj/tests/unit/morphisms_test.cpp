#include <gtest/gtest.h>

#include "jacobi/enumerate.hpp"
#include "jacobi/error.hpp"
#include "jacobi/morphisms.hpp"
#include "jacobi/quotient.hpp"

using namespace jacobi;

namespace {

Combination all_classes(const Support& s, int degree) {
  Combination x(s);
  int i = 1;
  for (const auto& c : enumerate(s, degree)) x.add_code(c.code, i++);
  return x;
}

bool vanishes_in(const Combination& x, int degree, QuotientMethod m = QuotientMethod::Full,
                 std::vector<int> legs = {}) {
  QuotientOptions o;
  o.method = m;
  o.color_legs = std::move(legs);
  return quotient_basis(x.support(), degree, o)->vanishes(x);
}

}  // namespace

TEST(Morphisms, IntervalAlgebraIsCommutative) {
  const Support I = Support::interval();
  Combination c = chord(I, 0, 0);
  for (const auto& y : enumerate(I, 2)) {
    Combination b = Combination(I);
    b.add_code(y.code, 1);
    Combination comm = stack_product(c, b) - stack_product(b, c);
    EXPECT_TRUE(vanishes_in(comm, 3)) << code_hex(y.code);
  }
}

TEST(Morphisms, DuplicateOnceIsIdentity) {
  Combination x = all_classes(Support::strands(2), 2);
  EXPECT_EQ(duplicate_part(x, Part::component(1), 1), x);
  Combination b = all_classes(Support::colored({"x"}), 2);
  EXPECT_EQ(duplicate_part(b, Part::of_color(0), 1, {"x"}), b);
}

TEST(Morphisms, DuplicateCountsAssignments) {
  Combination c = chord(Support::interval(), 0, 0);
  Combination d = duplicate_part(c, Part::component(0), 2);
  EXPECT_EQ(d.support(), Support::strands(2));
  // two isolated chords, two chords between the strands in either order (equal classes)
  EXPECT_EQ(d.size(), 3u);
}

TEST(Morphisms, ReverseTwiceIsIdentity) {
  Combination x = all_classes(Support::strands(2), 2);
  EXPECT_EQ(reverse_component(reverse_component(x, 0), 0), x);
  EXPECT_EQ(permute_components(permute_components(x, {1, 0}), {1, 0}), x);
}

TEST(Morphisms, CloseAfterOpenIsIdentity) {
  Combination x = close_interval(all_classes(Support::interval(), 3));
  EXPECT_EQ(close_interval(open_circle(x)), x);
}

TEST(Morphisms, PbwInverseIsRightInverse) {
  const Support I = Support::interval();
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : enumerate(I, n)) {
      Combination x(I);
      x.add_code(c.code, 1);
      LegProjection p = pbw_inverse(x);
      EXPECT_TRUE(p.vanish_above_u);
      Combination back(I);
      for (const auto& [k, part] : p.pi) back.add(pbw_symmetrize(part), 1);
      EXPECT_TRUE(vanishes_in(back - x, n)) << code_hex(c.code);
    }
  }
}

TEST(Morphisms, PbwInverseIsLeftInverse) {
  const Support B = Support::colored({"x"});
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : enumerate(B, n)) {
      Combination b(B);
      b.add_code(c.code, 1);
      int k = decode_diagram(B, c.code).num_univalent();
      LegProjection p = pbw_inverse(pbw_symmetrize(b));
      for (const auto& [j, part] : p.pi) {
        if (j == k) EXPECT_TRUE(vanishes_in(part - b, n, QuotientMethod::Full, {k}));
        else EXPECT_TRUE(vanishes_in(part, n, QuotientMethod::Full, {j}));
      }
    }
  }
}

TEST(Morphisms, PbwIntegrality) {
  const Support I = Support::interval();
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : enumerate(I, n, EnumerateOptions::chords())) {
      Combination x(I);
      x.add_code(c.code, 1);
      int u = 2 * n;
      for (const auto& [k, part] : pbw_inverse(x).pi)
        EXPECT_EQ(pbw_factor(k, u) % part.denominator(), 0) << "k=" << k << " u=" << u;
    }
  }
}

TEST(Morphisms, AdamsScalesLegGrading) {
  const Support I = Support::interval();
  for (int n = 1; n <= 3; ++n) {
    Combination x = all_classes(I, n);
    Combination expected(I);
    for (const auto& [k, part] : pbw_inverse(x).pi) expected.add(pbw_symmetrize(part), BigInt(1) << k);
    EXPECT_TRUE(vanishes_in(adams_operation(x, 2) - expected, n)) << n;
  }
}

TEST(Morphisms, LegSwapFixesTwoLegClasses) {
  const Support s = Support::colored({"v1", "v2"});
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : enumerate(s, n, EnumerateOptions::legs({1, 1}))) {
      Combination x(s);
      x.add_code(c.code, 1);
      if (decode_diagram(s, c.code).num_univalent() != 2) continue;
      EXPECT_TRUE(vanishes_in(leg_swap(x) - x, n, QuotientMethod::Full, {1, 1}));
    }
  }
  Combination bad = all_classes(Support::colored({"a", "b"}), 2);
  EXPECT_THROW(leg_swap(bad), DomainError);
}

TEST(Morphisms, TensorRejectsSharedColors) {
  Combination a = strut(Support::colored({"x"}), 0, 0);
  EXPECT_THROW(tensor_product(a, a), DomainError);
  Combination b = strut(Support::colored({"y"}), 0, 0);
  EXPECT_EQ(tensor_product(a, b).support(), Support::colored({"x", "y"}));
}
