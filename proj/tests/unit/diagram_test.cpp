#include <gtest/gtest.h>

#include <random>
#include <set>

#include "jacobi/canonical.hpp"
#include "jacobi/enumerate.hpp"
#include "jacobi/error.hpp"

using namespace jacobi;

namespace {

const char* kChordOnInterval = R"(support: I
colors: []
v0: U M 0 0
v1: U M 0 1
e: (v0.0, v1.0)
)";

const char* kTripod = R"(support: S1
colors: []
v0: T
v1: U M 0 0
v2: U M 0 1
v3: U M 0 2
e: (v0.0, v1.0)
e: (v0.1, v2.0)
e: (v0.2, v3.0)
)";

const char* kTripodReversed = R"(support: S1
colors: []
v0: T
v1: U M 0 0
v2: U M 0 1
v3: U M 0 2
e: (v0.0, v1.0)
e: (v0.1, v3.0)
e: (v0.2, v2.0)
)";

const char* kTadpole = R"(support: S1
colors: []
v0: U M 0 0
v1: T
e: (v0.0, v1.0)
e: (v1.1, v1.2)
)";

// Relabels vertices by a random permutation and rotates each trivalent
// vertex's slots cyclically, which leaves the class and the sign unchanged.
Diagram shuffle(const Diagram& d, std::mt19937_64& rng, bool flip_one) {
  int n = d.num_vertices();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::array<int, 3>> slot(n);
  int flipped = -1;
  for (int v = 0; v < n; ++v) {
    int r = static_cast<int>(rng() % 3);
    slot[v] = {r, (r + 1) % 3, (r + 2) % 3};
    if (d.vertex(v).univalent()) slot[v] = {0, 1, 2};
    if (flip_one && flipped < 0 && !d.vertex(v).univalent()) {
      std::swap(slot[v][1], slot[v][2]);
      flipped = v;
    }
  }
  std::vector<Vertex> vs(n);
  for (int v = 0; v < n; ++v) vs[perm[v]] = d.vertex(v);
  Diagram out(d.support());
  for (const auto& vx : vs) out.add_vertex(vx);
  for (HalfEdge h : d.edges()) {
    HalfEdge m = d.mate(h);
    out.connect(half_edge(perm[vertex_of(h)], slot[vertex_of(h)][slot_of(h)]),
                half_edge(perm[vertex_of(m)], slot[vertex_of(m)][slot_of(m)]));
  }
  return out;
}

}  // namespace

TEST(Validate, EmptyDiagramIsValid) {
  EXPECT_FALSE(Diagram(Support::circle()).violation());
  EXPECT_FALSE(Diagram(Support::strands(3)).violation());
}

TEST(Validate, ClosedComponentRejected) {
  // Two trivalent vertices joined by three edges (the theta graph).
  Diagram d(Support::circle());
  d.add_vertex(Vertex::trivalent());
  d.add_vertex(Vertex::trivalent());
  for (int s = 0; s < 3; ++s) d.connect(half_edge(0, s), half_edge(1, s));
  auto why = d.violation();
  ASSERT_TRUE(why);
  EXPECT_EQ(*why, "closed dashed component");
}

TEST(Validate, ChordIsValid) {
  Diagram d = parse_diagram(kChordOnInterval);
  EXPECT_EQ(d.num_univalent(), 2);
  EXPECT_EQ(d.num_edges(), 1);
  EXPECT_FALSE(d.violation());
}

TEST(Validate, BadRanks) {
  Diagram d(Support::interval());
  d.add_vertex(Vertex::skeleton(0, 0));
  d.add_vertex(Vertex::skeleton(0, 2));
  d.connect(0, 3);
  ASSERT_TRUE(d.violation());
  EXPECT_NE(d.violation()->find("ranks"), std::string::npos);
}

TEST(Validate, CountingIdentities) {
  for (int n = 0; n <= 3; ++n)
    for (const auto& k : enumerate(Support::circle(), n)) {
      Diagram d = decode_diagram(Support::circle(), k.code);
      EXPECT_EQ(d.num_trivalent() + d.num_univalent(), 2 * n);
      EXPECT_EQ(d.num_edges() + d.num_univalent(), 3 * n);
    }
}

TEST(Grammar, RoundTrip) {
  for (const auto& k : enumerate(Support::parse("I,S1"), 2)) {
    Diagram d = decode_diagram(Support::parse("I,S1"), k.code);
    std::string text = serialize_diagram(d);
    Diagram back = parse_diagram(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(serialize_diagram(back), text);
    EXPECT_EQ(canonicalize(back).code, k.code);
  }
}

TEST(Grammar, ColoredRoundTrip) {
  Support s = Support::colored({"v1", "v2"});
  for (const auto& k : enumerate(s, 3, EnumerateOptions::legs({1, 1}))) {
    Diagram d = decode_diagram(s, k.code);
    EXPECT_EQ(parse_diagram(serialize_diagram(d)), d);
  }
}

TEST(Grammar, Errors) {
  EXPECT_THROW(parse_diagram("support: I\ncolors: []\nv0: Q\n"), ParseError);
  EXPECT_THROW(parse_diagram("support: I\ncolors: []\nv0: U M 0 0\nv1: U M 0 1\ne: (v0.0, v1.0)\ne: (v0.0, v1.0)\n"),
               ParseError);
  EXPECT_THROW(parse_diagram("support: I\ncolors: []\nv0: U M 0 0\nv1: U M 0 1\n"), DomainError);
  try {
    parse_diagram("support: I\ncolors: []\nv0: U M 0 0\ne: (v0.0 v1.0)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
}

TEST(Canonical, ChordOnCircle) {
  Diagram d(Support::circle());
  d.add_vertex(Vertex::skeleton(0, 0));
  d.add_vertex(Vertex::skeleton(0, 1));
  d.connect(0, 3);
  EXPECT_EQ(canonicalize(d).sign, 1);
}

TEST(Canonical, TripodOrientation) {
  auto a = canonicalize(parse_diagram(kTripod));
  auto b = canonicalize(parse_diagram(kTripodReversed));
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.sign * b.sign, -1);
}

TEST(Canonical, TadpoleIsZero) { EXPECT_TRUE(canonicalize(parse_diagram(kTadpole)).zero()); }

TEST(Canonical, Idempotent) {
  for (int n = 0; n <= 3; ++n)
    for (const auto& k : enumerate(Support::circle(), n)) {
      auto again = canonicalize(decode_diagram(Support::circle(), k.code));
      EXPECT_EQ(again.code, k.code);
      EXPECT_EQ(again.sign, 1);
    }
}

TEST(Canonical, RandomRelabelings) {
  std::mt19937_64 rng(7);
  Support s = Support::parse("I,S1");
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : enumerate(s, n)) {
      Diagram d = decode_diagram(s, k.code);
      for (int trial = 0; trial < 3; ++trial) {
        auto same = canonicalize(shuffle(d, rng, false));
        EXPECT_EQ(same.code, k.code);
        EXPECT_EQ(same.sign, 1);
        if (d.num_trivalent() > 0) {
          auto flipped = canonicalize(shuffle(d, rng, true));
          EXPECT_EQ(flipped.code, k.code);
          EXPECT_EQ(flipped.sign, -1);
        }
      }
    }
}

TEST(Canonical, CircleRotation) {
  // Crossing chords on a circle, written with two different basepoints.
  Diagram a(Support::circle());
  for (int r = 0; r < 4; ++r) a.add_vertex(Vertex::skeleton(0, r));
  a.connect(0, 6);
  a.connect(3, 9);
  Diagram b = a;
  for (int v = 0; v < 4; ++v) b.vertex(v).rank = (a.vertex(v).rank + 1) % 4;
  EXPECT_EQ(canonicalize(a).code, canonicalize(b).code);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate(Support::circle(), 0).size(), 1u);
  EXPECT_EQ(enumerate(Support::circle(), 1).size(), 1u);
  EXPECT_EQ(enumerate(Support::circle(), 2, EnumerateOptions::chords()).size(), 2u);
  // Full closure restricted to chord diagrams agrees with direct matching.
  for (int n = 0; n <= 3; ++n) {
    size_t chords = 0;
    for (const auto& k : enumerate(Support::circle(), n))
      if (code_trivalent(k.code) == 0) ++chords;
    EXPECT_EQ(chords, enumerate(Support::circle(), n, EnumerateOptions::chords()).size());
  }
}

TEST(Enumerate, StableUnderRerun) {
  auto a = enumerate(Support::parse("I,I"), 2);
  auto b = enumerate(Support::parse("I,I"), 2);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].code, b[i].code);
}

TEST(Enumerate, CapExceeded) {
  EXPECT_THROW(enumerate(Support::circle(), 7), CapExceeded);
}

TEST(Enumerate, ClosedUnderRelabeling) {
  // Every relabeled member of a level canonicalizes back into the level.
  std::mt19937_64 rng(3);
  Support s = Support::colored({"x"});
  auto level = enumerate_codes(s, 3, EnumerateOptions::legs({3}));
  std::set<std::string> set(level.begin(), level.end());
  for (const auto& code : level) {
    Diagram d = decode_diagram(s, code);
    EXPECT_TRUE(set.count(canonicalize(shuffle(d, rng, false)).code));
  }
}

namespace {

// Every pairing of all half-edges for every vertex multiset; independent of
// the closure moves used by enumerate().
std::set<std::string> brute_force(const Support& s, int n) {
  std::set<std::string> out;
  for (int t = 0; t <= 2 * n; ++t) {
    int u = 2 * n - t;
    if ((3 * t + u) % 2) continue;
    // Legs: u skeleton legs on the first component (single-component supports).
    Diagram base(s);
    for (int i = 0; i < t; ++i) base.add_vertex(Vertex::trivalent());
    for (int r = 0; r < u; ++r) base.add_vertex(Vertex::skeleton(0, r));
    std::vector<HalfEdge> free;
    for (int v = 0; v < base.num_vertices(); ++v)
      for (int k = 0; k < base.vertex(v).valence(); ++k) free.push_back(half_edge(v, k));
    auto rec = [&](auto&& self, Diagram& d, std::vector<HalfEdge>& f) -> void {
      if (f.empty()) {
        if (!d.violation()) out.insert(canonicalize(d).code);
        return;
      }
      HalfEdge a = f.back();
      f.pop_back();
      for (size_t i = 0; i < f.size(); ++i) {
        HalfEdge b = f[i];
        f.erase(f.begin() + static_cast<long>(i));
        d.connect(a, b);
        self(self, d, f);
        d.disconnect(a);
        f.insert(f.begin() + static_cast<long>(i), b);
      }
      f.push_back(a);
    };
    rec(rec, base, free);
  }
  return out;
}

}  // namespace

TEST(Enumerate, MatchesBruteForce) {
  for (const Support& s : {Support::circle(), Support::interval()})
    for (int n = 0; n <= (s == Support::circle() ? 3 : 2); ++n) {
      auto level = enumerate_codes(s, n);
      EXPECT_EQ(std::set<std::string>(level.begin(), level.end()), brute_force(s, n)) << s.to_string() << " " << n;
    }
}
