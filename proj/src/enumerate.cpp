#include "jacobi/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

struct Spot {
  bool color;
  int index;  // component or color
  int rank;   // insertion rank on the component
};

std::vector<Spot> leg_spots(const Diagram& d, const std::vector<int>& color_max) {
  std::vector<Spot> out;
  const Support& s = d.support();
  for (int c = 0; c < s.num_components(); ++c) {
    int k = d.num_legs_on(c);
    // On a circle the slot after the last leg is the slot before the first one.
    int last = (s.components[c] == ComponentKind::Circle && k > 0) ? k - 1 : k;
    for (int r = 0; r <= last; ++r) out.push_back({false, c, r});
  }
  for (int c = 0; c < s.num_colors(); ++c) {
    int bound = c < static_cast<int>(color_max.size()) ? color_max[c] : -1;
    if (bound >= 0 && static_cast<int>(d.legs_of_color(c).size()) >= bound) continue;
    out.push_back({true, c, 0});
  }
  return out;
}

int place_leg(Diagram& d, const Spot& s) {
  return s.color ? d.add_vertex(Vertex::colored(s.index)) : d.insert_leg(s.index, s.rank);
}

// Splits the edge through h with a new trivalent vertex; slot 2 stays free.
int subdivide(Diagram& d, HalfEdge h) {
  HalfEdge m = d.mate(h);
  int t = d.add_vertex(Vertex::trivalent());
  d.connect(h, half_edge(t, 0));
  d.connect(m, half_edge(t, 1));
  return t;
}

void grow(const Diagram& d, const std::vector<int>& color_max, std::set<std::string>& out) {
  auto emit = [&](const Diagram& g) { out.insert(canonicalize(g).code); };

  // Strut.
  for (const Spot& s1 : leg_spots(d, color_max)) {
    Diagram g1 = d;
    int a = place_leg(g1, s1);
    for (const Spot& s2 : leg_spots(g1, color_max)) {
      Diagram g2 = g1;
      int b = place_leg(g2, s2);
      g2.connect(half_edge(a, 0), half_edge(b, 0));
      emit(g2);
    }
  }
  // Tadpole component.
  for (const Spot& s : leg_spots(d, color_max)) {
    Diagram g = d;
    int a = place_leg(g, s);
    int t = g.add_vertex(Vertex::trivalent());
    g.connect(half_edge(t, 1), half_edge(t, 2));
    g.connect(half_edge(a, 0), half_edge(t, 0));
    emit(g);
  }
  for (HalfEdge e : d.edges()) {
    // New leaf hanging from the edge.
    for (const Spot& s : leg_spots(d, color_max)) {
      Diagram g = d;
      int t = subdivide(g, e);
      int a = place_leg(g, s);
      g.connect(half_edge(t, 2), half_edge(a, 0));
      emit(g);
    }
    // Tadpole head on the edge.
    {
      Diagram g = d;
      int t = subdivide(g, e);
      int u = g.add_vertex(Vertex::trivalent());
      g.connect(half_edge(u, 1), half_edge(u, 2));
      g.connect(half_edge(t, 2), half_edge(u, 0));
      emit(g);
    }
    // Bridge between two edge points, possibly on the same edge.
    Diagram g1 = d;
    int t1 = subdivide(g1, e);
    for (HalfEdge e2 : g1.edges()) {
      Diagram g2 = g1;
      int t2 = subdivide(g2, e2);
      g2.connect(half_edge(t1, 2), half_edge(t2, 2));
      emit(g2);
    }
  }
}

using Level = std::vector<std::string>;

struct CacheKey {
  Support support;
  std::vector<int> color_max;
  bool operator<(const CacheKey& o) const {
    return std::tie(support, color_max) < std::tie(o.support, o.color_max);
  }
};

std::mutex g_mutex;
std::map<CacheKey, std::vector<Level>> g_levels;

Level closure_level(const Support& support, int degree, const std::vector<int>& color_max) {
  std::lock_guard lock(g_mutex);
  auto& levels = g_levels[CacheKey{support, color_max}];
  if (levels.empty()) levels.push_back({canonicalize(Diagram(support)).code});
  while (static_cast<int>(levels.size()) <= degree) {
    std::set<std::string> next;
    for (const auto& code : levels.back()) grow(decode_diagram(support, code), color_max, next);
    levels.emplace_back(next.begin(), next.end());
  }
  return levels[degree];
}

// Pairs the free legs of d in every possible way.
void matchings(Diagram& d, std::vector<int>& free_legs, std::set<std::string>& out) {
  if (free_legs.empty()) {
    out.insert(canonicalize(d).code);
    return;
  }
  int a = free_legs.back();
  free_legs.pop_back();
  for (size_t i = 0; i < free_legs.size(); ++i) {
    int b = free_legs[i];
    free_legs.erase(free_legs.begin() + static_cast<long>(i));
    d.connect(half_edge(a, 0), half_edge(b, 0));
    matchings(d, free_legs, out);
    d.disconnect(half_edge(a, 0));
    free_legs.insert(free_legs.begin() + static_cast<long>(i), b);
  }
  free_legs.push_back(a);
}

void chord_codes(const Support& s, int degree, const std::vector<int>& color_max, std::set<std::string>& out) {
  const int slots = s.num_components() + s.num_colors();
  std::vector<int> counts(slots, 0);
  // Distribute 2n legs over components and colors.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == slots - 1 || slots == 0) {
      if (slots == 0) {
        if (left == 0) out.insert(canonicalize(Diagram(s)).code);
        return;
      }
      counts[i] = left;
      int ci = i - s.num_components();
      if (ci >= 0 && ci < static_cast<int>(color_max.size()) && color_max[ci] >= 0 && left > color_max[ci]) return;
      Diagram d(s);
      std::vector<int> legs;
      for (int c = 0; c < s.num_components(); ++c)
        for (int r = 0; r < counts[c]; ++r) legs.push_back(d.add_vertex(Vertex::skeleton(c, r)));
      for (int c = 0; c < s.num_colors(); ++c)
        for (int r = 0; r < counts[s.num_components() + c]; ++r) legs.push_back(d.add_vertex(Vertex::colored(c)));
      matchings(d, legs, out);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      int ci = i - s.num_components();
      if (ci >= 0 && ci < static_cast<int>(color_max.size()) && color_max[ci] >= 0 && k > color_max[ci]) break;
      counts[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, 2 * degree);
}

}  // namespace

std::vector<std::string> enumerate_codes(const Support& support, int degree, const EnumerateOptions& opts) {
  if (degree < 0) throw DomainError("negative degree");
  if (degree > opts.cap)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds the enumeration cap " + std::to_string(opts.cap));
  support.check();
  if (opts.chord_only) {
    std::set<std::string> out;
    chord_codes(support, degree, opts.color_max, out);
    return {out.begin(), out.end()};
  }
  return closure_level(support, degree, opts.color_max);
}

std::vector<Canonical> enumerate(const Support& support, int degree, const EnumerateOptions& opts) {
  std::vector<Canonical> out;
  for (const auto& code : enumerate_codes(support, degree, opts)) {
    Diagram d = decode_diagram(support, code);
    Canonical k = canonicalize(d);
    if (k.zero()) continue;
    if (opts.filter && !opts.filter(d)) continue;
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace jacobi
