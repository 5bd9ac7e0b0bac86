#include "jacobi/relations.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

Diagram two_legs_in_place_of(const Diagram& d, int leg, int w, HalfEdge first_far, HalfEdge second_far) {
  Diagram g = d;
  const Vertex& lv = d.vertex(leg);
  for (int s = 0; s < 3; ++s) g.disconnect(half_edge(w, s));
  int second = g.insert_leg(lv.component, lv.rank + 1);
  g.connect(half_edge(leg, 0), first_far);
  g.connect(half_edge(second, 0), second_far);
  g.remove_vertices({w});
  return g;
}

// Rebuilds d with every half-edge x renamed to p(x).
template <class Perm>
Diagram relabel_half_edges(const Diagram& d, Perm p) {
  Diagram g(d.support());
  for (const auto& vx : d.vertices()) g.add_vertex(vx);
  for (HalfEdge h : d.edges()) g.connect(p(h), p(d.mate(h)));
  return g;
}

}  // namespace

Combination stu_expand(const Diagram& d, int leg) {
  const Vertex& lv = d.vertex(leg);
  if (lv.kind != VertexKind::Skeleton) throw DomainError("STU needs a skeleton leg");
  HalfEdge stem = d.mate(half_edge(leg, 0));
  int w = vertex_of(stem);
  if (d.vertex(w).univalent()) throw DomainError("STU needs a leg attached to a trivalent vertex");
  int s0 = slot_of(stem);
  HalfEdge ha = half_edge(w, (s0 + 1) % 3);
  HalfEdge hb = half_edge(w, (s0 + 2) % 3);
  Combination out(d.support());
  if (d.mate(ha) == hb) return out;
  HalfEdge xa = d.mate(ha);
  HalfEdge xb = d.mate(hb);
  out.add(two_legs_in_place_of(d, leg, w, xb, xa), 1);
  out.add(two_legs_in_place_of(d, leg, w, xa, xb), -1);
  return out;
}

Combination stu_relation(const Diagram& d, int leg) {
  Combination r = Combination::of(d);
  r -= stu_expand(d, leg);
  return r;
}

Combination ihx_relation(const Diagram& d, HalfEdge h) {
  int u = vertex_of(h);
  int w = d.neighbor(h);
  if (u == w || d.vertex(u).univalent() || d.vertex(w).univalent())
    throw DomainError("IHX needs an edge between two distinct trivalent vertices");
  int e = slot_of(h);
  int e2 = slot_of(d.mate(h));
  HalfEdge hc = half_edge(u, (e + 1) % 3);
  HalfEdge ha = half_edge(w, (e2 + 1) % 3);
  HalfEdge hb = half_edge(w, (e2 + 2) % 3);
  auto cycle = [&](HalfEdge x_to_c, HalfEdge x_to_a, HalfEdge x_to_b) {
    return [=](HalfEdge x) {
      if (x == x_to_c) return hc;
      if (x == x_to_a) return ha;
      if (x == x_to_b) return hb;
      return x;
    };
  };
  Combination r = Combination::of(d);
  r.add(relabel_half_edges(d, cycle(hb, hc, ha)), 1);
  r.add(relabel_half_edges(d, cycle(ha, hb, hc)), 1);
  return r;
}

std::vector<Combination> four_t_relations(const Support& support, int degree) {
  std::vector<Combination> out;
  if (degree < 2) return out;
  if (support.has_colors()) throw DomainError("4T relations need a skeleton-only support");
  for (const auto& code : enumerate_codes(support, degree - 1, EnumerateOptions::chords())) {
    Diagram c = decode_diagram(support, code);
    for (HalfEdge h : c.edges()) {
      int x = vertex_of(h);
      int y = c.neighbor(h);
      for (int comp = 0; comp < support.num_components(); ++comp) {
        int k = c.num_legs_on(comp);
        int last = (support.components[comp] == ComponentKind::Circle && k > 0) ? k - 1 : k;
        for (int gap = 0; gap <= last; ++gap) {
          Diagram t = c;
          t.disconnect(h);
          int z = t.insert_leg(comp, gap);
          int w = t.add_vertex(Vertex::trivalent());
          t.connect(half_edge(w, 0), half_edge(x, 0));
          t.connect(half_edge(w, 1), half_edge(y, 0));
          t.connect(half_edge(w, 2), half_edge(z, 0));
          Combination ex = stu_expand(t, x);
          Combination r1 = ex - stu_expand(t, y);
          Combination r2 = ex - stu_expand(t, z);
          if (!r1.empty()) out.push_back(std::move(r1));
          if (!r2.empty()) out.push_back(std::move(r2));
        }
      }
    }
  }
  return out;
}

std::vector<Combination> generate_relations(RelationKind kind, const Support& support, int degree,
                                            const EnumerateOptions& opts) {
  if (kind == RelationKind::FourT) return four_t_relations(support, degree);
  if (kind == RelationKind::Slide) throw DomainError("slide relations need a slide spec");
  std::vector<Combination> out;
  for (const auto& code : enumerate_codes(support, degree, opts)) {
    Diagram d = decode_diagram(support, code);
    if (kind == RelationKind::STU) {
      for (int v = 0; v < d.num_vertices(); ++v) {
        if (d.vertex(v).kind != VertexKind::Skeleton) continue;
        if (d.vertex(d.neighbor(half_edge(v, 0))).univalent()) continue;
        Combination r = stu_relation(d, v);
        if (!r.empty()) out.push_back(std::move(r));
      }
    } else {
      for (HalfEdge h : d.edges()) {
        int u = vertex_of(h), w = d.neighbor(h);
        if (u == w || d.vertex(u).univalent() || d.vertex(w).univalent()) continue;
        Combination r = ihx_relation(d, h);
        if (!r.empty()) out.push_back(std::move(r));
      }
    }
  }
  return out;
}

Combination slide_relation(const SlideSpec& spec) {
  const Diagram& g1 = spec.gamma1;
  g1.validate();
  const int n = g1.num_vertices();
  const int v = spec.v;
  if (v < 0 || v >= n) throw DomainError("slide: v out of range");
  if (spec.beta < 0 || vertex_of(spec.beta) != v || slot_of(spec.beta) >= g1.vertex(v).valence())
    throw DomainError("slide: beta is not a half-edge of v");
  std::set<int> inside1(spec.inside.begin(), spec.inside.end());
  if (inside1.count(v)) throw DomainError("slide: v lies on the annulus, not inside the region");
  HalfEdge z1 = g1.mate(spec.beta);
  if (vertex_of(z1) == v) throw DomainError("slide: beta is a loop");
  if (inside1.count(vertex_of(z1))) throw DomainError("slide: beta must come from outside the region");

  // gamma0: gamma1 without v, beta left open at z.
  Diagram g0 = g1;
  const Vertex vv = g1.vertex(v);
  HalfEdge m1 = -1, m2 = -1;
  if (!vv.univalent()) {
    std::vector<HalfEdge> rest;
    for (int s = 0; s < 3; ++s)
      if (half_edge(v, s) != spec.beta) rest.push_back(g1.mate(half_edge(v, s)));
    if (vertex_of(rest[0]) == v) throw DomainError("slide: alpha_1 is a loop at v");
    m1 = rest[0];
    m2 = rest[1];
  }
  for (int s = 0; s < vv.valence(); ++s) g0.disconnect(half_edge(v, s));
  if (m1 >= 0) g0.connect(m1, m2);
  g0.remove_vertices({v});
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  auto shift_h = [&](HalfEdge h) { return half_edge(shift(vertex_of(h)), slot_of(h)); };
  HalfEdge z = shift_h(z1);
  std::set<int> inside;
  for (int x : inside1) {
    if (x < 0 || x >= n) throw DomainError("slide: inside vertex out of range");
    inside.insert(shift(x));
  }

  // The region may not contain colored legs, and its skeleton legs are
  // exactly the listed segments.
  std::set<int> seg_legs;
  for (const auto& seg : spec.segments) {
    if (seg.component < 0 || seg.component >= g0.support().num_components())
      throw DomainError("slide: segment on an unknown component");
    auto legs = g0.legs_on(seg.component);
    int b = seg.begin, e = seg.end;
    if (seg.whole) {
      if (g0.support().components[seg.component] != ComponentKind::Circle)
        throw DomainError("slide: only a circle can lie entirely inside the region");
      b = 0;
      e = static_cast<int>(legs.size());
    }
    if (b < 0 || b > e || e > static_cast<int>(legs.size())) throw DomainError("slide: bad segment range");
    for (int r = b; r < e; ++r) seg_legs.insert(legs[r]);
  }
  for (int x : inside) {
    const Vertex& vx = g0.vertex(x);
    if (vx.kind == VertexKind::Color) throw DomainError("slide: the region contains a colored leg");
    if (vx.kind == VertexKind::Skeleton && !seg_legs.count(x))
      throw DomainError("slide: skeleton leg inside the region outside every segment");
  }
  for (int x : seg_legs)
    if (!inside.count(x)) throw DomainError("slide: segment leg missing from the region");

  struct Term {
    Diagram d;
    int coeff;
  };
  std::vector<Term> terms;
  int alpha1 = -1;
  for (HalfEdge h : g0.edges()) {
    HalfEdge m = g0.mate(h);
    bool hin = inside.count(vertex_of(h)) > 0;
    bool min = inside.count(vertex_of(m)) > 0;
    if (hin == min) continue;
    HalfEdge out_end = hin ? m : h;
    HalfEdge in_end = hin ? h : m;
    Diagram g = g0;
    g.disconnect(h);
    int t = g.add_vertex(Vertex::trivalent());
    g.connect(half_edge(t, 0), out_end);
    g.connect(half_edge(t, 1), z);
    g.connect(half_edge(t, 2), in_end);
    if (m1 >= 0) {
      HalfEdge a = shift_h(m1), b = shift_h(m2);
      if ((h == a && m == b) || (h == b && m == a)) alpha1 = static_cast<int>(terms.size());
    }
    terms.push_back({std::move(g), 1});
  }
  for (const auto& seg : spec.segments) {
    if (seg.whole) continue;
    for (int side = 0; side < 2; ++side) {
      int rank = side == 0 ? seg.begin : seg.end;
      Diagram g = g0;
      int leg = g.insert_leg(seg.component, rank);
      g.connect(half_edge(leg, 0), z);
      if (vv.kind == VertexKind::Skeleton && vv.component == seg.component && vv.rank == rank)
        alpha1 = static_cast<int>(terms.size());
      terms.push_back({std::move(g), side == 0 ? -1 : 1});
    }
  }
  if (alpha1 < 0) throw DomainError("slide: v is not on an arc crossing the annulus");

  Canonical given = canonicalize(g1);
  Canonical own = canonicalize(terms[alpha1].d);
  if (own.code != given.code) throw Error("slide: internal mismatch rebuilding gamma1");
  int norm = terms[alpha1].coeff * (own.sign == 0 ? 1 : own.sign) * (given.sign == 0 ? 1 : given.sign);

  Combination out(g1.support());
  for (auto& t : terms) out.add(t.d, t.coeff * norm);
  return out;
}

namespace {

std::mutex g_chord_mutex;
std::map<std::pair<Support, std::string>, Combination> g_chord_memo;

Combination chordify_canonical(const Support& s, const std::string& code) {
  {
    std::lock_guard lock(g_chord_mutex);
    auto it = g_chord_memo.find({s, code});
    if (it != g_chord_memo.end()) return it->second;
  }
  Diagram d = decode_diagram(s, code);
  Combination out(s);
  if (d.is_chord_diagram()) {
    out.add_code(code, 1);
  } else {
    int best = -1;
    for (int v = 0; v < d.num_vertices(); ++v) {
      const Vertex& vx = d.vertex(v);
      if (vx.kind != VertexKind::Skeleton || d.vertex(d.neighbor(half_edge(v, 0))).univalent()) continue;
      if (best < 0 || std::pair(vx.component, vx.rank) < std::pair(d.vertex(best).component, d.vertex(best).rank))
        best = v;
    }
    if (best < 0) throw Error("chordify: no skeleton leg next to a trivalent vertex");
    const Combination expanded = stu_expand(d, best);
    for (const auto& [c, q] : expanded.terms()) out.add(chordify_canonical(s, c), q);
  }
  std::lock_guard lock(g_chord_mutex);
  g_chord_memo.emplace(std::pair(s, code), out);
  return out;
}

}  // namespace

Combination chordify(const Diagram& d) {
  if (d.support().has_colors() && d.num_vertices() > 0)
    for (const auto& vx : d.vertices())
      if (vx.kind == VertexKind::Color) throw DomainError("chordify: diagram has colored legs");
  Canonical k = canonicalize(d);
  Combination out(d.support());
  if (k.zero()) return out;
  out.add(chordify_canonical(d.support(), k.code), k.sign);
  return out;
}

Combination chordify(const Combination& x) {
  Combination out(x.support());
  for (const auto& [code, q] : x.terms()) {
    Diagram d = decode_diagram(x.support(), code);
    for (const auto& vx : d.vertices())
      if (vx.kind == VertexKind::Color) throw DomainError("chordify: diagram has colored legs");
    out.add(chordify_canonical(x.support(), code), q);
  }
  return out;
}

}  // namespace jacobi
