#include "jacobi/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

void check_component(const Support& s, int c) {
  if (c < 0 || c >= s.num_components()) throw DomainError("component " + std::to_string(c) + " not in support");
}

void check_color(const Support& s, int c) {
  if (c < 0 || c >= s.num_colors()) throw DomainError("color " + std::to_string(c) + " not in support");
}

// Applies f to a copy of every term, carrying its coefficient times the sign
// returned by f.
Combination transform(const Combination& x, const Support& target, const std::function<int(Diagram&)>& f) {
  Combination out(target);
  for (const auto& [code, q] : x.terms()) {
    Diagram d = decode_diagram(x.support(), code);
    int sign = f(d);
    if (sign == 0) continue;
    d.set_support(target);
    out.add(d, sign * q);
  }
  return out;
}

// Disjoint union; b's components and colors are renamed through the maps and
// its ranks on component c are shifted by offset[c].
Diagram disjoint_union(const Diagram& a, const Diagram& b, const Support& target, const std::vector<int>& comp_map,
                       const std::vector<int>& color_map, const std::vector<int>& rank_offset) {
  Diagram g = a;
  g.set_support(target);
  const int base = a.num_vertices();
  for (const auto& vx : b.vertices()) {
    Vertex w = vx;
    if (w.kind == VertexKind::Skeleton) {
      w.component = comp_map[vx.component];
      w.rank = vx.rank + rank_offset[w.component];
    } else if (w.kind == VertexKind::Color) {
      w.color = color_map[vx.color];
    }
    g.add_vertex(w);
  }
  for (HalfEdge h : b.edges()) {
    HalfEdge m = b.mate(h);
    g.connect(half_edge(base + vertex_of(h), slot_of(h)), half_edge(base + vertex_of(m), slot_of(m)));
  }
  return g;
}

}  // namespace

Combination chord(const Support& s, int c1, int c2) {
  check_component(s, c1);
  check_component(s, c2);
  Diagram d(s);
  int a = d.add_vertex(Vertex::skeleton(c1, 0));
  int b = d.add_vertex(Vertex::skeleton(c2, c1 == c2 ? 1 : 0));
  d.connect(half_edge(a, 0), half_edge(b, 0));
  return Combination::of(d);
}

Combination strut(const Support& s, int color1, int color2) {
  check_color(s, color1);
  check_color(s, color2);
  Diagram d(s);
  int a = d.add_vertex(Vertex::colored(color1));
  int b = d.add_vertex(Vertex::colored(color2));
  d.connect(half_edge(a, 0), half_edge(b, 0));
  return Combination::of(d);
}

Combination stack_product(const Combination& x, const Combination& y) {
  if (x.support() != y.support()) throw DomainError("stack product: support mismatch");
  const Support& s = x.support();
  std::vector<int> ident(s.num_components());
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<int> colors(s.num_colors());
  std::iota(colors.begin(), colors.end(), 0);
  Combination out(s);
  for (const auto& [cx, qx] : x.terms()) {
    Diagram a = decode_diagram(s, cx);
    std::vector<int> offset(s.num_components());
    for (int c = 0; c < s.num_components(); ++c) offset[c] = a.num_legs_on(c);
    for (const auto& [cy, qy] : y.terms())
      out.add(disjoint_union(a, decode_diagram(s, cy), s, ident, colors, offset), qx * qy);
  }
  return out;
}

Combination tensor_product(const Combination& x, const Combination& y) {
  const Support& sx = x.support();
  const Support& sy = y.support();
  Support s = sx;
  s.components.insert(s.components.end(), sy.components.begin(), sy.components.end());
  for (const auto& c : sy.colors) {
    if (sx.color_index(c) >= 0) throw DomainError("tensor product: color '" + c + "' on both sides");
    s.colors.push_back(c);
  }
  std::vector<int> comp_map(sy.num_components()), color_map(sy.num_colors());
  for (int i = 0; i < sy.num_components(); ++i) comp_map[i] = sx.num_components() + i;
  for (int i = 0; i < sy.num_colors(); ++i) color_map[i] = sx.num_colors() + i;
  std::vector<int> zero(s.num_components(), 0);
  Combination out(s);
  for (const auto& [cx, qx] : x.terms()) {
    Diagram a = decode_diagram(sx, cx);
    for (const auto& [cy, qy] : y.terms())
      out.add(disjoint_union(a, decode_diagram(sy, cy), s, comp_map, color_map, zero), qx * qy);
  }
  return out;
}

Combination insert_on_component(const Combination& x, const Combination& y, int c, bool reversed, int locus) {
  if (x.support() != Support::interval()) throw DomainError("insert: the inserted element must live on one interval");
  const Support& s = y.support();
  check_component(s, c);
  Combination out(s);
  for (const auto& [cy, qy] : y.terms()) {
    Diagram b = decode_diagram(s, cy);
    int m = b.num_legs_on(c);
    int at = locus < 0 ? m : locus;
    if (at > m) throw DomainError("insert: locus beyond the last leg");
    for (const auto& [cx, qx] : x.terms()) {
      Diagram a = decode_diagram(x.support(), cx);
      int k = a.num_legs_on(0);
      Diagram g = b;
      for (int v = 0; v < g.num_vertices(); ++v) {
        Vertex& w = g.vertex(v);
        if (w.kind == VertexKind::Skeleton && w.component == c && w.rank >= at) w.rank += k;
      }
      const int base = g.num_vertices();
      for (const auto& vx : a.vertices()) {
        Vertex w = vx;
        if (w.kind == VertexKind::Skeleton) {
          w.component = c;
          w.rank = at + (reversed ? k - 1 - vx.rank : vx.rank);
        }
        g.add_vertex(w);
      }
      for (HalfEdge h : a.edges()) {
        HalfEdge mm = a.mate(h);
        g.connect(half_edge(base + vertex_of(h), slot_of(h)), half_edge(base + vertex_of(mm), slot_of(mm)));
      }
      Rational sign = (reversed && k % 2) ? -1 : 1;
      out.add(g, sign * qx * qy);
    }
  }
  return out;
}

Combination delete_part(const Combination& x, Part p) {
  Support s = x.support();
  if (p.color) {
    check_color(s, p.index);
    s.colors.erase(s.colors.begin() + p.index);
  } else {
    check_component(s, p.index);
    s.components.erase(s.components.begin() + p.index);
  }
  return transform(x, s, [&](Diagram& d) {
    for (int v = 0; v < d.num_vertices(); ++v) {
      Vertex& w = d.vertex(v);
      if (p.color && w.kind == VertexKind::Color) {
        if (w.color == p.index) return 0;
        if (w.color > p.index) --w.color;
      } else if (!p.color && w.kind == VertexKind::Skeleton) {
        if (w.component == p.index) return 0;
        if (w.component > p.index) --w.component;
      }
    }
    return 1;
  });
}

Combination duplicate_part(const Combination& x, Part p, int r, const std::vector<std::string>& names) {
  if (r < 1) throw DomainError("duplicate: need at least one copy");
  Support s = x.support();
  const int shift = r - 1;
  if (p.color) {
    check_color(s, p.index);
    std::vector<std::string> copies = names;
    if (copies.empty())
      for (int j = 1; j <= r; ++j) copies.push_back(s.colors[p.index] + std::to_string(j));
    if (static_cast<int>(copies.size()) != r) throw DomainError("duplicate: wrong number of copy names");
    s.colors.erase(s.colors.begin() + p.index);
    s.colors.insert(s.colors.begin() + p.index, copies.begin(), copies.end());
    s.check();
  } else {
    check_component(s, p.index);
    ComponentKind k = s.components[p.index];
    s.components.insert(s.components.begin() + p.index, shift, k);
  }
  Combination out(s);
  for (const auto& [code, q] : x.terms()) {
    Diagram d = decode_diagram(x.support(), code);
    std::vector<int> legs;
    for (int v = 0; v < d.num_vertices(); ++v) {
      Vertex& w = d.vertex(v);
      if (p.color && w.kind == VertexKind::Color) {
        if (w.color == p.index) legs.push_back(v);
        else if (w.color > p.index) w.color += shift;
      } else if (!p.color && w.kind == VertexKind::Skeleton) {
        if (w.component == p.index) legs.push_back(v);
        else if (w.component > p.index) w.component += shift;
      }
    }
    if (!p.color)
      std::sort(legs.begin(), legs.end(), [&](int a, int b) { return d.vertex(a).rank < d.vertex(b).rank; });
    d.set_support(s);
    std::vector<int> assign(legs.size(), 0);
    for (;;) {
      Diagram g = d;
      std::vector<int> next_rank(r, 0);
      for (size_t i = 0; i < legs.size(); ++i) {
        Vertex& w = g.vertex(legs[i]);
        if (p.color) {
          w.color = p.index + assign[i];
        } else {
          w.component = p.index + assign[i];
          w.rank = next_rank[assign[i]]++;
        }
      }
      out.add(g, q);
      size_t i = 0;
      for (; i < assign.size(); ++i) {
        if (++assign[i] < r) break;
        assign[i] = 0;
      }
      if (i == assign.size()) break;
    }
  }
  return out;
}

Combination concatenate_components(const Combination& x, int first, int count) {
  Support s = x.support();
  if (count < 1 || first < 0 || first + count > s.num_components()) throw DomainError("concatenate: bad range");
  for (int c = first; c < first + count; ++c)
    if (s.components[c] != ComponentKind::Interval) throw DomainError("concatenate: only intervals can be joined");
  s.components.erase(s.components.begin() + first + 1, s.components.begin() + first + count);
  return transform(x, s, [&](Diagram& d) {
    std::vector<int> offset(count, 0);
    for (int j = 1; j < count; ++j) offset[j] = offset[j - 1] + d.num_legs_on(first + j - 1);
    for (int v = 0; v < d.num_vertices(); ++v) {
      Vertex& w = d.vertex(v);
      if (w.kind != VertexKind::Skeleton || w.component < first) continue;
      if (w.component < first + count) {
        w.rank += offset[w.component - first];
        w.component = first;
      } else {
        w.component -= count - 1;
      }
    }
    return 1;
  });
}

Combination permute_components(const Combination& x, const std::vector<int>& perm) {
  Support s = x.support();
  const int n = s.num_components();
  if (static_cast<int>(perm.size()) != n) throw DomainError("permute: wrong permutation size");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]++) throw DomainError("permute: not a permutation");
  }
  for (int i = 0; i < n; ++i) s.components[perm[i]] = x.support().components[i];
  return transform(x, s, [&](Diagram& d) {
    for (int v = 0; v < d.num_vertices(); ++v) {
      Vertex& w = d.vertex(v);
      if (w.kind == VertexKind::Skeleton) w.component = perm[w.component];
    }
    return 1;
  });
}

Combination reverse_component(const Combination& x, int c) {
  check_component(x.support(), c);
  return transform(x, x.support(), [&](Diagram& d) {
    int k = d.num_legs_on(c);
    for (int v = 0; v < d.num_vertices(); ++v) {
      Vertex& w = d.vertex(v);
      if (w.kind == VertexKind::Skeleton && w.component == c) w.rank = k - 1 - w.rank;
    }
    return k % 2 ? -1 : 1;
  });
}

Combination close_interval(const Combination& x, int c) {
  check_component(x.support(), c);
  if (x.support().components[c] != ComponentKind::Interval) throw DomainError("close: component is not an interval");
  Support s = x.support();
  s.components[c] = ComponentKind::Circle;
  return transform(x, s, [](Diagram&) { return 1; });
}

Combination open_circle(const Combination& x, int c) {
  check_component(x.support(), c);
  if (x.support().components[c] != ComponentKind::Circle) throw DomainError("open: component is not a circle");
  Support s = x.support();
  s.components[c] = ComponentKind::Interval;
  return transform(x, s, [](Diagram&) { return 1; });
}

Combination forget_colors(const Combination& x, const std::string& label) {
  Support s = x.support();
  s.colors = {label};
  return transform(x, s, [](Diagram& d) {
    for (int v = 0; v < d.num_vertices(); ++v)
      if (d.vertex(v).kind == VertexKind::Color) d.vertex(v).color = 0;
    return 1;
  });
}

Combination leg_swap(const Combination& x) {
  if (x.support().num_colors() != 2) throw DomainError("leg swap: support needs exactly two colors");
  return transform(x, x.support(), [](Diagram& d) {
    int legs = 0;
    for (int v = 0; v < d.num_vertices(); ++v) {
      Vertex& w = d.vertex(v);
      if (w.kind != VertexKind::Color) continue;
      w.color = 1 - w.color;
      ++legs;
    }
    if (legs != 2) throw DomainError("leg swap: a term does not have exactly two colored legs");
    return 1;
  });
}

Combination with_support(const Combination& x, const Support& s) {
  if (s.components != x.support().components || s.num_colors() != x.support().num_colors())
    throw DomainError("with_support: shape mismatch");
  s.check();
  return transform(x, s, [](Diagram&) { return 1; });
}

Combination pbw_symmetrize(const Combination& x, int color) {
  check_color(x.support(), color);
  Support s = x.support();
  s.colors.erase(s.colors.begin() + color);
  s.components.push_back(ComponentKind::Interval);
  const int target = s.num_components() - 1;
  Combination out(s);
  for (const auto& [code, q] : x.terms()) {
    Diagram d = decode_diagram(x.support(), code);
    std::vector<int> legs;
    for (int v = 0; v < d.num_vertices(); ++v) {
      Vertex& w = d.vertex(v);
      if (w.kind != VertexKind::Color) continue;
      if (w.color == color) legs.push_back(v);
      else if (w.color > color) --w.color;
    }
    d.set_support(s);
    Rational weight = q / Rational(factorial(static_cast<unsigned>(legs.size())));
    std::vector<int> order(legs.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      Diagram g = d;
      for (size_t i = 0; i < legs.size(); ++i) g.vertex(legs[i]) = Vertex::skeleton(target, order[i]);
      out.add(g, weight);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

BigInt pbw_factor(int k, int u) {
  BigInt f = 1;
  for (int j = k; j < u; ++j) f *= factorial(static_cast<unsigned>(j));
  return f;
}

namespace {

const Support& leg_support() {
  static const Support s = Support::colored({"x"});
  return s;
}

// Legs x (rank p) and y (rank p+1) merged into one leg at p through a new
// trivalent vertex with cyclic order (stem, y-side, x-side): this is
// D(x before y) - D(y before x) by STU.
void add_merge(const Diagram& d, int x, int y, Combination& acc, int sign) {
  HalfEdge fx = d.mate(half_edge(x, 0));
  HalfEdge fy = d.mate(half_edge(y, 0));
  if (vertex_of(fx) == y) return;
  Diagram g = d;
  g.disconnect(half_edge(x, 0));
  g.disconnect(half_edge(y, 0));
  int w = g.add_vertex(Vertex::trivalent());
  g.connect(half_edge(w, 0), half_edge(x, 0));
  g.connect(half_edge(w, 1), fy);
  g.connect(half_edge(w, 2), fx);
  g.remove_vertices({y});
  acc.add(g, sign);
}

using Projection = std::map<int, Combination>;

std::mutex g_pbw_mutex;
std::map<std::string, Projection> g_pbw_memo;

Projection project(const std::string& code) {
  {
    std::lock_guard lock(g_pbw_mutex);
    auto it = g_pbw_memo.find(code);
    if (it != g_pbw_memo.end()) return it->second;
  }
  const Support& I = Support::interval();
  Diagram g = decode_diagram(I, code);
  auto legs = g.legs_on(0);
  const int u = static_cast<int>(legs.size());

  Projection out;
  Diagram top = g;
  top.set_support(leg_support());
  for (int v : legs) top.vertex(v) = Vertex::colored(0);
  out.emplace(u, Combination::of(top));

  if (u > 1) {
    // Gamma - sigma.Gamma over coset representatives that keep the first leg
    // first, each telescoped through adjacent swaps.
    Combination acc(I);
    std::vector<int> rest(legs.begin() + 1, legs.end());
    std::sort(rest.begin(), rest.end());
    do {
      Diagram cur = g;
      std::vector<int> order = legs;  // vertex ids by position
      std::vector<int> target{legs[0]};
      target.insert(target.end(), rest.begin(), rest.end());
      for (int i = 0; i < u; ++i) {
        int j = static_cast<int>(std::find(order.begin(), order.end(), target[i]) - order.begin());
        for (; j > i; --j) {
          int x = order[j - 1], y = order[j];
          add_merge(cur, x, y, acc, 1);
          std::swap(cur.vertex(x).rank, cur.vertex(y).rank);
          std::swap(order[j - 1], order[j]);
        }
      }
    } while (std::next_permutation(rest.begin(), rest.end()));

    Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(u - 1)));
    for (const auto& [c, q] : acc.terms()) {
      for (const auto& [k, part] : project(c)) {
        auto it = out.try_emplace(k, leg_support()).first;
        it->second.add(part, q * scale);
      }
    }
  }
  std::lock_guard lock(g_pbw_mutex);
  g_pbw_memo.emplace(code, out);
  return out;
}

}  // namespace

LegProjection pbw_inverse(const Combination& x) {
  if (x.support() != Support::interval()) throw DomainError("pbw inverse: support must be a single interval");
  LegProjection r;
  for (const auto& [code, q] : x.terms()) {
    int u = decode_diagram(x.support(), code).num_legs_on(0);
    r.max_legs = std::max(r.max_legs, u);
    for (const auto& [k, part] : project(code)) {
      if (k > u && !part.empty()) r.vanish_above_u = false;
      auto it = r.pi.try_emplace(k, leg_support()).first;
      it->second.add(part, q);
    }
  }
  for (auto it = r.pi.begin(); it != r.pi.end();) it = it->second.empty() ? r.pi.erase(it) : std::next(it);
  return r;
}

Combination adams_operation(const Combination& x, int r) {
  if (x.support() != Support::interval()) throw DomainError("adams: support must be a single interval");
  if (r < 1) throw DomainError("adams: r must be positive");
  return concatenate_components(duplicate_part(x, Part::component(0), r), 0, r);
}

}  // namespace jacobi
