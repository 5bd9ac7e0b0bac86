#include "jacobi/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

#include "jacobi/error.hpp"

namespace jacobi {

int Diagram::add_vertex(const Vertex& v) {
  vertices_.push_back(v);
  mate_.insert(mate_.end(), 3, -1);
  return num_vertices() - 1;
}

int Diagram::insert_leg(int component, int rank) {
  for (auto& v : vertices_)
    if (v.kind == VertexKind::Skeleton && v.component == component && v.rank >= rank) ++v.rank;
  return add_vertex(Vertex::skeleton(component, rank));
}

void Diagram::connect(HalfEdge a, HalfEdge b) {
  mate_[a] = b;
  mate_[b] = a;
}

void Diagram::disconnect(HalfEdge h) {
  HalfEdge m = mate_[h];
  mate_[h] = -1;
  if (m >= 0) mate_[m] = -1;
}

void Diagram::remove_vertices(std::vector<int> doomed) {
  std::sort(doomed.begin(), doomed.end());
  doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
  std::vector<int> remap(vertices_.size(), -1);
  int next = 0;
  for (int v = 0; v < num_vertices(); ++v)
    if (!std::binary_search(doomed.begin(), doomed.end(), v)) remap[v] = next++;

  std::vector<Vertex> vs;
  std::vector<HalfEdge> ms(3 * next, -1);
  vs.reserve(next);
  for (int v = 0; v < num_vertices(); ++v) {
    if (remap[v] < 0) continue;
    vs.push_back(vertices_[v]);
    for (int s = 0; s < 3; ++s) {
      HalfEdge m = mate_[half_edge(v, s)];
      if (m < 0 || remap[vertex_of(m)] < 0) continue;
      ms[half_edge(remap[v], s)] = half_edge(remap[vertex_of(m)], slot_of(m));
    }
  }
  vertices_ = std::move(vs);
  mate_ = std::move(ms);

  // Close rank gaps left by removed legs.
  for (int c = 0; c < support_.num_components(); ++c) {
    auto legs = legs_on(c);
    for (int r = 0; r < static_cast<int>(legs.size()); ++r) vertices_[legs[r]].rank = r;
  }
}

int Diagram::num_trivalent() const {
  return static_cast<int>(
      std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return !v.univalent(); }));
}

int Diagram::num_univalent() const { return num_vertices() - num_trivalent(); }

int Diagram::num_edges() const { return (3 * num_trivalent() + num_univalent()) / 2; }

int Diagram::degree() const {
  if (num_vertices() % 2 != 0) throw DomainError("diagram has an odd number of vertices");
  return num_vertices() / 2;
}

std::vector<int> Diagram::legs_on(int component) const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v].kind == VertexKind::Skeleton && vertices_[v].component == component) out.push_back(v);
  std::sort(out.begin(), out.end(), [&](int a, int b) { return vertices_[a].rank < vertices_[b].rank; });
  return out;
}

int Diagram::num_legs_on(int component) const {
  return static_cast<int>(std::count_if(vertices_.begin(), vertices_.end(), [&](const Vertex& v) {
    return v.kind == VertexKind::Skeleton && v.component == component;
  }));
}

std::vector<int> Diagram::legs_of_color(int color) const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (vertices_[v].kind == VertexKind::Color && vertices_[v].color == color) out.push_back(v);
  return out;
}

std::vector<HalfEdge> Diagram::edges() const {
  std::vector<HalfEdge> out;
  for (HalfEdge h = 0; h < static_cast<HalfEdge>(mate_.size()); ++h)
    if (mate_[h] > h) out.push_back(h);
  return out;
}

std::vector<std::vector<int>> Diagram::dashed_components() const {
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (HalfEdge h = 0; h < static_cast<HalfEdge>(mate_.size()); ++h)
    if (mate_[h] >= 0) parent[find(vertex_of(h))] = find(vertex_of(mate_[h]));
  std::vector<std::vector<int>> groups;
  std::vector<int> index(vertices_.size(), -1);
  for (int v = 0; v < num_vertices(); ++v) {
    int r = find(v);
    if (index[r] < 0) {
      index[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[index[r]].push_back(v);
  }
  return groups;
}

std::optional<std::string> Diagram::violation() const {
  const int n = num_vertices();
  if (static_cast<int>(mate_.size()) != 3 * n) return "malformed pairing: half-edge table size";
  for (int v = 0; v < n; ++v) {
    const auto& vx = vertices_[v];
    switch (vx.kind) {
      case VertexKind::Skeleton:
        if (vx.component < 0 || vx.component >= support_.num_components())
          return "bad component index on v" + std::to_string(v);
        break;
      case VertexKind::Color:
        if (vx.color < 0 || vx.color >= support_.num_colors()) return "bad color on v" + std::to_string(v);
        break;
      case VertexKind::Trivalent:
        break;
    }
    for (int s = 0; s < 3; ++s) {
      HalfEdge h = half_edge(v, s);
      HalfEdge m = mate_[h];
      if (s >= vx.valence()) {
        if (m != -1) return "malformed pairing: unused slot v" + std::to_string(v) + "." + std::to_string(s);
        continue;
      }
      if (m < 0) return "malformed pairing: unpaired slot v" + std::to_string(v) + "." + std::to_string(s);
      if (m >= 3 * n || m == h || mate_[m] != h || slot_of(m) >= vertices_[vertex_of(m)].valence())
        return "malformed pairing at v" + std::to_string(v) + "." + std::to_string(s);
    }
  }
  for (int c = 0; c < support_.num_components(); ++c) {
    std::vector<int> ranks;
    for (const auto& vx : vertices_)
      if (vx.kind == VertexKind::Skeleton && vx.component == c) ranks.push_back(vx.rank);
    std::sort(ranks.begin(), ranks.end());
    for (int r = 0; r < static_cast<int>(ranks.size()); ++r)
      if (ranks[r] != r) return "bad ranks on component " + std::to_string(c);
  }
  for (const auto& comp : dashed_components()) {
    bool has_leg = std::any_of(comp.begin(), comp.end(), [&](int v) { return vertices_[v].univalent(); });
    if (!has_leg) return "closed dashed component";
  }
  return std::nullopt;
}

void Diagram::validate() const {
  if (auto why = violation()) throw DomainError("invalid diagram: " + *why);
}

// ---------------------------------------------------------------------------
// Text grammar

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "support:";
  for (int c = 0; c < d.support().num_components(); ++c)
    out << (c == 0 ? " " : ", ") << (d.support().components[c] == ComponentKind::Interval ? "I" : "S1");
  out << "\ncolors: [";
  for (int c = 0; c < d.support().num_colors(); ++c) out << (c ? "," : "") << d.support().colors[c];
  out << "]\n";
  for (int v = 0; v < d.num_vertices(); ++v) {
    const auto& vx = d.vertex(v);
    out << 'v' << v << ": ";
    switch (vx.kind) {
      case VertexKind::Trivalent:
        out << "T";
        break;
      case VertexKind::Skeleton:
        out << "U M " << vx.component << ' ' << vx.rank;
        break;
      case VertexKind::Color:
        out << "U X " << d.support().colors[vx.color];
        break;
    }
    out << '\n';
  }
  for (HalfEdge h : d.edges()) {
    HalfEdge m = d.mate(h);
    out << "e: (v" << vertex_of(h) << '.' << slot_of(h) << ", v" << vertex_of(m) << '.' << slot_of(m) << ")\n";
  }
  return out.str();
}

namespace {

struct Cursor {
  std::string_view line;
  size_t pos = 0;
  int line_no = 1;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_no, static_cast<int>(pos) + 1); }

  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= line.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < line.size() && line[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || value < 0) fail("expected a non-negative integer");
    pos = static_cast<size_t>(ptr - line.data());
    return value;
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != ',' && line[pos] != ']' &&
           line[pos] != ')')
      ++pos;
    if (pos == start) fail("expected a token");
    return std::string(line.substr(start, pos - start));
  }
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::pair<int, std::string>> split_blocks(std::string_view text) {
  std::vector<std::pair<int, std::string>> blocks;
  std::string current;
  int first = 0;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    ++line_no;
    auto s = strip(line);
    if (s.empty()) {
      if (!current.empty()) blocks.emplace_back(first, std::move(current));
      current.clear();
    } else if (s.front() != '#') {
      if (current.empty()) first = line_no;
      current.append(line);
      current.push_back('\n');
    } else if (!current.empty()) {
      current.append("\n");  // keep line numbering stable inside the block
    }
    pos = nl + 1;
  }
  if (!current.empty()) blocks.emplace_back(first, std::move(current));
  return blocks;
}

Diagram parse_diagram(std::string_view text) {
  Support support;
  bool have_support = false;
  bool have_colors = false;
  std::vector<std::pair<int, Vertex>> vertices;
  std::vector<std::tuple<int, int, int, int, int>> edges;  // line, v1, s1, v2, s2
  std::vector<std::pair<int, std::string>> color_names;    // vertex index, label (resolved later)

  int line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    Cursor cur{strip(text.substr(pos, nl - pos)), 0, ++line_no};
    pos = nl + 1;
    if (cur.line.empty() || cur.line.front() == '#') continue;

    size_t colon = cur.line.find(':');
    if (colon == std::string_view::npos) cur.fail("expected 'key:'");
    auto key = strip(cur.line.substr(0, colon));
    cur.pos = colon + 1;

    if (key == "support") {
      if (have_support) cur.fail("duplicate support line");
      have_support = true;
      if (cur.at_end()) continue;
      do {
        auto w = cur.word();
        if (w == "I")
          support.components.push_back(ComponentKind::Interval);
        else if (w == "S1")
          support.components.push_back(ComponentKind::Circle);
        else
          cur.fail("unknown component '" + w + "'");
      } while (cur.accept(','));
      if (!cur.at_end()) cur.fail("trailing characters");
    } else if (key == "colors") {
      if (have_colors) cur.fail("duplicate colors line");
      have_colors = true;
      cur.expect('[');
      if (!cur.accept(']')) {
        do support.colors.push_back(cur.word());
        while (cur.accept(','));
        cur.expect(']');
      }
      if (!cur.at_end()) cur.fail("trailing characters");
    } else if (key == "e") {
      cur.expect('(');
      cur.expect('v');
      int v1 = cur.integer();
      cur.expect('.');
      int s1 = cur.integer();
      cur.expect(',');
      cur.expect('v');
      int v2 = cur.integer();
      cur.expect('.');
      int s2 = cur.integer();
      cur.expect(')');
      if (!cur.at_end()) cur.fail("trailing characters");
      if (s1 > 2 || s2 > 2) cur.fail("slot out of range 0-2");
      edges.emplace_back(cur.line_no, v1, s1, v2, s2);
    } else if (key.size() > 1 && key.front() == 'v') {
      Cursor idx{key.substr(1), 0, cur.line_no};
      int v = idx.integer();
      if (!idx.at_end()) cur.fail("malformed vertex name");
      if (v != static_cast<int>(vertices.size())) cur.fail("vertices must be listed in index order");
      auto kind = cur.word();
      Vertex vx;
      if (kind == "T") {
        vx = Vertex::trivalent();
      } else if (kind == "U") {
        auto where = cur.word();
        if (where == "M") {
          int c = cur.integer();
          int r = cur.integer();
          vx = Vertex::skeleton(c, r);
        } else if (where == "X") {
          vx = Vertex::colored(-1);
          color_names.emplace_back(v, cur.word());
        } else {
          cur.fail("expected M or X");
        }
      } else {
        cur.fail("expected T or U");
      }
      if (!cur.at_end()) cur.fail("trailing characters");
      vertices.emplace_back(cur.line_no, vx);
    } else {
      cur.fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_support) throw ParseError("missing support line", line_no, 1);
  if (!have_colors) throw ParseError("missing colors line", line_no, 1);
  support.check();

  Diagram d(support);
  for (auto& [ln, vx] : vertices) d.add_vertex(vx);
  for (auto& [v, label] : color_names) {
    int c = support.color_index(label);
    if (c < 0) throw ParseError("unknown color '" + label + "'", vertices[v].first, 1);
    d.vertex(v).color = c;
  }
  for (auto& [ln, v1, s1, v2, s2] : edges) {
    if (v1 >= d.num_vertices() || v2 >= d.num_vertices()) throw ParseError("edge names an unknown vertex", ln, 1);
    HalfEdge a = half_edge(v1, s1);
    HalfEdge b = half_edge(v2, s2);
    if (d.mate(a) != -1 || d.mate(b) != -1 || a == b)
      throw ParseError("malformed pairing: slot paired more than once", ln, 1);
    d.connect(a, b);
  }
  d.validate();
  return d;
}

}  // namespace jacobi
