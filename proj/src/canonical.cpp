#include "jacobi/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

using Key = std::array<int, 3>;

class Search {
 public:
  Search(const Diagram& d, std::vector<Key> keys) : d_(d), keys_(std::move(keys)), n_(d.num_vertices()) {}

  void run(std::string& best, int& best_sign, bool& have) {
    best_ = &best;
    sign_ = &best_sign;
    have_ = &have;
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys_[a] < keys_[b]; });
    std::vector<int> cell(n_);
    for (int i = 0; i < n_; ++i)
      cell[order[i]] = (i > 0 && keys_[order[i]] == keys_[order[i - 1]]) ? cell[order[i - 1]] : i;
    refine(cell);
    descend(cell);
  }

 private:
  // Splits cells by the multiset of neighbour cells until stable. Cell ids are
  // the position of the cell's first vertex in the ordered partition.
  void refine(std::vector<int>& cell) const {
    std::vector<std::pair<std::array<int, 4>, int>> sig(n_);
    int cells = static_cast<int>(std::set<int>(cell.begin(), cell.end()).size());
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        std::array<int, 4> s{cell[v], -1, -1, -1};
        int val = d_.vertex(v).valence();
        for (int k = 0; k < val; ++k) s[1 + k] = cell[d_.neighbor(half_edge(v, k))];
        std::sort(s.begin() + 1, s.end());
        sig[v] = {s, v};
      }
      std::sort(sig.begin(), sig.end());
      int next_cells = 0;
      for (int i = 0; i < n_; ++i) {
        int v = sig[i].second;
        if (i > 0 && sig[i].first == sig[i - 1].first) {
          cell[v] = cell[sig[i - 1].second];
        } else {
          cell[v] = i;
          ++next_cells;
        }
      }
      if (next_cells == cells) return;
      cells = next_cells;
    }
  }

  void descend(const std::vector<int>& cell) {
    std::vector<int> size(n_, 0);
    for (int c : cell) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(cell);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (cell[v] != target) continue;
      std::vector<int> next = cell;
      for (int w = 0; w < n_; ++w)
        if (next[w] == target && w != v) next[w] = target + 1;
      refine(next);
      descend(next);
    }
  }

  void leaf(const std::vector<int>& label) {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[label[v]] = v;

    // New slot order at each vertex: by neighbour label, parallel edges kept
    // paired through the smaller original half-edge of each edge.
    std::vector<std::array<int, 3>> slot_pos(n_);
    int parity = 0;
    for (int v = 0; v < n_; ++v) {
      int val = d_.vertex(v).valence();
      std::array<int, 3> slots{0, 1, 2};
      auto key = [&](int s) {
        HalfEdge h = half_edge(v, s);
        return std::pair(label[d_.neighbor(h)], std::min(h, d_.mate(h)));
      };
      std::sort(slots.begin(), slots.begin() + val, [&](int a, int b) { return key(a) < key(b); });
      for (int i = 0; i < val; ++i) slot_pos[v][slots[i]] = i;
      if (val == 3) {
        // A permutation of three is odd exactly when it is a transposition.
        int fixed = (slots[0] == 0) + (slots[1] == 1) + (slots[2] == 2);
        if (fixed == 1) parity ^= 1;
      }
    }

    std::string code;
    code.reserve(2 + 6 * n_);
    code.push_back(static_cast<char>(d_.num_trivalent()));
    code.push_back(static_cast<char>(n_));
    for (int i = 0; i < n_; ++i) {
      const Key& k = keys_[order[i]];
      code.push_back(static_cast<char>(k[0]));
      code.push_back(static_cast<char>(k[1]));
      code.push_back(static_cast<char>(k[2]));
    }
    for (int i = 0; i < n_; ++i) {
      int v = order[i];
      int val = d_.vertex(v).valence();
      std::array<int, 3> out{255, 255, 255};
      for (int s = 0; s < val; ++s) {
        HalfEdge m = d_.mate(half_edge(v, s));
        out[slot_pos[v][s]] = 3 * label[vertex_of(m)] + slot_pos[vertex_of(m)][slot_of(m)];
      }
      for (int x : out) code.push_back(static_cast<char>(x));
    }

    int sign = parity ? -1 : 1;
    if (!*have_ || code < *best_) {
      *best_ = std::move(code);
      *sign_ = sign;
      *have_ = true;
    } else if (code == *best_ && *sign_ != sign) {
      *sign_ = 0;
    }
  }

  const Diagram& d_;
  std::vector<Key> keys_;
  int n_;
  std::string* best_ = nullptr;
  int* sign_ = nullptr;
  bool* have_ = nullptr;
};

}  // namespace

Canonical canonicalize(const Diagram& d) {
  const int n = d.num_vertices();
  if (3 * n > 255) throw CapExceeded("diagram too large to canonicalize");
  const Support& sup = d.support();

  std::vector<int> legs_count(sup.num_components());
  for (int c = 0; c < sup.num_components(); ++c) legs_count[c] = d.num_legs_on(c);

  // Odometer over the basepoint of every circle.
  std::vector<int> rot(sup.num_components(), 0);
  std::string best;
  int sign = 1;
  bool have = false;
  for (;;) {
    std::vector<Key> keys(n);
    for (int v = 0; v < n; ++v) {
      const Vertex& vx = d.vertex(v);
      switch (vx.kind) {
        case VertexKind::Trivalent:
          keys[v] = {0, 0, 0};
          break;
        case VertexKind::Skeleton: {
          int k = legs_count[vx.component];
          keys[v] = {1, vx.component, (vx.rank - rot[vx.component] + k) % k};
          break;
        }
        case VertexKind::Color:
          keys[v] = {2, vx.color, 0};
          break;
      }
    }
    Search(d, std::move(keys)).run(best, sign, have);

    int c = 0;
    for (; c < sup.num_components(); ++c) {
      if (sup.components[c] != ComponentKind::Circle || legs_count[c] == 0) continue;
      if (++rot[c] < legs_count[c]) break;
      rot[c] = 0;
    }
    if (c == sup.num_components()) break;
  }

  for (int v = 0; v < n; ++v) {
    if (d.vertex(v).univalent()) continue;
    for (int s = 0; s < 3; ++s)
      if (d.neighbor(half_edge(v, s)) == v) sign = 0;
  }
  return {std::move(best), sign};
}

Diagram decode_diagram(const Support& support, std::string_view code) {
  const int n = code_vertices(code);
  Diagram d(support);
  auto byte = [&](size_t i) { return static_cast<unsigned char>(code[i]); };
  for (int v = 0; v < n; ++v) {
    size_t base = 2 + 3 * static_cast<size_t>(v);
    switch (byte(base)) {
      case 0:
        d.add_vertex(Vertex::trivalent());
        break;
      case 1:
        d.add_vertex(Vertex::skeleton(byte(base + 1), byte(base + 2)));
        break;
      default:
        d.add_vertex(Vertex::colored(byte(base + 1)));
        break;
    }
  }
  size_t mates = 2 + 3 * static_cast<size_t>(n);
  for (int h = 0; h < 3 * n; ++h) {
    int m = byte(mates + h);
    if (m != 255 && h < m) d.connect(h, m);
  }
  return d;
}

std::string code_hex(std::string_view code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * code.size());
  for (unsigned char c : code) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

}  // namespace jacobi
