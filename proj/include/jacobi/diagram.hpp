#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi/support.hpp"

namespace jacobi {

enum class VertexKind : std::uint8_t { Trivalent, Skeleton, Color };

struct Vertex {
  VertexKind kind = VertexKind::Trivalent;
  int component = -1;  // Skeleton legs only
  int rank = -1;       // Skeleton legs only: position among the legs of the component
  int color = -1;      // Color legs only: index into Support::colors

  static Vertex trivalent() { return {}; }
  static Vertex skeleton(int component, int rank) { return {VertexKind::Skeleton, component, rank, -1}; }
  static Vertex colored(int color) { return {VertexKind::Color, -1, -1, color}; }

  int valence() const { return kind == VertexKind::Trivalent ? 3 : 1; }
  bool univalent() const { return kind != VertexKind::Trivalent; }

  auto operator<=>(const Vertex&) const = default;
};

/// Half-edges are numbered 3*v + slot. Univalent vertices only use slot 0. The
/// slot order of a trivalent vertex is its cyclic orientation.
using HalfEdge = int;

inline constexpr HalfEdge half_edge(int vertex, int slot) { return 3 * vertex + slot; }
inline constexpr int vertex_of(HalfEdge h) { return h / 3; }
inline constexpr int slot_of(HalfEdge h) { return h % 3; }

/// A uni-trivalent graph attached to a support.
///
/// Legs on the skeleton carry their orientation from the skeleton itself; the
/// opposite orientation is absorbed as a sign by whoever builds the diagram.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(Support support) : support_(std::move(support)) {}

  const Support& support() const { return support_; }
  void set_support(Support s) { support_ = std::move(s); }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int v) const { return vertices_[v]; }
  Vertex& vertex(int v) { return vertices_[v]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  HalfEdge mate(HalfEdge h) const { return mate_[h]; }
  int neighbor(HalfEdge h) const { return vertex_of(mate_[h]); }

  int add_vertex(const Vertex& v);
  /// Appends a skeleton leg at rank `rank` of `component`, shifting later legs up.
  int insert_leg(int component, int rank);
  void connect(HalfEdge a, HalfEdge b);
  void disconnect(HalfEdge h);

  /// Removes the listed vertices (their half-edges must already be detached or
  /// only paired among themselves) and closes the rank gaps they leave.
  void remove_vertices(std::vector<int> doomed);

  int num_trivalent() const;
  int num_univalent() const;
  int num_edges() const;
  /// Half the vertex count. Throws DomainError when the count is odd.
  int degree() const;

  bool is_chord_diagram() const { return num_trivalent() == 0; }

  /// Leg vertex ids of a component, sorted by rank.
  std::vector<int> legs_on(int component) const;
  int num_legs_on(int component) const;
  std::vector<int> legs_of_color(int color) const;

  /// One representative half-edge per edge (the smaller of the two ends).
  std::vector<HalfEdge> edges() const;

  /// Connected components of the dashed graph, as vertex lists.
  std::vector<std::vector<int>> dashed_components() const;

  /// Returns the first violated invariant, or nothing when the diagram is valid.
  std::optional<std::string> violation() const;
  /// Throws DomainError carrying violation().
  void validate() const;

  auto operator<=>(const Diagram&) const = default;

 private:
  Support support_;
  std::vector<Vertex> vertices_;
  std::vector<HalfEdge> mate_;
};

/// Text form of one diagram (a block of lines, see README for the grammar).
std::string serialize_diagram(const Diagram& d);
/// Parses one block. Throws ParseError for syntax errors and DomainError when the
/// parsed diagram violates an invariant.
Diagram parse_diagram(std::string_view text);

/// Splits a file into blank-line separated blocks, with the 1-based line number
/// of each block's first line.
std::vector<std::pair<int, std::string>> split_blocks(std::string_view text);

}  // namespace jacobi
