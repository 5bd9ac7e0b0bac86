#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jacobi {

enum class ComponentKind : std::uint8_t { Interval, Circle };

/// The skeleton M (ordered intervals and circles) together with the color set X.
///
/// Component order matters: it is the strand order of the algebras P_r and the
/// order used by products and tensor products. Color labels are distinct.
struct Support {
  std::vector<ComponentKind> components;
  std::vector<std::string> colors;

  auto operator<=>(const Support&) const = default;

  static Support interval() { return {{ComponentKind::Interval}, {}}; }
  static Support circle() { return {{ComponentKind::Circle}, {}}; }
  static Support strands(int r) { return {std::vector<ComponentKind>(r, ComponentKind::Interval), {}}; }
  static Support colored(std::vector<std::string> labels) { return {{}, std::move(labels)}; }

  int num_components() const { return static_cast<int>(components.size()); }
  int num_colors() const { return static_cast<int>(colors.size()); }
  bool has_colors() const { return !colors.empty(); }
  bool all_intervals() const;
  int color_index(std::string_view label) const;  // -1 when absent

  /// Throws DomainError on duplicate color labels.
  void check() const;

  /// Compact form such as "I,S1" or "I,c:x"; the inverse of parse().
  std::string to_string() const;

  /// Accepts comma separated tokens: "I", "S1", "c:<label>", and the
  /// shorthands "P<r>" (r intervals) and "B" (the single color "x").
  /// Throws ParseError on unknown tokens.
  static Support parse(std::string_view text);
};

}  // namespace jacobi
