#pragma once

#include <string>
#include <string_view>

#include "jacobi/diagram.hpp"

namespace jacobi {

/// Canonical encoding of a diagram up to isomorphism, plus the AS sign relating
/// the input to the canonical representative.
///
/// Byte layout: [trivalent count][vertex count], then per vertex (kind, a, b),
/// then the mate of every half-edge (255 for unused slots). Diagrams with fewer
/// trivalent vertices sort first, so chord diagrams precede everything else.
struct Canonical {
  std::string code;
  int sign = 1;  // +1, -1, or 0 when an orientation-reversing automorphism exists

  bool zero() const { return sign == 0; }
};

Canonical canonicalize(const Diagram& d);

/// The canonical representative encoded by `code` (its canonical sign is +1).
Diagram decode_diagram(const Support& support, std::string_view code);

inline int code_trivalent(std::string_view code) { return static_cast<unsigned char>(code[0]); }
inline int code_vertices(std::string_view code) { return static_cast<unsigned char>(code[1]); }
inline int code_degree(std::string_view code) { return code_vertices(code) / 2; }

/// Readable hex form, used as a stable map key in text output.
std::string code_hex(std::string_view code);

}  // namespace jacobi
