#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jacobi/canonical.hpp"

namespace jacobi {

inline constexpr int kDefaultCap = 6;

struct EnumerateOptions {
  static EnumerateOptions chords() {
    EnumerateOptions o;
    o.chord_only = true;
    return o;
  }
  static EnumerateOptions legs(std::vector<int> max) {
    EnumerateOptions o;
    o.color_max = std::move(max);
    return o;
  }

  bool chord_only = false;
  /// Per color: maximum number of legs of that color, or -1 for no bound.
  std::vector<int> color_max;
  int cap = kDefaultCap;
  std::function<bool(const Diagram&)> filter;
};

/// One representative per isomorphism class of valid degree-n diagrams with
/// nonzero canonical sign, sorted by canonical code.
std::vector<Canonical> enumerate(const Support& support, int degree, const EnumerateOptions& opts = {});

/// Every class, including those killed by AS. Sorted by code. No filter applied.
std::vector<std::string> enumerate_codes(const Support& support, int degree, const EnumerateOptions& opts = {});

}  // namespace jacobi
