#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "jacobi/combination.hpp"
#include "jacobi/enumerate.hpp"

namespace jacobi {

/// Full: every uni-trivalent class modulo AS, STU and IHX.
/// Chord: chord diagrams modulo 4T; other diagrams are reduced through chordify.
/// Auto picks Chord for skeleton-only supports and Full otherwise.
enum class QuotientMethod { Auto, Full, Chord };

struct QuotientOptions {
  QuotientMethod method = QuotientMethod::Auto;
  /// Per color: the exact number of legs of that color, or -1 for any.
  std::vector<int> color_legs;
  int cap = kDefaultCap;
};

/// The degree-n part of A(M u X) with a fixed basis.
///
/// The basis is the set of least canonical codes that survive elimination, so
/// chord diagrams are preferred. Every enumerated class is stored with its
/// coordinates in that basis.
class QuotientSpace {
 public:
  const Support& support() const { return support_; }
  int degree() const { return degree_; }
  QuotientMethod method() const { return method_; }
  const std::vector<int>& color_legs() const { return color_legs_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis_codes() const { return basis_; }
  Combination basis_element(int i) const;
  size_t num_classes() const { return columns_.size(); }
  const std::vector<std::string>& class_codes() const { return columns_; }

  Coordinates reduce(const Combination& x) const;
  Coordinates reduce(const Diagram& d) const { return reduce(Combination::of(d)); }
  Combination lift(const Coordinates& c) const;
  /// True when x reduces to zero.
  bool vanishes(const Combination& x) const { return is_zero(reduce(x)); }

  std::string cache_key() const;

 private:
  friend class QuotientBuilder;
  void index();

  Support support_;
  int degree_ = 0;
  QuotientMethod method_ = QuotientMethod::Full;
  std::vector<int> color_legs_;
  std::vector<std::string> columns_;
  std::vector<Coordinates> coords_;
  std::vector<std::string> basis_;
  std::unordered_map<std::string, int> index_;
};

using QuotientPtr = std::shared_ptr<const QuotientSpace>;

/// Memoized per process, and on disk when a cache directory is set.
QuotientPtr quotient_basis(const Support& support, int degree, const QuotientOptions& opts = {});

QuotientMethod resolve_method(const Support& support, QuotientMethod m);
std::string method_name(QuotientMethod m);

// Disk cache -----------------------------------------------------------------

/// Empty disables the disk cache (the default).
void set_cache_dir(const std::string& dir);
std::string cache_dir();
/// Receives warnings such as "corrupt cache file, recomputing". Defaults to stderr.
void set_warning_handler(std::function<void(const std::string&)> handler);

struct CacheStats {
  int files = 0;
  std::uintmax_t bytes = 0;
  int locks = 0;
};
CacheStats cache_stats(const std::string& dir);
/// Removes cache files and stale locks; returns the number of files removed.
int cache_purge(const std::string& dir);

/// Serialized form of a quotient space, and its inverse. load returns nothing
/// when the text is corrupt, truncated or written by another format version.
std::string store_quotient_text(const QuotientSpace& q);
std::optional<QuotientSpace> load_quotient_text(const std::string& text, const std::string& expected_key);

/// Drops the in-process memo (tests use it to force disk reads).
void clear_quotient_memo();

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace jacobi
