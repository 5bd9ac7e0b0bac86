#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "jacobi/canonical.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

/// Finite formal sum of canonical diagrams with rational coefficients.
/// Zero coefficients and diagrams with an orientation-reversing automorphism
/// are never stored.
class Combination {
 public:
  using Terms = std::map<std::string, Rational>;

  Combination() = default;
  explicit Combination(Support support) : support_(std::move(support)) {}
  static Combination of(const Diagram& d, const Rational& c = 1);
  static Combination unit(const Support& support);  // the empty diagram

  const Support& support() const { return support_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Diagram& d, const Rational& c);
  void add_code(const std::string& code, const Rational& c);
  void add(const Combination& other, const Rational& c = 1);

  Rational coefficient(const std::string& code) const;

  Combination& operator+=(const Combination& o) { add(o); return *this; }
  Combination& operator-=(const Combination& o) { add(o, -1); return *this; }
  Combination& operator*=(const Rational& c);
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& c, Combination a) { return a *= c; }
  bool operator==(const Combination& o) const { return support_ == o.support_ && terms_ == o.terms_; }

  /// Degree-d part.
  Combination part(int degree) const;
  int max_degree() const;  // -1 when empty
  bool homogeneous(int degree) const;

  /// Applies a linear map given on canonical representatives.
  Combination map(const Support& target, const std::function<Combination(const Diagram&)>& f) const;

  /// Least common multiple of the coefficient denominators.
  BigInt denominator() const;

  void for_each(const std::function<void(const Diagram&, const Rational&)>& f) const;

  /// Blocks in the diagram grammar, each preceded by a coeff line.
  std::string to_text() const;

 private:
  Support support_;
  Terms terms_;
};

/// Inverse of to_text. A block without a coeff line has coefficient 1; every
/// block must have the same support. ParseError line numbers refer to `text`.
Combination parse_combination(std::string_view text);

}  // namespace jacobi
