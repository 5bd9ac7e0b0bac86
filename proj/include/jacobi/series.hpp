#pragma once

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "jacobi/combination.hpp"

namespace jacobi {

/// A graded algebra of diagram combinations with the product used by series
/// operations. Series degree = diagram degree + shift.
struct Algebra {
  Support support;
  Combination unit;
  std::function<Combination(const Combination&, const Combination&)> mul;
  int shift = 0;

  /// A(M) with the stacking product; the empty diagram is the unit.
  static Algebra stacking(const Support& s);
  /// Two-leg diagrams with legs colored v1 and v2, glued v2-to-v1. The strut is
  /// the unit, in degree 0.
  static Algebra two_leg();

  int degree_of(const std::string& code) const { return code_degree(code) + shift; }
  Combination part(const Combination& x, int d) const { return x.part(d - shift); }
  Combination truncate(const Combination& x, int N) const;
  /// x*y with every pair of parts whose degrees add past N skipped.
  Combination multiply(const Combination& x, const Combination& y, int N) const;
  Combination power(const Combination& x, int k, int N) const;
};

enum class SeriesOp { Exp, Log, Inverse, Sqrt };

/// exp needs a vanishing degree-0 part; log, inverse and sqrt need degree-0
/// part equal to the unit. Throws DomainError otherwise.
Combination series_calculus(const Algebra& alg, const Combination& x, SeriesOp op, int N);

/// Header line, then one "degree d" section per nonzero part.
std::string series_to_text(const Algebra& alg, const Combination& x, int N);

// Two-leg elements ------------------------------------------------------------

const Support& two_leg_support();
/// Identifies the v2 leg of each x term with the v1 leg of each y term.
Combination two_leg_glue(const Combination& x, const Combination& y);
/// The strut v1 -- v2.
Combination two_leg_unit();
/// A two-leg element on the single color "x" becomes one with a v1 and a v2
/// leg (the lower numbered leg is v1).
Combination two_leg_from_legs(const Combination& b);
/// v1 on strand 1 and v2 on strand 2 of P_2.
Combination two_leg_on_strands(const Combination& x);
/// leg_swap(x_d) - x_d vanishes in every degree d <= max_degree.
bool two_leg_symmetric(const Combination& x);
/// The two-leg part of pbw_inverse(open_circle(beta)), up to degree N.
Combination two_leg_from_circle(const Combination& beta, int N);

// Psi(beta) ---------------------------------------------------------------------

/// Given the edge count of a dashed component and its degree d, returns how
/// many copies of beta go on each edge (the counts add up to d).
using LocusChooser = std::function<std::vector<int>(int edges, int d)>;

/// Every copy on the first edge of the component.
LocusChooser first_edge_locus();
/// Each copy on a uniformly chosen edge.
LocusChooser random_locus(std::mt19937_64& rng);

/// Psi(beta): on each dashed component of degree d, beta is inserted d times.
/// beta is a two-leg combination in plain diagram degree; terms above degree N
/// are dropped.
Combination psi_apply(const Combination& beta, const Combination& x, int N, const LocusChooser& locus = {});

// Anomaly inversion -------------------------------------------------------------

/// Commutative polynomials in generators A_2, A_4, ... with rational coefficients.
class SymbolicPoly {
 public:
  using Monomial = std::vector<int>;  // sorted generator degrees
  SymbolicPoly() = default;
  static SymbolicPoly constant(const Rational& c);
  static SymbolicPoly generator(int degree);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  SymbolicPoly& operator+=(const SymbolicPoly& o);
  SymbolicPoly& operator-=(const SymbolicPoly& o);
  friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b);
  friend SymbolicPoly operator*(const Rational& c, SymbolicPoly a);
  bool operator==(const SymbolicPoly& o) const { return terms_ == o.terms_; }
  /// Such as "3*A_2^2 - A_4", or "0".
  std::string to_string() const;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Graded by shifted degree.
template <class R>
using GradedParts = std::map<int, R>;

/// Symbolic A with A_0 = 1 and A_{2k} a free generator unless listed in `zero`.
GradedParts<SymbolicPoly> symbolic_anomaly(int N, const std::set<int>& zero = {});
/// B with sum_k A^{2k+1} B_{2k} = 1 up to shifted degree N.
GradedParts<SymbolicPoly> invert_anomaly(const GradedParts<SymbolicPoly>& A, int N);
/// sum_k A^{2k+1} B_{2k} - 1, degree by degree.
GradedParts<SymbolicPoly> anomaly_residual(const GradedParts<SymbolicPoly>& A, const GradedParts<SymbolicPoly>& B,
                                           int N);

/// Diagram version over the two-leg algebra. A[0] must be the strut and odd
/// shifted parts must be absent.
GradedParts<Combination> invert_anomaly(const GradedParts<Combination>& A, int N);
GradedParts<Combination> anomaly_residual(const GradedParts<Combination>& A, const GradedParts<Combination>& B,
                                          int N);
/// Sum of the parts as one combination.
Combination flatten(const GradedParts<Combination>& parts, const Support& s);

// Crossing, framing, parity -----------------------------------------------------

/// exp(1/2 (2xI)_* a) . (exp(-a/2) (x) exp(-a/2)) on P_2, for a on one interval
/// without degree-0 part.
Combination crossing_from_anomaly(const Combination& a, int N);
/// insert_on_component(exp(c a), x, C) truncated at N.
Combination framing_twist(const Combination& x, int component, const Rational& c, const Combination& a, int N);
/// Multiplies the degree-d part by (-1)^d.
Combination parity_involution(const Combination& x);

}  // namespace jacobi
