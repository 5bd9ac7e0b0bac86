#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacobi/combination.hpp"

namespace jacobi {

// Builders ---------------------------------------------------------------------

/// Degree-one chord with one leg on component c1 and one on c2 (c1 == c2 gives
/// an isolated chord on that component). Legs go after existing ones.
Combination chord(const Support& s, int c1, int c2);
/// Two-leg strut between colors (indices into the color list).
Combination strut(const Support& s, int color1, int color2);

/// A component of M or a color of X.
struct Part {
  bool color = false;
  int index = 0;
  static Part component(int i) { return {false, i}; }
  static Part of_color(int i) { return {true, i}; }
};

// Products ---------------------------------------------------------------------

/// Product in A(M) obtained by stacking: on every component the legs of y are
/// placed after those of x. Both must have the same support.
Combination stack_product(const Combination& x, const Combination& y);
/// Disjoint union on the concatenated support. Color labels must be disjoint.
Combination tensor_product(const Combination& x, const Combination& y);

/// Inserts x (on a single interval) along component c of y. `locus` is the
/// rank before which x's legs go (-1: after the last leg). When `reversed` is
/// set, x is read against the orientation of c, which reverses its leg order
/// and contributes (-1)^(number of legs).
Combination insert_on_component(const Combination& x, const Combination& y, int c, bool reversed = false,
                                int locus = -1);

// Support surgery --------------------------------------------------------------

/// Drops terms with a leg on the part and removes it from the support.
Combination delete_part(const Combination& x, Part p);
/// Replaces the part by r copies, summing over the r^k ordered assignments of
/// its k legs. Color copies are named label1..labelr unless names are given.
Combination duplicate_part(const Combination& x, Part p, int r, const std::vector<std::string>& names = {});
/// Joins components [first, first+count) into one interval, in order.
Combination concatenate_components(const Combination& x, int first, int count);
/// Component i of x becomes component perm[i].
Combination permute_components(const Combination& x, const std::vector<int>& perm);
/// Reverses the orientation of component c.
Combination reverse_component(const Combination& x, int c);
Combination close_interval(const Combination& x, int c = 0);
Combination open_circle(const Combination& x, int c = 0);
/// Moves every colored leg to a single color named `label`.
Combination forget_colors(const Combination& x, const std::string& label = "x");
/// Exchanges the two colors of a support with exactly two colors. Every term
/// must carry exactly two colored legs.
Combination leg_swap(const Combination& x);
/// Renames the support; the shape (components, color count) must be unchanged.
Combination with_support(const Combination& x, const Support& s);

// Poincare-Birkhoff-Witt ------------------------------------------------------------

/// chi: averages the legs of `color` over all orders on a new last interval.
Combination pbw_symmetrize(const Combination& x, int color = 0);

struct LegProjection {
  /// pi[k] lives on the single color "x" with exactly k legs.
  std::map<int, Combination> pi;
  /// Largest leg count among the input terms.
  int max_legs = 0;
  /// pi_k vanished for every k above a term's leg count (checked per term).
  bool vanish_above_u = true;
};

/// Inverse of chi on A(I) by the constructive induction: adjacent leg swaps
/// through STU, summed over coset representatives fixing the first leg.
LegProjection pbw_inverse(const Combination& x);
/// Integrality factor k!(k+1)!...(u-1)! of pi_k for a u-leg diagram.
BigInt pbw_factor(int k, int u);

/// iota o (r x I): duplicate the interval into r strands and concatenate them.
Combination adams_operation(const Combination& x, int r);

}  // namespace jacobi
