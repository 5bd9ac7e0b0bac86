#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi/combination.hpp"
#include "jacobi/quotient.hpp"

namespace jacobi {

// Non-associative words ----------------------------------------------------------

/// A binary tree over the single letter. The empty word has no root.
class NAWord {
 public:
  NAWord() = default;
  static NAWord letter();
  static NAWord join(const NAWord& left, const NAWord& right);
  /// Accepts "·" or "." for the letter; "" is the empty word. Throws ParseError.
  static NAWord parse(std::string_view text);

  bool empty() const { return !node_; }
  bool is_letter() const { return node_ && !node_->left; }
  int length() const { return node_ ? node_->length : 0; }
  NAWord left() const;
  NAWord right() const;

  /// Deletes letter i (1-based); its parent is replaced by the sibling.
  NAWord delete_letter(int i) const;
  /// Replaces letter i by (··).
  NAWord split_letter(int i) const;
  /// Mirror image.
  NAWord flipped() const;

  std::string to_string() const;
  bool operator==(const NAWord& o) const { return to_string() == o.to_string(); }

 private:
  struct Node {
    std::shared_ptr<const Node> left, right;
    int length = 1;
  };
  explicit NAWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// All words of a given length, in a fixed order.
std::vector<NAWord> all_words(int length);

// Strand operations on P_r (strands are numbered from 1) ---------------------------

int strand_count(const Combination& f);
/// Duplication of strand i.
Combination delta(const Combination& f, int i);
/// Deletion of strand i.
Combination epsilon(const Combination& f, int i);
/// f^{s1 s2 ...}: strand i is sent to strand sigma[i-1].
Combination permute_strands(const Combination& f, const std::vector<int>& sigma);
/// Reverses the order of the strands.
Combination flip_strands(const Combination& f);
/// 1 (x) f and f (x) 1.
Combination one_tensor(const Combination& f);
Combination tensor_one(const Combination& f);
/// The unit of P_r.
Combination strand_unit(int r);

/// 1(x)f - D_1 f + D_2 f - ... + (-1)^n D_n f + (-1)^(n+1) f(x)1.
Combination coboundary(const Combination& f);

/// Reduced coordinates per degree, and the number of nonzero coordinates.
struct Residual {
  Combination raw;
  std::map<int, Coordinates> coords;
  int norm = 0;
  bool zero() const { return norm == 0; }
};
Residual reduce_residual(const Combination& x, int N);

/// True when x - y vanishes in every degree up to N.
bool equal_in_quotient(const Combination& x, const Combination& y, int N);

// Twists ------------------------------------------------------------------------------

/// Symmetric under the strand swap and eps_1(F) = 1, checked up to degree N.
bool is_twist(const Combination& F, int N);
/// F(w) in P_{l(w)} by the recursion on w = w'w''. Throws DomainError when F
/// is not a twist.
Combination twist_cable(const Combination& F, const NAWord& w, int N);

// Associator constraints -----------------------------------------------------------

struct ConstraintReport {
  bool c1 = false, c2 = false, c3 = false, c4 = false;
  bool all() const { return c1 && c2 && c3 && c4; }
};
ConstraintReport check_psi_constraints(const Combination& psi, int k);

/// Symmetric degree-k f in P_2 with eps_1(f) = 0, built from g by
/// symmetrizing and subtracting 1(x)h + h(x)1 where h = eps_1 of the result.
Combination make_admissible(const Combination& g);

/// Returns an admissible f with d(f) = psi in the degree-k quotient, or nothing.
/// Throws DomainError when psi fails C1-C4.
std::optional<Combination> solve_coboundary(const Combination& psi, int k);

/// D_1(Phi) D_3(Phi) - (Phi(x)1) D_2(Phi) (1(x)Phi) up to degree N.
Residual check_pentagon(const Combination& phi, int N);
/// D_1(R) - Phi R^{23} (Phi^{132})^{-1} R^{13} Phi^{312} up to degree N.
Residual check_hexagon(const Combination& phi, const Combination& R, int N);

}  // namespace jacobi
