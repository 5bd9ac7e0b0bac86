#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacobi/combination.hpp"
#include "jacobi/rational.hpp"

namespace jacobi {

/// d(n): the bound for degree-n parts of the Kontsevich integral of links.
/// D(k): the bound for the strand-split two-leg series B_{2k}.
/// D(2;n): the two-leg bound for the degree-n anomaly.
enum class BoundKind { Small, Big, TwoLeg };

std::string kind_name(BoundKind k);  // "d", "D", "D2"
/// Accepts "d", "D" and "D2". Throws ParseError otherwise.
BoundKind parse_kind(const std::string& s);

using Factorization = std::map<unsigned long, int>;

struct DenominatorBound {
  BoundKind kind;
  int parameter;
  BigInt value;
  Factorization factorization;
};

/// a! (a+1)! ... b!, and 1 when a > b.
BigInt factorial_product(int a, int b);

/// d(n), n >= 3. With `drop_nine`, the factor 3^2 of the odd branch is omitted
/// (used to test the checker).
BigInt bound_d(int n, bool drop_nine = false);
/// D(k), k >= 1.
BigInt bound_D(int k);
/// D(2;n), n >= 5.
BigInt bound_D2(int n);

/// Throws DomainError below the printed domain of the formula.
DenominatorBound bound(BoundKind kind, int parameter);

/// Trial division; the value must have no prime factor above `limit`.
Factorization factorize(const BigInt& value, unsigned long limit);
BigInt expand(const Factorization& f);
std::string factorization_to_string(const Factorization& f);

/// Outcome of one divisibility obligation over a parameter range.
struct Certificate {
  std::string id;
  std::string statement;
  std::string range;
  long checked = 0;
  bool pass = true;
  /// First failing tuple, the prime whose exponent is short and both exponents.
  std::string witness;
  std::string to_text() const;
};

/// d-base, D-odd, D-even, D-mixed, Dmult, D2n-low, D2n-top.
const std::vector<std::string>& obligation_ids();
/// Checks the obligation for all parameters up to `max`. With `mutate`, d(n)
/// is replaced by its perturbed version. Throws DomainError on unknown ids.
Certificate verify_obligation(const std::string& id, int max, bool mutate = false);

/// Least N > 0 with N x integral; non-chord terms on skeleton-only supports
/// are expanded through chordify first.
BigInt combo_denominator(const Combination& x);
BigInt combo_denominator(const Coordinates& c);

}  // namespace jacobi
