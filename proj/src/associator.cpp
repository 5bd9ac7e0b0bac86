#include "jacobi/associator.hpp"

#include "jacobi/error.hpp"
#include "jacobi/linalg.hpp"
#include "jacobi/morphisms.hpp"
#include "jacobi/series.hpp"

namespace jacobi {

// Words ---------------------------------------------------------------------------

NAWord NAWord::letter() { return NAWord(std::make_shared<const Node>()); }

NAWord NAWord::join(const NAWord& left, const NAWord& right) {
  if (left.empty() || right.empty()) throw DomainError("word: cannot join an empty word");
  auto n = std::make_shared<Node>();
  n->left = left.node_;
  n->right = right.node_;
  n->length = left.length() + right.length();
  return NAWord(std::move(n));
}

NAWord NAWord::left() const { return NAWord(node_ ? node_->left : nullptr); }
NAWord NAWord::right() const { return NAWord(node_ ? node_->right : nullptr); }

namespace {

struct WordParser {
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("word: " + what, 1, static_cast<int>(pos) + 1);
  }
  void skip() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_letter() const {
    return (pos < s.size() && s[pos] == '.') || s.substr(pos, 2) == "\xC2\xB7";
  }
  NAWord word() {
    skip();
    if (at_letter()) {
      pos += s[pos] == '.' ? 1 : 2;
      return NAWord::letter();
    }
    if (pos >= s.size() || s[pos] != '(') fail("expected a letter or '('");
    ++pos;
    NAWord a = word();
    NAWord b = word();
    skip();
    if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
    ++pos;
    return NAWord::join(a, b);
  }
};

}  // namespace

NAWord NAWord::parse(std::string_view text) {
  WordParser p{text};
  p.skip();
  if (p.pos == text.size()) return NAWord();
  NAWord w = p.word();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return w;
}

NAWord NAWord::delete_letter(int i) const {
  if (i < 1 || i > length()) throw DomainError("word: letter index out of range");
  if (is_letter()) return NAWord();
  NAWord l = left(), r = right();
  if (i <= l.length()) {
    NAWord nl = l.delete_letter(i);
    return nl.empty() ? r : join(nl, r);
  }
  NAWord nr = r.delete_letter(i - l.length());
  return nr.empty() ? l : join(l, nr);
}

NAWord NAWord::split_letter(int i) const {
  if (i < 1 || i > length()) throw DomainError("word: letter index out of range");
  if (is_letter()) return join(letter(), letter());
  NAWord l = left(), r = right();
  if (i <= l.length()) return join(l.split_letter(i), r);
  return join(l, r.split_letter(i - l.length()));
}

NAWord NAWord::flipped() const {
  if (empty() || is_letter()) return *this;
  return join(right().flipped(), left().flipped());
}

std::string NAWord::to_string() const {
  if (empty()) return "";
  if (is_letter()) return "\xC2\xB7";
  return "(" + left().to_string() + right().to_string() + ")";
}

std::vector<NAWord> all_words(int length) {
  if (length < 0) throw DomainError("word: negative length");
  if (length == 0) return {NAWord()};
  if (length == 1) return {NAWord::letter()};
  std::vector<NAWord> out;
  for (int a = 1; a < length; ++a)
    for (const auto& l : all_words(a))
      for (const auto& r : all_words(length - a)) out.push_back(NAWord::join(l, r));
  return out;
}

// Strand operations -------------------------------------------------------------------

int strand_count(const Combination& f) {
  const Support& s = f.support();
  if (s.has_colors() || !s.all_intervals()) throw DomainError("strand element expected");
  return s.num_components();
}

Combination delta(const Combination& f, int i) {
  strand_count(f);
  return duplicate_part(f, Part::component(i - 1), 2);
}

Combination epsilon(const Combination& f, int i) {
  strand_count(f);
  return delete_part(f, Part::component(i - 1));
}

Combination permute_strands(const Combination& f, const std::vector<int>& sigma) {
  std::vector<int> perm;
  for (int s : sigma) perm.push_back(s - 1);
  return permute_components(f, perm);
}

Combination flip_strands(const Combination& f) {
  const int r = strand_count(f);
  std::vector<int> sigma;
  for (int i = 1; i <= r; ++i) sigma.push_back(r + 1 - i);
  return permute_strands(f, sigma);
}

Combination strand_unit(int r) { return Combination::unit(Support::strands(r)); }

Combination one_tensor(const Combination& f) { return tensor_product(strand_unit(1), f); }
Combination tensor_one(const Combination& f) { return tensor_product(f, strand_unit(1)); }

Combination coboundary(const Combination& f) {
  const int n = strand_count(f);
  Combination out = one_tensor(f);
  for (int i = 1; i <= n; ++i) out.add(delta(f, i), i % 2 ? -1 : 1);
  out.add(tensor_one(f), (n + 1) % 2 ? -1 : 1);
  return out;
}

Residual reduce_residual(const Combination& x, int N) {
  Residual r;
  r.raw = Algebra::stacking(x.support()).truncate(x, N);
  for (int d = 0; d <= N; ++d) {
    Combination p = x.part(d);
    if (p.empty()) continue;
    Coordinates c = quotient_basis(x.support(), d)->reduce(p);
    for (const auto& v : c) r.norm += v != 0;
    r.coords.emplace(d, std::move(c));
  }
  return r;
}

bool equal_in_quotient(const Combination& x, const Combination& y, int N) {
  return reduce_residual(x - y, N).zero();
}

// Twists ------------------------------------------------------------------------------

bool is_twist(const Combination& F, int N) {
  if (strand_count(F) != 2) return false;
  return equal_in_quotient(permute_strands(F, {2, 1}), F, N) && equal_in_quotient(epsilon(F, 1), strand_unit(1), N);
}

namespace {

Combination cable(const Combination& F, const NAWord& w, int N) {
  if (w.empty()) return strand_unit(0);
  if (w.is_letter()) return strand_unit(1);
  const int l1 = w.left().length(), l2 = w.right().length();
  Combination g = Algebra::stacking(F.support()).truncate(F, N);
  g = duplicate_part(g, Part::component(1), l2);
  g = duplicate_part(g, Part::component(0), l1);
  Combination rest = tensor_product(cable(F, w.left(), N), cable(F, w.right(), N));
  return Algebra::stacking(Support::strands(w.length())).multiply(g, rest, N);
}

}  // namespace

Combination twist_cable(const Combination& F, const NAWord& w, int N) {
  if (!is_twist(F, N)) throw DomainError("twist: F must be symmetric with eps_1(F) = 1");
  return cable(F, w, N);
}

// Constraints -------------------------------------------------------------------------

ConstraintReport check_psi_constraints(const Combination& psi, int k) {
  if (strand_count(psi) != 3) throw DomainError("psi must live on three strands");
  ConstraintReport r;
  auto vanishes = [k](const Combination& x) { return reduce_residual(x, k).zero(); };
  r.c1 = vanishes(coboundary(psi));
  r.c2 = vanishes(psi - permute_strands(psi, {1, 3, 2}) - permute_strands(psi, {2, 1, 3}));
  r.c3 = vanishes(permute_strands(psi, {3, 2, 1}) + psi);
  r.c4 = vanishes(epsilon(psi, 1)) && vanishes(epsilon(psi, 2)) && vanishes(epsilon(psi, 3));
  return r;
}

Combination make_admissible(const Combination& g) {
  if (strand_count(g) != 2) throw DomainError("admissible: element of P_2 expected");
  Combination s = Rational(1, 2) * (g + permute_strands(g, {2, 1}));
  Combination h = epsilon(s, 1);
  return s - one_tensor(h) - tensor_one(h);
}

std::optional<Combination> solve_coboundary(const Combination& psi, int k) {
  if (!check_psi_constraints(psi, k).all()) throw DomainError("solve: psi violates C1-C4");
  auto q1 = quotient_basis(Support::strands(1), k);
  auto q2 = quotient_basis(Support::strands(2), k);
  auto q3 = quotient_basis(Support::strands(3), k);
  const int cols = q2->dim();
  const size_t rows = q3->dim() + q2->dim() + q1->dim();
  std::vector<Coordinates> a(rows, Coordinates(cols, 0));
  for (int j = 0; j < cols; ++j) {
    Combination b = q2->basis_element(j);
    Coordinates col = q3->reduce(coboundary(b));
    Coordinates sym = q2->reduce(b - permute_strands(b, {2, 1}));
    Coordinates eps = q1->reduce(epsilon(b, 1));
    col.insert(col.end(), sym.begin(), sym.end());
    col.insert(col.end(), eps.begin(), eps.end());
    for (size_t i = 0; i < rows; ++i) a[i][j] = col[i];
  }
  Coordinates rhs = q3->reduce(psi.part(k));
  rhs.resize(rows, 0);
  auto x = solve(a, rhs, cols);
  if (!x) return std::nullopt;
  return q2->lift(*x);
}

Residual check_pentagon(const Combination& phi, int N) {
  if (strand_count(phi) != 3) throw DomainError("pentagon: Phi must live on three strands");
  if (!(phi.part(0) == strand_unit(3))) throw DomainError("pentagon: Phi_0 must be 1");
  const Algebra p4 = Algebra::stacking(Support::strands(4));
  Combination lhs = p4.multiply(delta(phi, 1), delta(phi, 3), N);
  Combination rhs = p4.multiply(p4.multiply(tensor_one(phi), delta(phi, 2), N), one_tensor(phi), N);
  return reduce_residual(lhs - rhs, N);
}

Residual check_hexagon(const Combination& phi, const Combination& R, int N) {
  if (strand_count(phi) != 3 || strand_count(R) != 2) throw DomainError("hexagon: Phi on P_3 and R on P_2 expected");
  if (!(phi.part(0) == strand_unit(3)) || !(R.part(0) == strand_unit(2)))
    throw DomainError("hexagon: degree-0 parts must be 1");
  const Algebra p3 = Algebra::stacking(Support::strands(3));
  Combination inv = series_calculus(p3, permute_strands(phi, {1, 3, 2}), SeriesOp::Inverse, N);
  Combination r23 = one_tensor(R);
  Combination r13 = permute_strands(tensor_one(R), {1, 3, 2});
  Combination rhs = p3.multiply(phi, r23, N);
  rhs = p3.multiply(rhs, inv, N);
  rhs = p3.multiply(rhs, r13, N);
  rhs = p3.multiply(rhs, permute_strands(phi, {3, 1, 2}), N);
  return reduce_residual(delta(R, 1) - rhs, N);
}

}  // namespace jacobi
