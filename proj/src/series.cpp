#include "jacobi/series.hpp"

#include <algorithm>
#include <sstream>

#include "jacobi/error.hpp"
#include "jacobi/morphisms.hpp"
#include "jacobi/quotient.hpp"

namespace jacobi {

namespace {

std::map<int, Combination> split(const Algebra& alg, const Combination& x) {
  std::map<int, Combination> parts;
  for (const auto& [code, q] : x.terms()) {
    auto it = parts.try_emplace(alg.degree_of(code), x.support()).first;
    it->second.add_code(code, q);
  }
  return parts;
}

// Copies b's vertices and edges into g and returns the index of b's vertex 0.
int append(Diagram& g, const Diagram& b) {
  const int base = g.num_vertices();
  for (const auto& v : b.vertices()) g.add_vertex(v);
  for (HalfEdge h : b.edges()) {
    HalfEdge m = b.mate(h);
    g.connect(half_edge(base + vertex_of(h), slot_of(h)), half_edge(base + vertex_of(m), slot_of(m)));
  }
  return base;
}

std::pair<int, int> two_legs(const Diagram& d) {
  auto a = d.legs_of_color(0);
  auto b = d.legs_of_color(1);
  if (a.size() != 1 || b.size() != 1 || d.num_univalent() != 2)
    throw DomainError("two-leg element expected (one v1 leg and one v2 leg)");
  return {a[0], b[0]};
}

// Cuts the edge at h and splices in b between its two ends.
void insert_on_edge(Diagram& g, HalfEdge h, const Diagram& b) {
  auto [l1, l2] = two_legs(b);
  if (b.neighbor(half_edge(l1, 0)) == l2) return;
  HalfEdge m = g.mate(h);
  const int base = append(g, b);
  HalfEdge n1 = g.mate(half_edge(base + l1, 0));
  HalfEdge n2 = g.mate(half_edge(base + l2, 0));
  g.disconnect(h);
  g.disconnect(n1);
  g.disconnect(n2);
  g.connect(h, n1);
  g.connect(m, n2);
  g.remove_vertices({base + l1, base + l2});
}

Rational sqrt_coefficient(int k) {
  Rational c = 1;
  for (int i = 0; i < k; ++i) c *= (Rational(1, 2) - i) / Rational(i + 1);
  return c;
}

}  // namespace

// Algebra -----------------------------------------------------------------------

Algebra Algebra::stacking(const Support& s) {
  return {s, Combination::unit(s), [](const Combination& x, const Combination& y) { return stack_product(x, y); },
          0};
}

Algebra Algebra::two_leg() { return {two_leg_support(), two_leg_unit(), two_leg_glue, -1}; }

Combination Algebra::truncate(const Combination& x, int N) const {
  Combination out(x.support());
  for (const auto& [code, q] : x.terms())
    if (degree_of(code) <= N) out.add_code(code, q);
  return out;
}

Combination Algebra::multiply(const Combination& x, const Combination& y, int N) const {
  Combination out(support);
  auto px = split(*this, x);
  auto py = split(*this, y);
  for (const auto& [i, a] : px)
    for (const auto& [j, b] : py)
      if (i + j <= N) out.add(mul(a, b));
  return out;
}

Combination Algebra::power(const Combination& x, int k, int N) const {
  Combination r = truncate(unit, N);
  for (int i = 0; i < k; ++i) r = multiply(r, x, N);
  return r;
}

Combination series_calculus(const Algebra& alg, const Combination& x, SeriesOp op, int N) {
  if (x.support() != alg.support) throw DomainError("series: support mismatch");
  Combination y = op == SeriesOp::Exp ? x : x - alg.unit;
  if (!alg.part(y, 0).empty())
    throw DomainError(op == SeriesOp::Exp ? "exp: degree-0 part must vanish" : "series: degree-0 part must be the unit");
  y = alg.truncate(y, N);
  Combination out(alg.support);
  Combination p = alg.truncate(alg.unit, N);
  Rational c = 1;
  for (int k = 0; k <= N && !p.empty(); ++k) {
    switch (op) {
      case SeriesOp::Exp: c = k == 0 ? Rational(1) : c / k; break;
      case SeriesOp::Log: c = k == 0 ? Rational(0) : Rational(k % 2 ? 1 : -1, k); break;
      case SeriesOp::Inverse: c = k % 2 ? -1 : 1; break;
      case SeriesOp::Sqrt: c = sqrt_coefficient(k); break;
    }
    if (c != 0) out.add(p, c);
    p = alg.multiply(p, y, N);
  }
  return out;
}

std::string series_to_text(const Algebra& alg, const Combination& x, int N) {
  std::ostringstream os;
  os << "series: " << alg.support.to_string() << " N " << N << "\n";
  for (const auto& [d, part] : split(alg, x)) {
    if (d > N) continue;
    os << "degree " << d << "\n" << part.to_text();
  }
  return os.str();
}

// Two-leg elements ----------------------------------------------------------------

const Support& two_leg_support() {
  static const Support s = Support::colored({"v1", "v2"});
  return s;
}

Combination two_leg_unit() { return strut(two_leg_support(), 0, 1); }

Combination two_leg_glue(const Combination& x, const Combination& y) {
  if (x.support() != two_leg_support() || y.support() != two_leg_support())
    throw DomainError("glue: two-leg support expected");
  Combination out(two_leg_support());
  for (const auto& [cx, qx] : x.terms()) {
    Diagram a = decode_diagram(two_leg_support(), cx);
    int a2 = two_legs(a).second;
    for (const auto& [cy, qy] : y.terms()) {
      Diagram b = decode_diagram(two_leg_support(), cy);
      Diagram g = a;
      int b1 = append(g, b) + two_legs(b).first;
      HalfEdge n1 = g.mate(half_edge(a2, 0));
      HalfEdge n2 = g.mate(half_edge(b1, 0));
      g.disconnect(n1);
      g.disconnect(n2);
      g.connect(n1, n2);
      g.remove_vertices({a2, b1});
      out.add(g, qx * qy);
    }
  }
  return out;
}

Combination two_leg_from_legs(const Combination& b) {
  if (b.support().num_components() != 0 || b.support().num_colors() != 1)
    throw DomainError("two-leg: a single color expected");
  Combination out(two_leg_support());
  for (const auto& [code, q] : b.terms()) {
    Diagram d = decode_diagram(b.support(), code);
    auto legs = d.legs_of_color(0);
    if (legs.size() != 2) throw DomainError("two-leg: a term does not have two legs");
    std::sort(legs.begin(), legs.end());
    d.vertex(legs[1]).color = 1;
    d.set_support(two_leg_support());
    out.add(d, q);
  }
  return out;
}

Combination two_leg_on_strands(const Combination& x) {
  const Support s = Support::strands(2);
  Combination out(s);
  for (const auto& [code, q] : x.terms()) {
    Diagram d = decode_diagram(x.support(), code);
    auto [l1, l2] = two_legs(d);
    d.vertex(l1) = Vertex::skeleton(0, 0);
    d.vertex(l2) = Vertex::skeleton(1, 0);
    d.set_support(s);
    out.add(d, q);
  }
  return out;
}

bool two_leg_symmetric(const Combination& x) {
  QuotientOptions o;
  o.method = QuotientMethod::Full;
  o.color_legs = {1, 1};
  for (int d = 1; d <= x.max_degree(); ++d) {
    Combination p = x.part(d);
    if (p.empty()) continue;
    if (!quotient_basis(two_leg_support(), d, o)->vanishes(leg_swap(p) - p)) return false;
  }
  return true;
}

Combination two_leg_from_circle(const Combination& beta, int N) {
  Combination b = Algebra::stacking(beta.support()).truncate(beta, N);
  LegProjection p = pbw_inverse(open_circle(b));
  auto it = p.pi.find(2);
  if (it == p.pi.end()) return Combination(two_leg_support());
  return two_leg_from_legs(it->second);
}

// Psi ---------------------------------------------------------------------------

LocusChooser first_edge_locus() {
  return [](int edges, int d) {
    std::vector<int> counts(edges, 0);
    if (edges > 0) counts[0] = d;
    return counts;
  };
}

LocusChooser random_locus(std::mt19937_64& rng) {
  return [&rng](int edges, int d) {
    std::vector<int> counts(edges, 0);
    for (int i = 0; i < d; ++i) ++counts[rng() % edges];
    return counts;
  };
}

Combination psi_apply(const Combination& beta, const Combination& x, int N, const LocusChooser& locus) {
  if (beta.support() != two_leg_support()) throw DomainError("psi: beta must be a two-leg element");
  const Algebra tl = Algebra::two_leg();
  const LocusChooser choose = locus ? locus : first_edge_locus();

  struct Piece {
    Diagram d;
    Rational q;
    int degree;
  };
  std::map<std::pair<int, int>, std::vector<Piece>> powers;
  auto power_terms = [&](int m, int budget) -> const std::vector<Piece>& {
    auto key = std::make_pair(m, budget);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    std::vector<Piece> ps;
    const Combination pw = tl.power(beta, m, budget);
    for (const auto& [code, q] : pw.terms())
      ps.push_back({decode_diagram(two_leg_support(), code), q, tl.degree_of(code)});
    return powers.emplace(key, std::move(ps)).first->second;
  };

  Combination out(x.support());
  for (const auto& [code, q] : x.terms()) {
    Diagram g = decode_diagram(x.support(), code);
    const int budget = N - g.degree();
    if (budget < 0) continue;
    std::vector<std::pair<HalfEdge, int>> sites;
    auto edges = g.edges();
    for (const auto& comp : g.dashed_components()) {
      std::vector<HalfEdge> own;
      for (HalfEdge h : edges)
        if (std::find(comp.begin(), comp.end(), vertex_of(h)) != comp.end()) own.push_back(h);
      auto counts = choose(static_cast<int>(own.size()), static_cast<int>(comp.size()) / 2);
      for (size_t i = 0; i < own.size(); ++i)
        if (counts[i] > 0) sites.emplace_back(own[i], counts[i]);
    }
    std::vector<Piece> cur{{g, q, 0}};
    for (const auto& [h, m] : sites) {
      std::vector<Piece> next;
      for (const auto& c : cur) {
        for (const auto& p : power_terms(m, budget - c.degree)) {
          Piece n{c.d, c.q * p.q, c.degree + p.degree};
          insert_on_edge(n.d, h, p.d);
          next.push_back(std::move(n));
        }
      }
      cur = std::move(next);
    }
    for (const auto& c : cur) out.add(c.d, c.q);
  }
  return out;
}

// Symbolic polynomials ------------------------------------------------------------

SymbolicPoly SymbolicPoly::constant(const Rational& c) {
  SymbolicPoly p;
  p.add({}, c);
  return p;
}

SymbolicPoly SymbolicPoly::generator(int degree) {
  SymbolicPoly p;
  p.add({degree}, 1);
  return p;
}

void SymbolicPoly::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

SymbolicPoly& SymbolicPoly::operator-=(const SymbolicPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
  SymbolicPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      SymbolicPoly::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      r.add(m, ca * cb);
    }
  }
  return r;
}

SymbolicPoly operator*(const Rational& c, SymbolicPoly a) {
  SymbolicPoly r;
  for (const auto& [m, x] : a.terms_) r.add(m, c * x);
  return r;
}

std::string SymbolicPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (size_t i = 0; i < m.size();) {
      size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += "A_" + std::to_string(m[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    if (mono.empty()) s += jacobi::to_string(a);
    else if (a == 1) s += mono;
    else s += jacobi::to_string(a) + "*" + mono;
  }
  return s;
}

// Anomaly inversion ---------------------------------------------------------------

namespace {

template <class R, class Mul>
GradedParts<R> graded_multiply(const GradedParts<R>& a, const GradedParts<R>& b, int N, const Mul& mul) {
  GradedParts<R> out;
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      if (i + j > N) continue;
      R p = mul(x, y);
      auto it = out.find(i + j);
      if (it == out.end()) out.emplace(i + j, std::move(p));
      else it->second += p;
    }
  }
  return out;
}

template <class R, class Mul>
std::vector<GradedParts<R>> powers_of(const GradedParts<R>& A, int count, int N, const Mul& mul) {
  std::vector<GradedParts<R>> P(count + 1);
  P[0] = {{0, A.at(0)}};
  for (int j = 1; j <= count; ++j) P[j] = graded_multiply(P[j - 1], A, N, mul);
  return P;
}

template <class R>
void check_anomaly(const GradedParts<R>& A) {
  if (!A.count(0)) throw DomainError("anomaly: A_0 must be the unit");
  for (const auto& [d, x] : A)
    if (d < 0 || d % 2) throw DomainError("anomaly: only even shifted degrees are allowed");
}

template <class R, class Mul>
GradedParts<R> invert_impl(const GradedParts<R>& A, int N, const R& zero, const Mul& mul) {
  check_anomaly(A);
  auto P = powers_of(A, N + 1, N, mul);
  GradedParts<R> B;
  B.emplace(0, A.at(0));
  for (int n = 1; 2 * n <= N; ++n) {
    R acc = zero;
    for (int k = 0; k < n; ++k) {
      auto it = P[2 * k + 1].find(2 * n - 2 * k);
      if (it != P[2 * k + 1].end()) acc += mul(it->second, B.at(2 * k));
    }
    B.emplace(2 * n, Rational(-1) * acc);
  }
  return B;
}

template <class R, class Mul>
GradedParts<R> residual_impl(const GradedParts<R>& A, const GradedParts<R>& B, int N, const R& zero, const Mul& mul) {
  check_anomaly(A);
  auto P = powers_of(A, N + 1, N, mul);
  GradedParts<R> out;
  for (int d = 0; d <= N; ++d) out.emplace(d, zero);
  for (const auto& [b, Bb] : B) {
    if (b % 2 || b + 1 >= static_cast<int>(P.size())) continue;
    for (const auto& [a, Pa] : P[b + 1])
      if (a + b <= N) out.at(a + b) += mul(Pa, Bb);
  }
  out.at(0) -= A.at(0);
  return out;
}

}  // namespace

GradedParts<SymbolicPoly> symbolic_anomaly(int N, const std::set<int>& zero) {
  GradedParts<SymbolicPoly> A;
  A.emplace(0, SymbolicPoly::constant(1));
  for (int d = 2; d <= N; d += 2)
    if (!zero.count(d)) A.emplace(d, SymbolicPoly::generator(d));
  return A;
}

GradedParts<SymbolicPoly> invert_anomaly(const GradedParts<SymbolicPoly>& A, int N) {
  if (!(A.at(0) == SymbolicPoly::constant(1))) throw DomainError("anomaly: A_0 must be 1");
  return invert_impl(A, N, SymbolicPoly{}, [](const SymbolicPoly& a, const SymbolicPoly& b) { return a * b; });
}

GradedParts<SymbolicPoly> anomaly_residual(const GradedParts<SymbolicPoly>& A, const GradedParts<SymbolicPoly>& B,
                                           int N) {
  return residual_impl(A, B, N, SymbolicPoly{}, [](const SymbolicPoly& a, const SymbolicPoly& b) { return a * b; });
}

GradedParts<Combination> invert_anomaly(const GradedParts<Combination>& A, int N) {
  if (!A.count(0) || !(A.at(0) == two_leg_unit())) throw DomainError("anomaly: A_0 must be the strut");
  return invert_impl(A, N, Combination(two_leg_support()), two_leg_glue);
}

GradedParts<Combination> anomaly_residual(const GradedParts<Combination>& A, const GradedParts<Combination>& B,
                                          int N) {
  return residual_impl(A, B, N, Combination(two_leg_support()), two_leg_glue);
}

Combination flatten(const GradedParts<Combination>& parts, const Support& s) {
  Combination out(s);
  for (const auto& [d, x] : parts) out.add(x);
  return out;
}

// Crossing, framing, parity ---------------------------------------------------------

Combination crossing_from_anomaly(const Combination& a, int N) {
  if (a.support() != Support::interval()) throw DomainError("crossing: a must live on one interval");
  const Algebra I = Algebra::stacking(Support::interval());
  const Algebra P2 = Algebra::stacking(Support::strands(2));
  Combination half = series_calculus(I, Rational(-1, 2) * a, SeriesOp::Exp, N);
  Combination sides = tensor_product(half, half);
  Combination doubled = series_calculus(P2, Rational(1, 2) * duplicate_part(a, Part::component(0), 2), SeriesOp::Exp, N);
  return P2.multiply(doubled, sides, N);
}

Combination framing_twist(const Combination& x, int component, const Rational& c, const Combination& a, int N) {
  if (a.support() != Support::interval()) throw DomainError("framing: a must live on one interval");
  Combination e = series_calculus(Algebra::stacking(a.support()), c * a, SeriesOp::Exp, N);
  return Algebra::stacking(x.support()).truncate(insert_on_component(e, x, component), N);
}

Combination parity_involution(const Combination& x) {
  Combination out(x.support());
  for (const auto& [code, q] : x.terms()) out.add_code(code, code_degree(code) % 2 ? -q : q);
  return out;
}

}  // namespace jacobi
