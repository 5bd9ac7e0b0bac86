#include "jacobi/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jacobi/associator.hpp"
#include "jacobi/denominators.hpp"
#include "jacobi/error.hpp"
#include "jacobi/linalg.hpp"
#include "jacobi/morphisms.hpp"
#include "jacobi/quotient.hpp"
#include "jacobi/series.hpp"

namespace jacobi {

namespace {

using Rng = std::mt19937_64;
using Fields = std::vector<std::pair<std::string, std::string>>;

size_t pick(Rng& rng, size_t n) { return n ? static_cast<size_t>(rng() % n) : 0; }

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string str(bool b) { return b ? "true" : "false"; }

struct Builder {
  SuiteResult r;
  void add(const std::string& name, bool pass, Fields fields = {}) { r.checks.push_back({name, pass, std::move(fields)}); }
};

int default_degree(const VerifyConfig& cfg, int d) { return cfg.degree < 0 ? d : cfg.degree; }

QuotientPtr full(const Support& s, int d, std::vector<int> legs = {}) {
  QuotientOptions o;
  o.method = QuotientMethod::Full;
  o.color_legs = std::move(legs);
  return quotient_basis(s, d, o);
}

QuotientPtr chordq(const Support& s, int d) {
  QuotientOptions o;
  o.method = QuotientMethod::Chord;
  return quotient_basis(s, d, o);
}

bool vanishes_graded(const Combination& x, int N) {
  for (int d = 0; d <= N; ++d) {
    Combination p = x.part(d);
    if (!p.empty() && !quotient_basis(x.support(), d)->vanishes(p)) return false;
  }
  return x.max_degree() <= N || x.part(x.max_degree()).empty();
}

Combination single(const Support& s, const std::string& code) {
  Combination x(s);
  x.add_code(code, 1);
  return x;
}

Combination random_combination(Rng& rng, const Support& s, int degree, bool chord_only = false) {
  Combination x(s);
  EnumerateOptions o;
  o.chord_only = chord_only;
  for (const auto& c : enumerate(s, degree, o)) {
    long q = static_cast<long>(pick(rng, 7)) - 3;
    if (q != 0) x.add_code(c.code, q);
  }
  return x;
}

Combination wheel_two_leg() {
  Diagram d(two_leg_support());
  int l1 = d.add_vertex(Vertex::colored(0));
  int l2 = d.add_vertex(Vertex::colored(1));
  int t[4];
  for (int& x : t) x = d.add_vertex(Vertex::trivalent());
  d.connect(half_edge(l1, 0), half_edge(t[0], 0));
  d.connect(half_edge(l2, 0), half_edge(t[1], 0));
  d.connect(half_edge(t[0], 1), half_edge(t[2], 0));
  d.connect(half_edge(t[0], 2), half_edge(t[3], 0));
  d.connect(half_edge(t[1], 1), half_edge(t[2], 1));
  d.connect(half_edge(t[1], 2), half_edge(t[3], 1));
  d.connect(half_edge(t[2], 2), half_edge(t[3], 2));
  return Combination::of(d);
}

// strut times c0 plus random multiples of the two-leg classes of degree 2 and 3.
Combination random_beta(Rng& rng) {
  Combination beta = Rational(static_cast<long>(pick(rng, 3)) + 1) * two_leg_unit();
  for (int d = 2; d <= 3; ++d) {
    for (const auto& c : enumerate(two_leg_support(), d, EnumerateOptions::legs({1, 1}))) {
      if (decode_diagram(two_leg_support(), c.code).num_univalent() != 2) continue;
      beta.add_code(c.code, Rational(static_cast<long>(pick(rng, 5)) - 2, static_cast<long>(pick(rng, 3)) + 1));
    }
  }
  return beta;
}

std::vector<Canonical> two_leg_classes(int d) {
  std::vector<Canonical> out;
  for (const auto& c : enumerate(two_leg_support(), d, EnumerateOptions::legs({1, 1})))
    if (decode_diagram(two_leg_support(), c.code).num_univalent() == 2) out.push_back(c);
  return out;
}

// Suites ----------------------------------------------------------------------------

SuiteResult suite_stu4t(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 4);
  const int expected[] = {1, 1, 2, 3, 6};
  const Support S = Support::circle();
  for (int n = 0; n <= N; ++n) {
    int f = full(S, n)->dim();
    int c = chordq(S, n)->dim();
    bool ok = f == c && (n > 4 || f == expected[n]);
    Fields fields{{"degree", str(n)}, {"full", str(f)}, {"chord4t", str(c)}};
    if (n <= 4) fields.emplace_back("expected", str(expected[n]));
    b.add("dim-S1", ok, fields);
  }
  for (const Support& s : {Support::circle(), Support::interval(), Support::strands(2)}) {
    for (int n = 1; n <= std::min(N, 3); ++n) {
      auto q = full(s, n);
      int bad = 0;
      auto rels = four_t_relations(s, n);
      for (const auto& r : rels) bad += !q->vanishes(r);
      b.add("four-t", bad == 0,
            {{"support", s.to_string()}, {"degree", str(n)}, {"relations", str(rels.size())}, {"nonzero", str(bad)}});
    }
  }
  for (int n = 1; n <= std::min(N, 3); ++n) {
    auto q = full(S, n);
    int bad = 0, nonintegral = 0, count = 0;
    for (const auto& c : enumerate(S, n)) {
      Combination x = single(S, c.code);
      Combination ch = chordify(x);
      ++count;
      nonintegral += ch.denominator() != 1;
      bad += q->reduce(x) != q->reduce(ch);
    }
    b.add("chordify", bad == 0 && nonintegral == 0,
          {{"degree", str(n)}, {"classes", str(count)}, {"mismatch", str(bad)}, {"nonintegral", str(nonintegral)}});
  }
  for (int n = 1; n <= std::min(N, 3); ++n) {
    auto q = chordq(S, n);
    int bad = 0, count = 0;
    for (RelationKind k : {RelationKind::STU, RelationKind::IHX}) {
      for (const auto& r : generate_relations(k, S, n)) {
        ++count;
        bad += !q->vanishes(r);
      }
    }
    b.add("stu-ihx-in-chord-quotient", bad == 0, {{"degree", str(n)}, {"relations", str(count)}, {"nonzero", str(bad)}});
  }
  return b.r;
}

SuiteResult suite_slide(const VerifyConfig& cfg) {
  Builder b;
  const int N = std::max(1, default_degree(cfg, 3));
  Rng rng(cfg.seed);
  const std::vector<Support> supports{Support::circle(), Support::interval(), Support::strands(2)};
  const int samples = 100;
  int zero = 0, terms = 0, attempts = 0, inadmissible = 0;
  std::map<std::string, int> per_support;
  std::string first_failure;
  for (int i = 0; i < samples; ++i) {
    std::optional<SlideSpec> spec;
    Support s;
    int degree = 0;
    Combination rel;
    // Samples whose relation cancels already at the level of diagrams are redrawn.
    while (rel.empty()) {
      ++attempts;
      s = supports[pick(rng, supports.size())];
      degree = 1 + static_cast<int>(pick(rng, N));
      spec = random_slide_spec(rng, s, degree);
      if (spec) rel = slide_relation(*spec);
      else ++inadmissible;
    }
    terms += static_cast<int>(rel.size());
    ++per_support[s.to_string()];
    if (full(s, degree)->vanishes(rel)) {
      ++zero;
    } else if (first_failure.empty()) {
      first_failure = s.to_string() + ":" + code_hex(canonicalize(spec->gamma1).code);
    }
  }
  Fields f{{"samples", str(samples)}, {"zero", str(zero)}, {"terms", str(terms)}, {"attempts", str(attempts)}, {"inadmissible", str(inadmissible)}};
  for (const auto& [s, c] : per_support) f.emplace_back("on-" + s, str(c));
  if (!first_failure.empty()) f.emplace_back("first-failure", first_failure);
  b.add("random-slides", zero == samples, f);
  return b.r;
}

SuiteResult suite_pbw(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 3);
  const Support I = Support::interval();
  const Support X = Support::colored({"x"});
  for (int n = 1; n <= N; ++n) {
    auto qa = quotient_basis(I, n);
    int dim_b = 0;
    std::vector<Coordinates> images;
    for (int k = 1; k <= 2 * n; ++k) {
      auto qb = full(X, n, {k});
      dim_b += qb->dim();
      for (int j = 0; j < qb->dim(); ++j) images.push_back(qa->reduce(pbw_symmetrize(qb->basis_element(j))));
    }
    int rank = matrix_rank(images);
    b.add("chi-bijective", rank == qa->dim() && dim_b == qa->dim(),
          {{"degree", str(n)}, {"dimA", str(qa->dim())}, {"dimB", str(dim_b)}, {"rank", str(rank)}});
  }
  {
    LegProjection p = pbw_inverse(chord(I, 0, 0));
    bool ok = p.pi.size() == 1 && p.pi.count(2) && p.pi.at(2) == strut(X, 0, 0);
    b.add("chord-projection", ok, {{"parts", str(p.pi.size())}});
  }
  for (int n = 1; n <= N; ++n) {
    int count = 0, nonintegral = 0, above = 0, reassembly = 0;
    BigInt worst = 1;
    auto qa = quotient_basis(I, n);
    for (const auto& c : enumerate(I, n)) {
      ++count;
      Combination x = single(I, c.code);
      const int u = decode_diagram(I, c.code).num_legs_on(0);
      LegProjection p = pbw_inverse(x);
      Combination back(I);
      for (const auto& [k, part] : p.pi) {
        if (k > u) ++above;
        BigInt den = combo_denominator(Rational(pbw_factor(k, u)) * part);
        nonintegral += den != 1;
        worst = std::max(worst, part.denominator());
        back.add(pbw_symmetrize(part));
      }
      if (!p.vanish_above_u) ++above;
      reassembly += !qa->vanishes(back - x);
    }
    b.add("integrality", nonintegral == 0 && above == 0 && reassembly == 0,
          {{"degree", str(n)},
           {"diagrams", str(count)},
           {"nonintegral", str(nonintegral)},
           {"nonzero-above-u", str(above)},
           {"reassembly-failures", str(reassembly)},
           {"largest-denominator", str(worst)}});
  }
  return b.r;
}

SuiteResult suite_eigen(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 3);
  const Support I = Support::interval();
  const Support X = Support::colored({"x"});
  for (int n = 1; n <= N; ++n) {
    auto q = quotient_basis(I, n);
    const int d = q->dim();
    std::vector<Coordinates> a(d, Coordinates(d, 0));
    for (int j = 0; j < d; ++j) {
      Coordinates col = q->reduce(adams_operation(q->basis_element(j), 2));
      for (int i = 0; i < d; ++i) a[i][j] = col[i] - (i == j ? 4 : 0);
    }
    auto kernel = null_space(a, d);
    auto qb = full(X, n, {2});
    std::vector<Coordinates> chi;
    int outside = 0;
    for (int j = 0; j < qb->dim(); ++j) {
      Coordinates v = q->reduce(pbw_symmetrize(qb->basis_element(j)));
      for (int i = 0; i < d; ++i) {
        Rational s = 0;
        for (int k = 0; k < d; ++k) s += a[i][k] * v[k];
        if (s != 0) {
          ++outside;
          break;
        }
      }
      chi.push_back(std::move(v));
    }
    int chi_rank = matrix_rank(chi);
    std::vector<Coordinates> both = kernel;
    both.insert(both.end(), chi.begin(), chi.end());
    int joint = matrix_rank(both);
    int kdim = static_cast<int>(kernel.size());
    bool ok = outside == 0 && chi_rank == kdim && joint == kdim;
    b.add("eigenvalue-4", ok,
          {{"degree", str(n)},
           {"dimA", str(d)},
           {"eigenspace", str(kdim)},
           {"chi-two-leg", str(chi_rank)},
           {"joint-rank", str(joint)}});
  }
  return b.r;
}

SuiteResult suite_vogel(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 4);
  for (int d = 1; d <= N; ++d) {
    auto q = full(two_leg_support(), d, {1, 1});
    int count = 0, bad = 0;
    for (const auto& c : two_leg_classes(d)) {
      ++count;
      Combination x = single(two_leg_support(), c.code);
      bad += !q->vanishes(leg_swap(x) - x);
    }
    b.add("leg-swap-fixes-classes", bad == 0,
          {{"degree", str(d)}, {"classes", str(count)}, {"dim", str(q->dim())}, {"moved", str(bad)}});
  }
  return b.r;
}

SuiteResult suite_psi(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 4);
  Rng rng(cfg.seed);
  const Support S = Support::circle();
  {
    int count = 0, bad_id = 0, bad_scale = 0;
    const Rational c(-3, 2);
    for (int n = 0; n <= N; ++n) {
      Rational cn = 1;
      for (int i = 0; i < n; ++i) cn *= c;
      for (const auto& k : enumerate(S, n)) {
        ++count;
        Combination x = single(S, k.code);
        bad_id += !(psi_apply(two_leg_unit(), x, N) == x);
        bad_scale += !(psi_apply(c * two_leg_unit(), x, N) == cn * x);
      }
    }
    b.add("strut-is-identity", bad_id == 0, {{"classes", str(count)}, {"failures", str(bad_id)}});
    b.add("scaled-strut", bad_scale == 0, {{"c", "-3/2"}, {"classes", str(count)}, {"failures", str(bad_scale)}});
  }
  {
    std::vector<std::string> codes;
    for (int n = 1; n < N; ++n)
      for (const auto& k : enumerate(S, n)) codes.push_back(k.code);
    const int samples = 100;
    int equal = 0;
    for (int i = 0; i < samples; ++i) {
      Combination beta = random_beta(rng);
      Combination x = single(S, codes[pick(rng, codes.size())]);
      Combination a = psi_apply(beta, x, N);
      Combination c = psi_apply(beta, x, N, random_locus(rng));
      equal += vanishes_graded(a - c, N);
    }
    b.add("locus-independence", equal == samples, {{"samples", str(samples)}, {"equal", str(equal)}});
  }
  {
    const Support I = Support::interval();
    const Algebra alg = Algebra::stacking(I);
    const int samples = 50;
    int equal = 0;
    for (int i = 0; i < samples; ++i) {
      Combination beta = random_beta(rng);
      Combination x = random_combination(rng, I, 1 + static_cast<int>(pick(rng, 2)));
      Combination y = random_combination(rng, I, 1 + static_cast<int>(pick(rng, 2)));
      x.add(Combination::unit(I), static_cast<long>(pick(rng, 3)));
      Combination lhs = psi_apply(beta, alg.multiply(x, y, N), N);
      Combination rhs = alg.multiply(psi_apply(beta, x, N), psi_apply(beta, y, N), N);
      equal += vanishes_graded(lhs - rhs, N);
    }
    b.add("multiplicative", equal == samples, {{"samples", str(samples)}, {"equal", str(equal)}});
  }
  return b.r;
}

SuiteResult suite_bseries(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 6);
  {
    auto A = symbolic_anomaly(N, {2});
    auto B = invert_anomaly(A, N);
    const std::map<int, std::string> pinned{{2, "0"}, {4, "-A_4"}, {6, "-A_6"}};
    for (const auto& [d, want] : pinned) {
      if (d > N) continue;
      std::string got = B.at(d).to_string();
      b.add("B" + str(d) + "-with-A2-zero", got == want, {{"value", got}, {"expected", want}});
    }
    Fields f;
    bool ok = true;
    for (const auto& [d, poly] : B) {
      if (d == 0) continue;
      f.emplace_back("B" + str(d), poly.to_string());
    }
    for (const auto& [d, r] : anomaly_residual(A, B, N)) ok = ok && r.empty();
    f.emplace_back("N", str(N));
    b.add("forward-identity-A2-zero", ok, f);
  }
  {
    auto A = symbolic_anomaly(N);
    auto B = invert_anomaly(A, N);
    bool ok = true, integral = true;
    for (const auto& [d, r] : anomaly_residual(A, B, N)) ok = ok && r.empty();
    for (const auto& [d, poly] : B)
      for (const auto& [m, c] : poly.terms()) integral = integral && c.get_den() == 1;
    Fields f{{"N", str(N)}};
    if (B.count(2)) f.emplace_back("B2", B.at(2).to_string());
    if (B.count(4)) f.emplace_back("B4", B.at(4).to_string());
    b.add("forward-identity-generic", ok && (!B.count(2) || B.at(2).to_string() == "-A_2"), f);
    b.add("integral-coefficients", integral, {{"N", str(N)}});
  }
  if (!cfg.symbolic) {
    const int Nd = std::min(N, 4);
    const Support S = Support::circle();
    GradedParts<Combination> A;
    A.emplace(0, two_leg_unit());
    A.emplace(2, wheel_two_leg());
    auto B = invert_anomaly(A, Nd);
    bool residual_zero = true;
    for (const auto& [d, r] : anomaly_residual(A, B, Nd)) residual_zero = residual_zero && r.empty();
    Combination a = flatten(A, two_leg_support());
    Combination bb = flatten(B, two_leg_support());
    int count = 0, bad = 0;
    for (int n = 0; n <= Nd; ++n) {
      for (const auto& c : enumerate(S, n, EnumerateOptions::chords())) {
        ++count;
        Combination x = single(S, c.code);
        bad += !vanishes_graded(psi_apply(a, psi_apply(bb, x, Nd), Nd) - x, Nd);
      }
    }
    b.add("diagram-forward-identity", residual_zero, {{"N", str(Nd)}, {"A2", "two-leg wheel"}});
    b.add("psi-A-after-psi-B-is-identity", bad == 0,
          {{"N", str(Nd)}, {"chord-classes", str(count)}, {"failures", str(bad)}});
  }
  return b.r;
}

SuiteResult suite_eqtwist(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 3);
  const Support I = Support::interval();
  const Support P2 = Support::strands(2);
  Combination half = Rational(1, 2) * chord(I, 0, 0);
  {
    Combination z = crossing_from_anomaly(half, 1);
    Combination want = Combination::unit(P2) + Rational(1, 2) * chord(P2, 0, 1);
    b.add("degree-one", z == want, {{"terms", str(z.size())}});
    Combination z2 = crossing_from_anomaly(Rational(2) * half, 1);
    b.add("not-linear", !(z2 == Rational(2) * z));
  }
  Combination a = half;
  for (int n = 2; n <= N; ++n)
    for (const auto& c : enumerate(I, n)) a.add_code(c.code, Rational(1, 7));
  Combination z = crossing_from_anomaly(a, N);
  b.add("strand-exchange", vanishes_graded(permute_components(z, {1, 0}) - z, N), {{"N", str(N)}});
  const Algebra p2 = Algebra::stacking(P2);
  const Algebra i1 = Algebra::stacking(I);
  Combination e = series_calculus(p2, Rational(1, 2) * duplicate_part(a, Part::component(0), 2), SeriesOp::Exp, N);
  Combination h = series_calculus(i1, Rational(-1, 2) * a, SeriesOp::Exp, N);
  Combination t = tensor_product(h, h);
  b.add("factors-commute", vanishes_graded(p2.multiply(e, t, N) - p2.multiply(t, e, N), N), {{"N", str(N)}});
  return b.r;
}

SuiteResult suite_coboundary(const VerifyConfig& cfg) {
  Builder b;
  const int N = default_degree(cfg, 2);
  Rng rng(cfg.seed);
  const Support P2 = Support::strands(2);
  {
    int count = 0, bad = 0;
    for (int k = 0; k <= N; ++k) {
      auto q = quotient_basis(P2, k);
      for (int j = 0; j < q->dim(); ++j) {
        ++count;
        bad += !reduce_residual(coboundary(coboundary(q->basis_element(j))), k).zero();
      }
    }
    b.add("d-squared", bad == 0, {{"N", str(N)}, {"basis-elements", str(count)}, {"nonzero", str(bad)}});
  }
  const int k = std::min(N, 2);
  {
    int pass = 0, nontrivial = 0;
    const int samples = 20;
    for (int i = 0; i < samples; ++i) {
      Combination psi = coboundary(make_admissible(random_combination(rng, P2, k, true)));
      nontrivial += !reduce_residual(psi, k).zero();
      pass += check_psi_constraints(psi, k).all();
    }
    b.add("constraints-on-coboundaries", pass == samples && nontrivial > 0,
          {{"degree", str(k)}, {"samples", str(samples)}, {"pass", str(pass)}, {"nontrivial", str(nontrivial)}});
  }
  {
    ConstraintReport r = check_psi_constraints(chord(Support::strands(3), 0, 1), 1);
    b.add("a12-violates-c4", !r.c4, {{"c1", str(r.c1)}, {"c2", str(r.c2)}, {"c3", str(r.c3)}, {"c4", str(r.c4)}});
  }
  for (int d = 1; d <= k; ++d) {
    int ok = 0;
    const int samples = 5;
    for (int i = 0; i < samples; ++i) {
      Combination psi = coboundary(make_admissible(random_combination(rng, P2, d, true)));
      auto f = solve_coboundary(psi, d);
      ok += f && reduce_residual(coboundary(*f) - psi, d).zero() && reduce_residual(epsilon(*f, 1), d).zero() &&
            reduce_residual(permute_strands(*f, {2, 1}) - *f, d).zero();
    }
    b.add("solve-round-trip", ok == samples, {{"degree", str(d)}, {"samples", str(samples)}, {"exact", str(ok)}});
  }
  return b.r;
}

SuiteResult suite_pentagon_hexagon(const VerifyConfig& cfg) {
  Builder b;
  const int N = std::max(2, default_degree(cfg, 2));
  const Combination a12 = chord(Support::strands(3), 0, 1);
  b.add("pentagon-unit", check_pentagon(strand_unit(3), N).zero(), {{"N", str(N)}});
  Residual p = check_pentagon(strand_unit(3) + a12, 1);
  bool minus_a12 = reduce_residual(p.raw + chord(Support::strands(4), 0, 1), 1).zero();
  b.add("pentagon-1+a12", minus_a12 && p.norm == 1, {{"residual", "-a12"}, {"norm", str(p.norm)}});
  const Algebra p2 = Algebra::stacking(Support::strands(2));
  const Combination r = Rational(1, 2) * chord(Support::strands(2), 0, 1);
  b.add("hexagon-unit", check_hexagon(strand_unit(3), strand_unit(2), N).zero(), {{"N", str(N)}});
  Residual h1 = check_hexagon(strand_unit(3), series_calculus(p2, r, SeriesOp::Exp, 1), 1);
  b.add("hexagon-degree-1", h1.zero(), {{"norm", str(h1.norm)}});
  Residual h2 = check_hexagon(strand_unit(3), series_calculus(p2, r, SeriesOp::Exp, 2), 2);
  const Algebra p3 = Algebra::stacking(Support::strands(3));
  Combination a13 = chord(Support::strands(3), 0, 2), a23 = chord(Support::strands(3), 1, 2);
  Combination comm = p3.multiply(a13, a23, 2) - p3.multiply(a23, a13, 2);
  bool proportional = reduce_residual(h2.raw - Rational(1, 8) * comm, 2).zero();
  b.add("hexagon-degree-2", !h2.zero() && proportional, {{"norm", str(h2.norm)}, {"residual", "[a13,a23]/8"}});
  return b.r;
}

SuiteResult suite_denominators(const VerifyConfig& cfg) {
  Builder b;
  const int max = cfg.max;
  {
    BigInt d3 = bound_d(3), D1 = bound_D(1);
    b.add("d(3)", d3 == 3840, {{"value", str(d3)}, {"expected", "5!*2^5=3840"}});
    b.add("D(1)", D1 == 3840, {{"value", str(D1)}, {"expected", "5!*2^5=3840"}});
    BigInt D4 = factorial_product(2, 4) * factorial(4) * 9 * factorial(23);
    D4 <<= 19;
    DenominatorBound b4 = bound(BoundKind::Big, 4);
    b.add("D(4)", b4.value == D4 && expand(b4.factorization) == b4.value,
          {{"value", str(b4.value)}, {"factorization", factorization_to_string(b4.factorization)}});
  }
  {
    bool mono = true;
    for (int p = 5; p < max; ++p)
      mono = mono && bound_d(p) < bound_d(p + 1) && bound_D(p) < bound_D(p + 1) && bound_D2(p) < bound_D2(p + 1);
    b.add("monotone", mono, {{"range", "5.." + str(max)}});
    b.add("branch-boundary", bound_d(9) >= bound_d(8));
  }
  for (const auto& id : obligation_ids()) {
    Certificate c = verify_obligation(id, max);
    Fields f{{"statement", c.statement}, {"range", c.range}, {"checked", str(c.checked)}};
    if (!c.pass) f.emplace_back("witness", c.witness);
    b.add("obligation-" + id, c.pass, f);
  }
  {
    Certificate c = verify_obligation("D-odd", max, true);
    b.add("mutation-detected", !c.pass && !c.witness.empty(),
          {{"mutation", "drop 3^2 from d(n) for odd n >= 9"}, {"witness", c.witness}});
  }
  return b.r;
}

std::string escape(const std::string& v) {
  if (v.find(' ') == std::string::npos) return v;
  return "\"" + v + "\"";
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"slide",      "stu4t",           "pbw",          "eigen",
                                              "vogel",      "psi",             "bseries",      "coboundary",
                                              "pentagon-hexagon", "denominators", "eqtwist"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg) {
  SuiteResult r;
  if (name == "slide") r = suite_slide(cfg);
  else if (name == "stu4t") r = suite_stu4t(cfg);
  else if (name == "pbw") r = suite_pbw(cfg);
  else if (name == "eigen") r = suite_eigen(cfg);
  else if (name == "vogel") r = suite_vogel(cfg);
  else if (name == "psi") r = suite_psi(cfg);
  else if (name == "bseries") r = suite_bseries(cfg);
  else if (name == "coboundary") r = suite_coboundary(cfg);
  else if (name == "pentagon-hexagon") r = suite_pentagon_hexagon(cfg);
  else if (name == "denominators") r = suite_denominators(cfg);
  else if (name == "eqtwist") r = suite_eqtwist(cfg);
  else throw DomainError("unknown suite '" + name + "'");
  r.suite = name;
  return r;
}

std::string format_text(const SuiteResult& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << "[" << (c.pass ? "pass" : "FAIL") << "] " << r.suite << "/" << c.name;
    if (!c.fields.empty()) os << ":";
    for (const auto& [k, v] : c.fields) os << " " << k << "=" << escape(v);
    os << "\n";
  }
  os << "result " << r.suite << ": " << (r.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string format_structured(const SuiteResult& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << "suite=" << r.suite << " check=" << c.name << " status=" << (c.pass ? "pass" : "fail");
    for (const auto& [k, v] : c.fields) os << " " << k << "=" << escape(v);
    os << "\n";
  }
  os << "suite=" << r.suite << " result=" << (r.pass() ? "pass" : "fail") << "\n";
  return os.str();
}

std::optional<SlideSpec> random_slide_spec(std::mt19937_64& rng, const Support& support, int degree) {
  auto classes = enumerate(support, degree);
  if (classes.empty()) return std::nullopt;
  Diagram g = decode_diagram(support, classes[pick(rng, classes.size())].code);
  const int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  const int v = static_cast<int>(pick(rng, n));
  const Vertex vv = g.vertex(v);
  if (vv.kind == VertexKind::Color) return std::nullopt;
  HalfEdge beta = half_edge(v, vv.univalent() ? 0 : static_cast<int>(pick(rng, 3)));
  HalfEdge z = g.mate(beta);
  if (vertex_of(z) == v) return std::nullopt;

  SlideSpec spec;
  spec.gamma1 = g;
  spec.v = v;
  spec.beta = beta;
  std::set<int> inside;
  for (int c = 0; c < support.num_components(); ++c) {
    std::vector<int> legs;
    for (int x : g.legs_on(c))
      if (x != v) legs.push_back(x);
    const int k = static_cast<int>(legs.size());
    const size_t mode = pick(rng, 4);
    if (mode == 0) continue;
    SkeletonSegment seg;
    seg.component = c;
    if (mode == 1 && support.components[c] == ComponentKind::Circle) {
      seg.whole = true;
      seg.end = k;
    } else {
      seg.begin = static_cast<int>(pick(rng, k + 1));
      seg.end = seg.begin + static_cast<int>(pick(rng, k - seg.begin + 1));
    }
    for (int r = seg.begin; r < seg.end; ++r) inside.insert(legs[r]);
    spec.segments.push_back(seg);
  }
  for (int x = 0; x < n; ++x)
    if (x != v && x != vertex_of(z) && g.vertex(x).kind == VertexKind::Trivalent && pick(rng, 2)) inside.insert(x);
  if (inside.count(vertex_of(z))) return std::nullopt;
  spec.inside.assign(inside.begin(), inside.end());
  try {
    slide_relation(spec);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  return spec;
}

}  // namespace jacobi
