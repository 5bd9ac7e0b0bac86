#include "jacobi/denominators.hpp"

#include <mutex>
#include <sstream>

#include "jacobi/error.hpp"
#include "jacobi/relations.hpp"

namespace jacobi {

namespace {

BigInt pow2(int e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

BigInt fact(int n) { return factorial(static_cast<unsigned>(n)); }

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<unsigned long> ps;
  for (unsigned long i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    ps.push_back(i);
    for (unsigned long j = i * i; j <= n; j += i) composite[j] = true;
  }
  return ps;
}

int valuation(const BigInt& x, unsigned long p) {
  BigInt pp = p, rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t()));
}

struct Check {
  Certificate cert;
  // Records a | b for the tuple; keeps the first failure.
  void operator()(const BigInt& a, const BigInt& b, const std::string& tuple) {
    ++cert.checked;
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return;
    if (!cert.pass) return;
    cert.pass = false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    BigInt excess = a / g;
    unsigned long p = 2;
    while (!mpz_divisible_ui_p(excess.get_mpz_t(), p)) ++p;
    std::ostringstream os;
    os << tuple << " prime " << p << " exponent " << valuation(a, p) << " > " << valuation(b, p);
    cert.witness = os.str();
  }
};

std::mutex g_mutex;
std::map<std::pair<int, int>, BigInt> g_memo;

template <class F>
BigInt memo(int kind, int p, F f) {
  {
    std::lock_guard lock(g_mutex);
    auto it = g_memo.find({kind, p});
    if (it != g_memo.end()) return it->second;
  }
  BigInt v = f();
  std::lock_guard lock(g_mutex);
  g_memo.emplace(std::pair(kind, p), v);
  return v;
}

}  // namespace

std::string kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Small: return "d";
    case BoundKind::Big: return "D";
    case BoundKind::TwoLeg: return "D2";
  }
  return "?";
}

BoundKind parse_kind(const std::string& s) {
  if (s == "d") return BoundKind::Small;
  if (s == "D") return BoundKind::Big;
  if (s == "D2") return BoundKind::TwoLeg;
  throw ParseError("unknown bound kind '" + s + "' (expected d, D or D2)", 1, 1);
}

BigInt factorial_product(int a, int b) {
  BigInt r = 1;
  for (int i = a; i <= b; ++i) r *= fact(i);
  return r;
}

BigInt bound_d(int n, bool drop_nine) {
  if (n < 3) throw DomainError("d(n) is defined for n >= 3");
  const int kind = drop_nine ? 1 : 0;
  return memo(kind, n, [&] {
    if (n <= 8) return BigInt(fact(3 * n - 4) * pow2(3 * n - 4));
    BigInt nine = drop_nine && n % 2 ? 1 : 9;
    if (n % 2) return BigInt(factorial_product(2, n - 5) * fact(n - 5) * nine * fact(3 * n - 4) * pow2(2 * n + 1));
    return BigInt(factorial_product(2, n - 6) * fact(n - 6) * 9 * fact(3 * n - 4) * pow2(2 * n - 1));
  });
}

BigInt bound_D(int k) {
  if (k < 1) throw DomainError("D(k) is defined for k >= 1");
  return memo(2, k, [&] {
    if (k <= 3) return BigInt(fact(6 * k - 1) * pow2(6 * k - 1));
    return BigInt(factorial_product(2, 2 * k - 4) * fact(2 * k - 4) * 9 * fact(6 * k - 1) * pow2(4 * k + 3));
  });
}

BigInt bound_D2(int n) {
  if (n < 5) throw DomainError("D(2;n) is defined for n >= 5");
  return memo(3, n, [&] {
    return BigInt(factorial_product(2, n - 1) * (fact(n - 1) / fact(n - 4)) * fact(3 * n - 4) * pow2(2 * n - 3));
  });
}

DenominatorBound bound(BoundKind kind, int parameter) {
  DenominatorBound b{kind, parameter, 0, {}};
  switch (kind) {
    case BoundKind::Small: b.value = bound_d(parameter); break;
    case BoundKind::Big: b.value = bound_D(parameter); break;
    case BoundKind::TwoLeg: b.value = bound_D2(parameter); break;
  }
  b.factorization = factorize(b.value, static_cast<unsigned long>(6 * parameter + 8));
  return b;
}

Factorization factorize(const BigInt& value, unsigned long limit) {
  if (value <= 0) throw DomainError("factorize: positive value expected");
  Factorization f;
  BigInt rest = value;
  for (unsigned long p : primes_up_to(limit)) {
    if (rest == 1) break;
    BigInt pp = p;
    int e = static_cast<int>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pp.get_mpz_t()));
    if (e > 0) f[p] = e;
  }
  if (rest != 1) throw Error("factorize: prime factor above the trial-division limit");
  return f;
}

BigInt expand(const Factorization& f) {
  BigInt r = 1;
  for (const auto& [p, e] : f) {
    BigInt pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, static_cast<unsigned long>(e));
    r *= pe;
  }
  return r;
}

std::string factorization_to_string(const Factorization& f) {
  std::string s;
  for (const auto& [p, e] : f) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string Certificate::to_text() const {
  std::ostringstream os;
  os << "obligation: " << id << "\n"
     << "statement: " << statement << "\n"
     << "range: " << range << "\n"
     << "checked: " << checked << "\n"
     << "result: " << (pass ? "pass" : "fail") << "\n";
  if (!pass) os << "witness: " << witness << "\n";
  return os.str();
}

const std::vector<std::string>& obligation_ids() {
  static const std::vector<std::string> ids{"d-base", "D-odd", "D-even", "D-mixed", "Dmult", "D2n-low", "D2n-top"};
  return ids;
}

Certificate verify_obligation(const std::string& id, int max, bool mutate) {
  Check c;
  c.cert.id = id;
  auto d = [mutate](int n) { return bound_d(n, mutate); };
  const std::string m = std::to_string(max);
  if (id == "d-base") {
    c.cert.statement = "(3n-4)! 2^(3n-4) | d(n)";
    c.cert.range = "3 <= n <= " + m;
    for (int n = 3; n <= max; ++n) c(fact(3 * n - 4) * pow2(3 * n - 4), d(n), "n=" + std::to_string(n));
  } else if (id == "D-odd") {
    c.cert.statement = "D(k) | d(2k+1)";
    c.cert.range = "1 <= k <= " + m;
    for (int k = 1; k <= max; ++k) c(bound_D(k), d(2 * k + 1), "k=" + std::to_string(k));
  } else if (id == "D-even") {
    c.cert.statement = "24 D(k) | d(2k+2)";
    c.cert.range = "1 <= k <= " + m;
    for (int k = 1; k <= max; ++k) c(24 * bound_D(k), d(2 * k + 2), "k=" + std::to_string(k));
  } else if (id == "D-mixed") {
    c.cert.statement = "(3r-4)! 2^(3r-4) D(k) | d(2k+r)";
    c.cert.range = "1 <= k <= " + m + ", 3 <= r <= " + m;
    for (int k = 1; k <= max; ++k)
      for (int r = 3; r <= max; ++r)
        c(fact(3 * r - 4) * pow2(3 * r - 4) * bound_D(k), d(2 * k + r),
          "k=" + std::to_string(k) + " r=" + std::to_string(r));
  } else if (id == "Dmult") {
    c.cert.statement = "D(k1) D(k2) | D(k1+k2)";
    c.cert.range = "k1, k2 >= 1, k1 + k2 <= " + m;
    for (int k1 = 1; k1 < max; ++k1)
      for (int k2 = 1; k1 + k2 <= max; ++k2)
        c(bound_D(k1) * bound_D(k2), bound_D(k1 + k2), "k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));
  } else if (id == "D2n-low" || id == "D2n-top") {
    const bool top = id == "D2n-top";
    c.cert.statement = top ? "d_(n+1) | 2 D(2;n), d_u = 2!3!...(u-1)! (3n-u)! 2^(3n-u)"
                           : "d_u | 2 D(2;n) for 4 <= u <= n, d_u = 2!3!...(u-1)! (3n-u)! 2^(3n-u)";
    c.cert.range = "5 <= n <= " + m;
    for (int n = 5; n <= max; ++n) {
      BigInt target = 2 * bound_D2(n);
      for (int u = top ? n + 1 : 4; u <= (top ? n + 1 : n); ++u)
        c(factorial_product(2, u - 1) * fact(3 * n - u) * pow2(3 * n - u), target,
          "n=" + std::to_string(n) + " u=" + std::to_string(u));
    }
  } else {
    throw DomainError("unknown obligation '" + id + "'");
  }
  if (mutate) c.cert.statement += " (perturbed d)";
  return c.cert;
}

BigInt combo_denominator(const Combination& x) {
  if (!x.support().has_colors()) return chordify(x).denominator();
  return x.denominator();
}

BigInt combo_denominator(const Coordinates& c) {
  BigInt l = 1;
  for (const auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace jacobi
