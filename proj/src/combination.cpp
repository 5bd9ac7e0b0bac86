#include "jacobi/combination.hpp"

#include <optional>

#include "jacobi/error.hpp"

namespace jacobi {

Combination Combination::of(const Diagram& d, const Rational& c) {
  Combination out(d.support());
  out.add(d, c);
  return out;
}

Combination Combination::unit(const Support& support) { return of(Diagram(support)); }

void Combination::add(const Diagram& d, const Rational& c) {
  if (c == 0) return;
  if (d.support() != support_) throw DomainError("support mismatch in combination");
  Canonical k = canonicalize(d);
  if (k.zero()) return;
  add_code(k.code, k.sign > 0 ? c : Rational(-c));
}

void Combination::add_code(const std::string& code, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(code, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Combination::add(const Combination& other, const Rational& c) {
  if (other.empty() || c == 0) return;
  if (other.support_ != support_) throw DomainError("support mismatch in combination");
  for (const auto& [code, q] : other.terms_) add_code(code, q * c);
}

Rational Combination::coefficient(const std::string& code) const {
  auto it = terms_.find(code);
  return it == terms_.end() ? Rational(0) : it->second;
}

Combination& Combination::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [code, q] : terms_) q *= c;
  return *this;
}

Combination Combination::part(int degree) const {
  Combination out(support_);
  for (const auto& [code, q] : terms_)
    if (code_degree(code) == degree) out.terms_.emplace(code, q);
  return out;
}

int Combination::max_degree() const {
  int d = -1;
  for (const auto& [code, q] : terms_) d = std::max(d, code_degree(code));
  return d;
}

bool Combination::homogeneous(int degree) const {
  for (const auto& [code, q] : terms_)
    if (code_degree(code) != degree) return false;
  return true;
}

Combination Combination::map(const Support& target, const std::function<Combination(const Diagram&)>& f) const {
  Combination out(target);
  for (const auto& [code, q] : terms_) out.add(f(decode_diagram(support_, code)), q);
  return out;
}

BigInt Combination::denominator() const {
  BigInt l = 1;
  for (const auto& [code, q] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

void Combination::for_each(const std::function<void(const Diagram&, const Rational&)>& f) const {
  for (const auto& [code, q] : terms_) f(decode_diagram(support_, code), q);
}

std::string Combination::to_text() const {
  std::string out;
  for (const auto& [code, q] : terms_) {
    if (!out.empty()) out += '\n';
    out += "coeff: " + q.get_str() + "\n";
    out += serialize_diagram(decode_diagram(support_, code));
  }
  return out;
}

Combination parse_combination(std::string_view text) {
  std::optional<Combination> out;
  for (const auto& [first, block] : split_blocks(text)) {
    std::string_view body = block;
    Rational c = 1;
    int offset = 0;
    if (body.substr(0, 6) == "coeff:") {
      size_t nl = body.find('\n');
      std::string value(body.substr(6, nl == std::string_view::npos ? nl : nl - 6));
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t\r") + 1);
      try {
        c = parse_rational(value);
      } catch (const Error&) {
        throw ParseError("bad coefficient '" + value + "'", first, 7);
      }
      body = nl == std::string_view::npos ? std::string_view{} : body.substr(nl + 1);
      offset = 1;
    }
    Diagram d;
    try {
      d = parse_diagram(body);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2),
                       first + offset + e.line() - 1, e.column());
    }
    if (!out) out.emplace(d.support());
    if (d.support() != out->support()) throw ParseError("support differs from the first block", first + offset, 1);
    out->add(d, c);
  }
  if (!out) throw ParseError("no diagram in input", 1, 1);
  return *out;
}

}  // namespace jacobi
