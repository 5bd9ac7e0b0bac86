#include "jacobi/rational.hpp"

#include "jacobi/error.hpp"

namespace jacobi {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw DomainError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace jacobi
