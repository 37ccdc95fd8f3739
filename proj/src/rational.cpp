#include "qss/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qss {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
}

std::string Rational::str() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace qss
