#include "coopgame/rational.hpp"

#include <stdexcept>

namespace coopgame {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& value) { return value.get_str(); }

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a < 0 || b < 0) throw std::invalid_argument("rational_gcd expects nonnegative inputs");
  // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
  mpz_class num;
  mpz_gcd(num.get_mpz_t(), mpz_class(a.get_num() * b.get_den()).get_mpz_t(),
          mpz_class(b.get_num() * a.get_den()).get_mpz_t());
  Rational g(num, a.get_den() * b.get_den());
  g.canonicalize();
  return g;
}

}  // namespace coopgame
