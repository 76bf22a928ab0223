#ifndef TORIC_RATIONAL_HPP
#define TORIC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace toric {

// All arithmetic in the library is exact: arbitrary-precision integers and
// canonical rationals (lowest terms, positive denominator).  No floating
// point anywhere.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

// Floor division a/b for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncated
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer rat_floor(const Rational& q) {
  return floor_div(rat_num(q), rat_den(q));
}

// Fractional part in [0, 1).
inline Rational frac_part(const Rational& q) {
  Rational f = q - Rational(rat_floor(q));
  return f;
}

inline bool is_integral(const Rational& q) { return rat_den(q) == 1; }

// Canonical wire format: always "p/q", including "2/1".
inline std::string rational_to_string(const Rational& q) {
  return rat_num(q).str() + "/" + rat_den(q).str();
}

// Accepts "p/q" or bare "p".
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

}  // namespace toric

#endif
