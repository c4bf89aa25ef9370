#ifndef SUPERLIE_RATIONAL_HPP
#define SUPERLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superlie {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;

/// Base class for algebraic precondition violations.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw AlgebraError("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw AlgebraError("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw AlgebraError("zero denominator: " + s);
  return r;
}

/// num/den in lowest terms; mpq_class(num, den) does not reduce.
inline Rational frac(long num, long den) {
  if (den == 0) throw AlgebraError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// (-1)^e for a non-negative or negative integer exponent.
inline int sign_pow(long e) { return (e & 1) ? -1 : 1; }

}  // namespace superlie

#endif  // SUPERLIE_RATIONAL_HPP
