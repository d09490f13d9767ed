#include "lyq/rational.hpp"

#include <stdexcept>

namespace lyq {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rational: malformed '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long long to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_int64: not an integer");
  if (!r.get_num().fits_slong_p()) throw std::domain_error("to_int64: out of range");
  return r.get_num().get_si();
}

}  // namespace lyq
