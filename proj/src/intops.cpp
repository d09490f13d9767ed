#include "lyq/intops.hpp"

#include <cstdlib>
#include <numeric>

namespace lyq::detail {

std::optional<ScaledInts> scale_to_int64(const std::vector<Rational>& xs, long long den_cap,
                                         long long val_cap) {
  const long long kDenCap = den_cap;
  const long long kValCap = val_cap;
  long long den = 1;
  for (const auto& x : xs) {
    if (!x.get_den().fits_slong_p()) return std::nullopt;
    long long d = x.get_den().get_si();
    long long g = std::gcd(den, d);
    if (den / g > kDenCap / d) return std::nullopt;
    den = den / g * d;
    if (den > kDenCap) return std::nullopt;
  }
  ScaledInts out;
  out.den = den;
  out.v.reserve(xs.size());
  for (const auto& x : xs) {
    Integer scaled = x.get_num() * static_cast<long>(den / x.get_den().get_si());
    if (!scaled.fits_slong_p()) return std::nullopt;
    long long s = scaled.get_si();
    if (std::llabs(s) > kValCap) return std::nullopt;
    out.v.push_back(s);
    out.max_abs = std::max(out.max_abs, std::llabs(s));
  }
  return out;
}

}  // namespace lyq::detail
