#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lyq/rational.hpp"

namespace lyq::detail {

/// Rational tensor rescaled to a common-denominator int64 representation:
/// xs[i] == v[i] / den exactly. Fails (nullopt) if the values do not fit
/// comfortably, in which case callers fall back to exact rational sweeps.
struct ScaledInts {
  std::vector<long long> v;
  long long den = 1;
  long long max_abs = 0;
};

std::optional<ScaledInts> scale_to_int64(const std::vector<Rational>& xs,
                                         long long den_cap = 1'000'000'000'000LL,
                                         long long val_cap = 2'000'000'000'000LL);

}  // namespace lyq::detail
