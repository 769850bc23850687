#pragma once

#include <cstdint>
#include <random>

#include "isotori/matrix.hpp"

namespace isotori {

// mt19937_64 with a fixed reduction to ranges, so that seeded output is
// identical across standard libraries (the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin() { return (engine_() & 1U) != 0; }

  /// ±p/q with 1 ≤ p ≤ max_num, 1 ≤ q ≤ max_den.
  Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
    Rational r = frac(Integer(static_cast<long>(uniform(1, max_num))), Integer(static_cast<long>(uniform(1, max_den))));
    return coin() ? r : Rational(-r);
  }
  /// p/q with 1 ≤ p ≤ max_num, 1 ≤ q ≤ max_den.
  Rational positive_rational(std::int64_t max_num, std::int64_t max_den) {
    return frac(Integer(static_cast<long>(uniform(1, max_num))), Integer(static_cast<long>(uniform(1, max_den))));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace isotori
