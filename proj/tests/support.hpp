#pragma once

#include <cmath>
#include <numbers>

#include "qgt/engine.hpp"
#include "qgt/random.hpp"

#define CHECK_NEAR(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))
#define REQUIRE_NEAR(a, b, tol) REQUIRE(std::abs((a) - (b)) <= (tol))

namespace qgt::test {

inline constexpr double kPi = std::numbers::pi;

inline StrategyParams random_strategy(UniformStream& stream) {
  return StrategyParams(stream.next(0.0, kPi), stream.next(0.0, kPi / 2.0));
}

}  // namespace qgt::test
