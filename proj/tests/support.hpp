#pragma once

#include <cstdint>

#include "pachner/geometry3.hpp"
#include "pachner/lambda_omega.hpp"
#include "pachner/rng.hpp"

namespace testing_support {

inline pachner::Configuration3 random_config(std::uint64_t seed, int range = 10) {
  pachner::Rng rng(seed);
  return pachner::random_configuration(rng, range);
}

inline pachner::LambdaAssignment random_flat_lambda(std::uint64_t seed, int range = 10) {
  return pachner::solve_lambda(pachner::volume_table(random_config(seed, range)));
}

inline pachner::Scalar random_rational(pachner::Rng& rng, long range = 9) {
  const long num = static_cast<long>(rng.uniform_int(-range, range));
  const long den = static_cast<long>(rng.uniform_int(1, range));
  return {num, den};
}

}  // namespace testing_support
