// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/bench.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "gridprint/error.hpp"
#include "text.hpp"

namespace gridprint {

WorkloadShape parse_shape(std::string_view s) {
  const auto key = text::lower(text::trim(s));
  if (key == "linear") return WorkloadShape::Linear;
  if (key == "quadratic") return WorkloadShape::Quadratic;
  if (key == "exp" || key == "exponential") return WorkloadShape::Exponential;
  throw std::invalid_argument("unknown workload '" + std::string(s) +
                              "' (expected linear, quadratic or exp)");
}

std::string_view to_string(WorkloadShape shape) {
  switch (shape) {
    case WorkloadShape::Linear: return "linear";
    case WorkloadShape::Quadratic: return "quadratic";
    case WorkloadShape::Exponential: return "exp";
  }
  return "?";
}

std::uint64_t total_additions(const WorkloadSpec& spec) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto overflow = [&] {
    return GuardExceeded("workload " + std::string(to_string(spec.shape)) + " " +
                         std::to_string(spec.n) + " needs more than 2^64 additions");
  };
  std::uint64_t units = 0;
  switch (spec.shape) {
    case WorkloadShape::Linear:
      units = spec.n;
      break;
    case WorkloadShape::Quadratic:
      if (spec.n != 0 && spec.n > kMax / spec.n) throw overflow();
      units = spec.n * spec.n;
      break;
    case WorkloadShape::Exponential:
      if (spec.n > kMaxExponent) {
        throw GuardExceeded("exp workload needs n <= " + std::to_string(kMaxExponent) + ", got " +
                            std::to_string(spec.n));
      }
      units = std::uint64_t{1} << spec.n;
      break;
  }
  if (units != 0 && spec.unit_ops > kMax / units) throw overflow();
  return units * spec.unit_ops;
}

std::uint64_t run_workload(const WorkloadSpec& spec) {
  const std::uint64_t count = total_additions(spec);
  // Starting from a volatile read keeps the result unknown at compile time.
  volatile std::uint64_t seed = 0;
  std::uint64_t acc = seed;
  for (std::uint64_t i = 0; i < count; ++i) {
    acc += 1;
    asm volatile("" : "+r"(acc));
  }
  return acc;
}

}  // namespace gridprint
