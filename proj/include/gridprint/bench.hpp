// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace gridprint {

enum class WorkloadShape { Linear, Quadratic, Exponential };

/// Largest n accepted for the exponential workload.
inline constexpr std::uint64_t kMaxExponent = 30;

struct WorkloadSpec {
  WorkloadShape shape = WorkloadShape::Linear;
  std::uint64_t n = 0;
  std::uint64_t unit_ops = 50'000'000;
};

/// "linear", "quadratic", "exp" or "exponential". Throws std::invalid_argument.
WorkloadShape parse_shape(std::string_view s);
std::string_view to_string(WorkloadShape shape);

/// n, n^2 or 2^n times unit_ops. Throws GuardExceeded for an exponential n
/// above kMaxExponent or a count that does not fit in 64 bits.
std::uint64_t total_additions(const WorkloadSpec& spec);

/// Adds 1 total_additions(spec) times and returns the sum, which equals the
/// addition count. The loop is kept opaque to the optimizer.
std::uint64_t run_workload(const WorkloadSpec& spec);

}  // namespace gridprint
