// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <chrono>
#include <limits>

#include "gridprint/bench.hpp"
#include "gridprint/error.hpp"

using namespace gridprint;

TEST_CASE("addition counts per shape") {
  CHECK(total_additions({WorkloadShape::Linear, 0, 50}) == 0);
  CHECK(total_additions({WorkloadShape::Linear, 4, 50}) == 200);
  CHECK(total_additions({WorkloadShape::Quadratic, 3, 7}) ==
        total_additions({WorkloadShape::Linear, 9, 7}));
  CHECK(total_additions({WorkloadShape::Exponential, 0, 5}) == 5);
  CHECK(total_additions({WorkloadShape::Exponential, 10, 1}) == 1024);
  CHECK(total_additions({WorkloadShape::Exponential, kMaxExponent, 1}) == (1ull << 30));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(total_additions({WorkloadShape::Exponential, 31, 1}), GuardExceeded);
  CHECK_THROWS_AS(total_additions({WorkloadShape::Exponential, 31, 0}), GuardExceeded);
  const auto big = std::numeric_limits<std::uint64_t>::max() / 2;
  CHECK_THROWS_AS(total_additions({WorkloadShape::Linear, big, 3}), GuardExceeded);
  CHECK_THROWS_AS(total_additions({WorkloadShape::Quadratic, 1ull << 32, 1}), GuardExceeded);
  CHECK_THROWS_AS(total_additions({WorkloadShape::Exponential, 30, 1ull << 40}), GuardExceeded);
}

TEST_CASE("the workload sum equals the addition count") {
  CHECK(run_workload({WorkloadShape::Linear, 0, 1000}) == 0);
  CHECK(run_workload({WorkloadShape::Linear, 3, 1000}) == 3000);
  CHECK(run_workload({WorkloadShape::Quadratic, 3, 1000}) == 9000);
  CHECK(run_workload({WorkloadShape::Exponential, 4, 1000}) == 16000);
}

TEST_CASE("shape names") {
  CHECK(parse_shape("linear") == WorkloadShape::Linear);
  CHECK(parse_shape("Quadratic") == WorkloadShape::Quadratic);
  CHECK(parse_shape("exp") == WorkloadShape::Exponential);
  CHECK(parse_shape("exponential") == WorkloadShape::Exponential);
  CHECK_THROWS_AS(parse_shape("cubic"), std::invalid_argument);
  CHECK(to_string(WorkloadShape::Exponential) == "exp");
  CHECK(parse_shape(to_string(WorkloadShape::Quadratic)) == WorkloadShape::Quadratic);
}

TEST_CASE("run time grows with the addition count") {
  // Loose: 8x the work must take clearly longer than 1x. Best of three to
  // ride out scheduler noise.
  const auto time_of = [](std::uint64_t n) {
    double best = 1e9;
    for (int i = 0; i < 3; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      CHECK(run_workload({WorkloadShape::Linear, n, 2'000'000}) == n * 2'000'000);
      best = std::min(best,
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
  };
  const double small = time_of(1);
  const double large = time_of(8);
  CHECK(large > 3.0 * small);
}
