// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

// Synthetic counter traces for tests. Power is piecewise constant: step i
// (from t = i*step to (i+1)*step) draws watts[i] on every domain.

#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace gridprint::testing {

struct TraceSpec {
  std::vector<double> watts;  // per step, per domain
  double step_s = 0.1;
  int domains = 1;
  std::uint64_t max_range_uj = 262143328850;
  std::uint64_t start_uj = 1000;
  /// Steps after which the counter of `wrap_domain` resets (drops below its
  /// previous value). Must not contain consecutive steps.
  std::set<std::size_t> wraps;
  int wrap_domain = 0;
};

/// Energy of one step in microjoules, rounded the same way the builder does.
inline std::uint64_t step_uj(double watts, double step_s) {
  return static_cast<std::uint64_t>(std::llround(watts * step_s * 1e6));
}

inline std::string build_trace(const TraceSpec& spec) {
  std::string out = "timestamp_s,domain_id,energy_uj,max_range_uj\n";
  std::vector<std::uint64_t> counters(static_cast<std::size_t>(spec.domains), spec.start_uj);
  const auto emit = [&](std::size_t step) {
    for (int d = 0; d < spec.domains; ++d) {
      out += fmt::format("{:.6f},pkg-{},{},{}\n", static_cast<double>(step) * spec.step_s, d,
                         counters[static_cast<std::size_t>(d)], spec.max_range_uj);
    }
  };
  emit(0);
  for (std::size_t i = 0; i < spec.watts.size(); ++i) {
    for (int d = 0; d < spec.domains; ++d) {
      auto& c = counters[static_cast<std::size_t>(d)];
      if (spec.wraps.count(i) != 0 && d == spec.wrap_domain) {
        c = c / 2;  // any value below the previous one reads as a reset
      } else {
        c += step_uj(spec.watts[i], spec.step_s);
      }
    }
    emit(i + 1);
  }
  return out;
}

/// Exact energy in joules the builder put into the counters (all domains).
inline double trace_joules(const TraceSpec& spec) {
  double j = 0.0;
  for (double w : spec.watts) j += static_cast<double>(step_uj(w, spec.step_s)) / 1e6;
  return j * spec.domains;
}

}  // namespace gridprint::testing
