// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gridprint/error.hpp"
#include "gridprint/meter.hpp"

namespace gridprint {

/// The command could not be started (not found, not executable).
class SpawnFailure : public Error {
 public:
  using Error::Error;
};

/// Starts argv[0] (PATH lookup) with inherited stdio and waits for it. SIGINT,
/// SIGTERM and SIGHUP received meanwhile are forwarded to the child. Returns
/// the exit code, or 128 + signal number if the child was killed.
/// Throws SpawnFailure.
int spawn_and_wait(const std::vector<std::string>& argv);

/// True once a forwarded signal arrived during spawn_and_wait.
bool interrupted_by_signal();

/// Runs the measured work and returns its exit status.
using Workload = std::function<int()>;

struct ProfileResult {
  /// Absent when measurement failed after the work ran; see `error`.
  std::optional<MeasurementSummary> summary;
  std::string error;
  int exit_status = 0;
  bool interrupted = false;
  std::chrono::system_clock::time_point started;
  std::chrono::system_clock::time_point finished;
};

/// Baseline, then the work under measurement. A live meter is sampled on a
/// separate thread while the work runs and the duration is the work's wall
/// time. A replay meter is stepped after the work finishes and the duration is
/// the replayed span. Exceptions from the work itself propagate; measurement
/// errors after it ran are reported in the result.
ProfileResult profile(Meter& meter, const MeterConfig& config, const Workload& work,
                      const GpuProbe& gpu = {});

}  // namespace gridprint
