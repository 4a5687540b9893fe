// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gridprint/meter.hpp"

namespace gridprint {

/// Sums one decimal watts value per line (one line per GPU). Any line that is
/// not a finite non-negative number makes the whole reading invalid.
std::optional<double> parse_gpu_watts(std::string_view output);

/// Runs `<program> --query-gpu=power.draw --format=csv,noheader,nounits`.
/// Returns nullopt if the program is missing, fails, or prints garbage.
std::optional<PowerSample> read_gpu_power(const std::string& program = "nvidia-smi",
                                          double interval_s = 0.0);

}  // namespace gridprint
