// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

namespace gridprint {

using Seconds = std::chrono::duration<double>;

/// One sample of a package domain's cumulative energy counter.
struct EnergyCounterReading {
  std::string domain_id;
  std::uint64_t energy_uj = 0;
  std::uint64_t max_range_uj = 0;
  Seconds timestamp{0.0};

  bool operator==(const EnergyCounterReading&) const = default;
};

enum class PowerSource { Cpu, Gpu };

struct PowerSample {
  double watts = 0.0;
  double interval_s = 0.0;
  PowerSource source = PowerSource::Cpu;

  bool operator==(const PowerSample&) const = default;
};

struct MeterConfig {
  double sample_interval_s = 0.1;
  double psu_efficiency = 0.8;
  double baseline_duration_s = 5.0;
  bool gpu_enabled = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct MeasurementSummary {
  double baseline_watts = 0.0;
  double total_watts = 0.0;
  /// total_watts - baseline_watts, floored at zero.
  double process_watts = 0.0;
  double duration_s = 0.0;
  /// Energy at the counter.
  double measured_kwh = 0.0;
  /// Wall-side energy: measured_kwh / psu_efficiency.
  double adjusted_kwh = 0.0;
  double psu_efficiency = 0.8;
  /// Set when the baseline exceeded the total and process_watts was floored.
  bool process_watts_clamped = false;

  bool operator==(const MeasurementSummary&) const = default;
};

inline constexpr double kJoulesPerKwh = 3.6e6;

/// Average power between two readings of the same domain. Returns nullopt when
/// the counter went backwards (it wrapped); such pairs are dropped, not repaired.
/// Throws std::invalid_argument if the domains differ or time does not advance.
std::optional<PowerSample> power_from_readings(const EnergyCounterReading& first,
                                               const EnergyCounterReading& second);

/// Source of package-domain counter readings. Real meters read sysfs and sleep;
/// replay meters step through a recorded trace in virtual time.
class Meter {
 public:
  virtual ~Meter() = default;

  virtual std::vector<std::string> domains() const = 0;

  /// Reads every package domain at the current instant. Returns nullopt once a
  /// replayed trace is exhausted.
  virtual std::optional<std::vector<EnergyCounterReading>> poll() = 0;

  virtual void wait(Seconds interval) = 0;

  /// Time since the meter was created (virtual for replays).
  virtual Seconds elapsed() const = 0;

  /// True when the meter replays recorded data instead of observing the host.
  virtual bool replays() const { return false; }
};

/// Polled at each sampling instant when GPU sampling is enabled.
using GpuProbe = std::function<std::optional<PowerSample>()>;

enum class Phase { Baseline, Process };

struct SamplingResult {
  std::vector<PowerSample> samples;
  Seconds started{0.0};
  Seconds finished{0.0};

  Seconds span() const { return finished - started; }
};

/// Samples the meter at config.sample_interval_s. CPU samples are summed across
/// domains per instant; an instant where any domain wrapped is dropped whole.
/// Baseline runs for config.baseline_duration_s. Process runs until `stop` is
/// requested or, for replays, until the trace runs out.
SamplingResult run_sampling_session(Meter& meter, const MeterConfig& config, Phase phase,
                                    std::stop_token stop = {}, const GpuProbe& gpu = {});

/// Sum over sources of the per-source mean; zero for an empty list.
double mean_power(std::span<const PowerSample> samples);

/// Throws EmptyProcessSamples if `process` is empty, std::invalid_argument if
/// duration_s is not positive.
MeasurementSummary summarize(std::span<const PowerSample> baseline,
                             std::span<const PowerSample> process, double duration_s,
                             const MeterConfig& config);

/// Builds a summary from already-averaged wattages.
MeasurementSummary summarize_averages(double baseline_watts, double total_watts,
                                      double duration_s, double psu_efficiency);

}  // namespace gridprint
