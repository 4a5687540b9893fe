// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/meter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gridprint/error.hpp"

namespace gridprint {

namespace {

// Clock comparisons in virtual time accumulate 0.1-sized steps.
constexpr double kTimeEpsilon = 1e-9;

}  // namespace

void MeterConfig::validate() const {
  if (!(psu_efficiency > 0.0 && psu_efficiency <= 1.0)) {
    throw std::invalid_argument("psu efficiency must be in (0, 1]");
  }
  if (!(sample_interval_s >= 0.01)) {
    throw std::invalid_argument("sample interval must be at least 0.01 s");
  }
  if (!(baseline_duration_s >= 0.0)) {
    throw std::invalid_argument("baseline duration must be non-negative");
  }
}

std::optional<PowerSample> power_from_readings(const EnergyCounterReading& first,
                                               const EnergyCounterReading& second) {
  if (first.domain_id != second.domain_id) {
    throw std::invalid_argument("readings come from different domains: " + first.domain_id +
                                ", " + second.domain_id);
  }
  const double dt = (second.timestamp - first.timestamp).count();
  if (!(dt > 0.0)) {
    throw std::invalid_argument("readings are not in time order");
  }
  if (second.energy_uj < first.energy_uj) {
    return std::nullopt;
  }
  const double joules = static_cast<double>(second.energy_uj - first.energy_uj) / 1e6;
  return PowerSample{joules / dt, dt, PowerSource::Cpu};
}

namespace {

const EnergyCounterReading* find_domain(const std::vector<EnergyCounterReading>& readings,
                                        const std::string& id) {
  auto it = std::find_if(readings.begin(), readings.end(),
                         [&](const auto& r) { return r.domain_id == id; });
  return it == readings.end() ? nullptr : &*it;
}

// Sum of per-domain power between two instants; nullopt if any domain wrapped
// or the instants are not strictly ordered.
std::optional<PowerSample> instant_power(const std::vector<EnergyCounterReading>& previous,
                                         const std::vector<EnergyCounterReading>& current) {
  if (current.empty()) return std::nullopt;
  PowerSample total{0.0, 0.0, PowerSource::Cpu};
  for (const auto& reading : current) {
    const EnergyCounterReading* before = find_domain(previous, reading.domain_id);
    if (before == nullptr || !(reading.timestamp > before->timestamp)) return std::nullopt;
    auto sample = power_from_readings(*before, reading);
    if (!sample) return std::nullopt;
    total.watts += sample->watts;
    if (total.interval_s == 0.0) total.interval_s = sample->interval_s;
  }
  return total;
}

}  // namespace

SamplingResult run_sampling_session(Meter& meter, const MeterConfig& config, Phase phase,
                                    std::stop_token stop, const GpuProbe& gpu) {
  SamplingResult result;
  result.started = meter.elapsed();
  result.finished = result.started;
  if (phase == Phase::Baseline && config.baseline_duration_s <= 0.0) {
    return result;
  }

  auto previous = meter.poll();
  if (!previous) return result;

  const Seconds interval{config.sample_interval_s};
  const auto phase_over = [&] {
    if (phase == Phase::Baseline) {
      return (meter.elapsed() - result.started).count() >=
             config.baseline_duration_s - kTimeEpsilon;
    }
    return !meter.replays() && stop.stop_requested();
  };

  while (!phase_over()) {
    meter.wait(interval);
    auto current = meter.poll();
    if (!current) break;
    result.finished = meter.elapsed();
    auto cpu = instant_power(*previous, *current);
    if (cpu) {
      result.samples.push_back(*cpu);
      if (config.gpu_enabled && gpu) {
        if (auto g = gpu()) {
          g->source = PowerSource::Gpu;
          g->interval_s = cpu->interval_s;
          result.samples.push_back(*g);
        }
      }
    }
    previous = std::move(current);
  }
  return result;
}

double mean_power(std::span<const PowerSample> samples) {
  double sums[2] = {0.0, 0.0};
  std::size_t counts[2] = {0, 0};
  for (const auto& s : samples) {
    const auto i = static_cast<std::size_t>(s.source);
    sums[i] += s.watts;
    ++counts[i];
  }
  double total = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    if (counts[i] > 0) total += sums[i] / static_cast<double>(counts[i]);
  }
  return total;
}

MeasurementSummary summarize_averages(double baseline_watts, double total_watts,
                                      double duration_s, double psu_efficiency) {
  if (!(duration_s > 0.0)) {
    throw std::invalid_argument("process duration must be positive");
  }
  if (!(psu_efficiency > 0.0 && psu_efficiency <= 1.0)) {
    throw std::invalid_argument("psu efficiency must be in (0, 1]");
  }
  MeasurementSummary s;
  s.baseline_watts = baseline_watts;
  s.total_watts = total_watts;
  const double difference = total_watts - baseline_watts;
  s.process_watts_clamped = difference < 0.0;
  s.process_watts = std::max(difference, 0.0);
  s.duration_s = duration_s;
  s.measured_kwh = s.process_watts * duration_s / kJoulesPerKwh;
  s.psu_efficiency = psu_efficiency;
  s.adjusted_kwh = s.measured_kwh / psu_efficiency;
  return s;
}

MeasurementSummary summarize(std::span<const PowerSample> baseline,
                             std::span<const PowerSample> process, double duration_s,
                             const MeterConfig& config) {
  if (process.empty()) {
    throw EmptyProcessSamples(
        "no power samples were collected while the process ran; it finished in less "
        "than two sampling intervals (" +
        std::to_string(config.sample_interval_s) + " s)");
  }
  return summarize_averages(mean_power(baseline), mean_power(process), duration_s,
                            config.psu_efficiency);
}

}  // namespace gridprint
