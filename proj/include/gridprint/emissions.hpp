// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "gridprint/grid_data.hpp"

namespace gridprint {

inline constexpr double kKgPerLb = 0.453592;

/// Weighted mix intensity in kg CO2 per kWh.
double mix_intensity(const EnergyMix& mix, const FuelIntensities& intensities);

/// kg CO2 per kWh. Regions with an output emission rate use it directly
/// (lb/MWh -> kg/kWh); all others are scored from their mix.
double effective_intensity(const RegionRecord& region,
                           const FuelIntensities& intensities = canonical_intensities());

struct EmissionsResult {
  double kwh = 0.0;
  RegionRecord region;
  double intensity_kg_per_kwh = 0.0;
  double kg_co2 = 0.0;

  bool operator==(const EmissionsResult&) const = default;
};

/// Throws std::invalid_argument for negative energy.
EmissionsResult emissions_for_energy(double kwh, const RegionRecord& region,
                                     const FuelIntensities& intensities = canonical_intensities());

struct EquivalencyFactors {
  double kg_per_mile = 0.0;
  double kg_per_tv_minute = 0.0;
  double kg_per_household_day = 0.0;

  /// Throws std::invalid_argument unless every factor is positive.
  void validate() const;

  /// CSV `key,value,unit,source`. Throws SchemaError.
  static EquivalencyFactors parse(std::string_view csv);
  static const EquivalencyFactors& builtin();

  bool operator==(const EquivalencyFactors&) const = default;
};

struct Equivalents {
  double miles = 0.0;
  double tv_minutes = 0.0;
  double household_day_percent = 0.0;

  bool operator==(const Equivalents&) const = default;
};

Equivalents equivalents(double kg_co2, const EquivalencyFactors& factors);

struct ComparisonEntry {
  RegionRecord region;
  double kg_co2 = 0.0;

  bool operator==(const ComparisonEntry&) const = default;
};

/// Lowest / median / highest region of a group for the same energy.
struct ComparisonSet {
  std::string label;
  RegionGroup group = RegionGroup::None;
  std::array<ComparisonEntry, 3> entries;

  bool operator==(const ComparisonSet&) const = default;
};

struct Comparisons {
  EmissionsResult local;
  std::array<ComparisonSet, 3> sets;  // US, Europe, rest of world

  bool operator==(const Comparisons&) const = default;
};

Comparisons comparison_sets(double kwh, const RegionRecord& local,
                            const DatasetSnapshot& snapshot);

}  // namespace gridprint
