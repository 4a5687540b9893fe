// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/emissions.hpp"

#include <stdexcept>

#include "embedded_data.hpp"
#include "gridprint/error.hpp"
#include "text.hpp"

namespace gridprint {

double mix_intensity(const EnergyMix& mix, const FuelIntensities& intensities) {
  return (mix.coal * intensities.coal + mix.oil * intensities.oil +
          mix.natural_gas * intensities.natural_gas + mix.low_carbon * intensities.low_carbon) /
         1000.0;
}

double effective_intensity(const RegionRecord& region, const FuelIntensities& intensities) {
  if (region.direct_rate_lbs_per_mwh) {
    return *region.direct_rate_lbs_per_mwh * kKgPerLb / 1000.0;
  }
  return mix_intensity(region.mix, intensities);
}

EmissionsResult emissions_for_energy(double kwh, const RegionRecord& region,
                                     const FuelIntensities& intensities) {
  if (!(kwh >= 0.0)) {
    throw std::invalid_argument("energy must be non-negative, got " + text::shortest(kwh));
  }
  const double intensity = effective_intensity(region, intensities);
  return EmissionsResult{kwh, region, intensity, kwh * intensity};
}

void EquivalencyFactors::validate() const {
  if (!(kg_per_mile > 0.0) || !(kg_per_tv_minute > 0.0) || !(kg_per_household_day > 0.0)) {
    throw std::invalid_argument("equivalency factors must all be positive");
  }
}

EquivalencyFactors EquivalencyFactors::parse(std::string_view csv) {
  EquivalencyFactors f;
  bool mile = false, tv = false, household = false;
  for (const auto& row : text::read_csv(csv, "key,value,unit,source")) {
    const double v = text::number_cell(row, 1, "value");
    if (!(v > 0.0)) throw SchemaError(row.line, "value", "factor must be positive");
    const auto key = row.cells[0];
    if (key == "kg_per_mile") {
      f.kg_per_mile = v;
      mile = true;
    } else if (key == "kg_per_tv_minute") {
      f.kg_per_tv_minute = v;
      tv = true;
    } else if (key == "kg_per_household_day") {
      f.kg_per_household_day = v;
      household = true;
    } else {
      throw SchemaError(row.line, "key", "unknown key '" + std::string(key) + "'");
    }
  }
  if (!mile || !tv || !household) {
    throw SchemaError(0, "key",
                      "expected kg_per_mile, kg_per_tv_minute and kg_per_household_day");
  }
  return f;
}

const EquivalencyFactors& EquivalencyFactors::builtin() {
  static const EquivalencyFactors factors = parse(embedded::equivalencies);
  return factors;
}

Equivalents equivalents(double kg_co2, const EquivalencyFactors& factors) {
  factors.validate();
  return Equivalents{kg_co2 / factors.kg_per_mile, kg_co2 / factors.kg_per_tv_minute,
                     100.0 * kg_co2 / factors.kg_per_household_day};
}

Comparisons comparison_sets(double kwh, const RegionRecord& local,
                            const DatasetSnapshot& snapshot) {
  Comparisons out;
  out.local = emissions_for_energy(kwh, local, snapshot.intensities());
  const std::array<std::pair<const char*, RegionGroup>, 3> groups = {{
      {"United States", RegionGroup::Us},
      {"Europe", RegionGroup::Europe},
      {"Global (excluding US and Europe)", RegionGroup::GlobalExUsEurope},
  }};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto ext = region_extremes(snapshot, groups[i].second);
    auto& set = out.sets[i];
    set.label = groups[i].first;
    set.group = groups[i].second;
    std::size_t j = 0;
    for (const auto* r : {&ext.lowest, &ext.median, &ext.highest}) {
      set.entries[j++] = ComparisonEntry{*r, emissions_for_energy(kwh, *r,
                                                                  snapshot.intensities())
                                                 .kg_co2};
    }
  }
  return out;
}

}  // namespace gridprint
