// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gridprint {

/// Fractions of electricity generation by fuel.
struct EnergyMix {
  double coal = 0.0;
  double oil = 0.0;
  double natural_gas = 0.0;
  double low_carbon = 0.0;

  double sum() const { return coal + oil + natural_gas + low_carbon; }

  /// Each share in [0, 1] and the total within [0.99, 1.01]. Throws
  /// std::invalid_argument naming the offending share otherwise.
  void validate() const;

  bool operator==(const EnergyMix&) const = default;
};

/// kg CO2 per MWh generated, by fuel.
struct FuelIntensities {
  double coal = 0.0;
  double oil = 0.0;
  double natural_gas = 0.0;
  double low_carbon = 0.0;

  bool operator==(const FuelIntensities&) const = default;
};

/// 996 / 817 / 744 / 0 kg CO2/MWh, applied to every mix-based region.
FuelIntensities canonical_intensities();

struct FuelTriple {
  double coal = 0.0;
  double oil = 0.0;
  double natural_gas = 0.0;

  bool operator==(const FuelTriple&) const = default;
};

enum class MassUnit { Kilotonnes, MetricTons };

/// kg CO2 per MWh per fuel from generation and emitted mass. Tonnes are
/// converted to kg (x1000) and divided by MWh. A fuel with zero emissions and
/// zero generation yields 0. Throws ZeroGeneration when a fuel has emissions
/// but no generation.
FuelIntensities derive_fuel_intensity(const FuelTriple& generation_mwh,
                                      const FuelTriple& emissions,
                                      MassUnit unit = MassUnit::Kilotonnes);

enum class RegionKind { UsState, Country, Aggregate };
enum class RegionGroup { None, Us, Europe, GlobalExUsEurope };

std::string_view to_string(RegionKind kind);
std::string_view to_string(RegionGroup group);
RegionKind parse_region_kind(std::string_view s);
/// Accepts "us", "europe", "global" (and the to_string spellings). Throws UnknownGroup.
RegionGroup parse_region_group(std::string_view s);

struct RegionRecord {
  /// Canonical key: "us-wy" for states, ISO code ("is") for countries,
  /// "world-average" style for aggregates.
  std::string id;
  std::string display_name;
  RegionKind kind = RegionKind::Country;
  EnergyMix mix;
  /// eGRID output emission rate; present for states and US/world aggregates.
  std::optional<double> direct_rate_lbs_per_mwh;
  RegionGroup group = RegionGroup::None;
  /// Code as written in the source file ("WY", "IS").
  std::string source_code;

  bool operator==(const RegionRecord&) const = default;
};

struct EgridRow {
  RegionRecord region;
  FuelTriple generation_mwh;
  /// Thousands of metric tons; only some states carry it.
  std::optional<FuelTriple> emissions_kt;

  bool operator==(const EgridRow&) const = default;
};

inline constexpr std::string_view kEgridHeader =
    "state_id,state_name,coal_frac,oil_frac,gas_frac,lowcarbon_frac,output_rate_lbs_per_mwh,"
    "coal_gen_mwh,oil_gen_mwh,gas_gen_mwh,coal_emit_kt,oil_emit_kt,gas_emit_kt";
inline constexpr std::string_view kEiaHeader =
    "country_id,country_name,is_europe,coal_frac,oil_frac,gas_frac,lowcarbon_frac";
inline constexpr std::string_view kAggregatesHeader =
    "region_id,region_name,coal_frac,oil_frac,gas_frac,lowcarbon_frac,output_rate_lbs_per_mwh";

/// Entities dropped from international data (no longer exist or no data).
std::span<const std::string_view> excluded_international_entities();

// Parsers throw SchemaError with the line number and column on bad input.
std::vector<EgridRow> parse_egrid(std::string_view csv);
std::vector<RegionRecord> parse_eia(std::string_view csv);
std::vector<RegionRecord> parse_aggregates(std::string_view csv);

std::string serialize_egrid(std::span<const EgridRow> rows);
std::string serialize_eia(std::span<const RegionRecord> countries);
std::string serialize_aggregates(std::span<const RegionRecord> aggregates);

struct SnapshotFiles {
  std::string egrid_csv;
  std::string eia_csv;
  std::string aggregates_csv;
};

/// Immutable set of regions plus the intensities used to score mixes.
class DatasetSnapshot {
 public:
  /// Throws std::invalid_argument on duplicate ids or a state without a rate.
  DatasetSnapshot(std::vector<EgridRow> states, std::vector<RegionRecord> countries,
                  std::vector<RegionRecord> aggregates, FuelIntensities intensities,
                  std::string vintage, std::vector<std::string> provenance);

  static DatasetSnapshot from_files(const SnapshotFiles& files, std::string vintage);

  /// The 2016 snapshot compiled into the binary.
  static const DatasetSnapshot& builtin();
  static const SnapshotFiles& builtin_files();

  /// Reads egrid_2016.csv, eia_2016.csv and aggregates_2016.csv from `dir`.
  static DatasetSnapshot load_directory(const std::filesystem::path& dir);

  /// Checks all 50 states + DC and the three lookup aggregates are present.
  void validate_coverage() const;

  const std::vector<RegionRecord>& regions() const { return regions_; }
  const std::vector<EgridRow>& state_rows() const { return states_; }
  const FuelIntensities& intensities() const { return intensities_; }
  const std::string& vintage() const { return vintage_; }
  const std::vector<std::string>& provenance() const { return provenance_; }

  const RegionRecord* find(std::string_view id) const;

  /// Case-insensitive match on id or display name. Throws UnknownRegion (with
  /// nearest-name suggestions) on a miss or an ambiguous name.
  const RegionRecord& lookup(std::string_view key) const;

  std::vector<const RegionRecord*> members(RegionGroup group) const;

  bool operator==(const DatasetSnapshot& other) const {
    return states_ == other.states_ && regions_ == other.regions_ &&
           intensities_ == other.intensities_ && vintage_ == other.vintage_;
  }

 private:
  std::vector<EgridRow> states_;
  std::vector<RegionRecord> regions_;
  FuelIntensities intensities_;
  std::string vintage_;
  std::vector<std::string> provenance_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

/// Arithmetic mean of derive_fuel_intensity over every state that carries
/// per-fuel emissions; nullopt if none do. Shown alongside the canonical
/// constants, never used in place of them.
std::optional<FuelIntensities> calibrated_intensities(const DatasetSnapshot& snapshot);

struct RegionExtremes {
  RegionRecord lowest;
  RegionRecord median;
  RegionRecord highest;
};

/// Orders a group by effective intensity (ties by id). The median of an even
/// count is the upper-middle element, index n/2. Throws EmptyGroup.
RegionExtremes region_extremes(const DatasetSnapshot& snapshot, RegionGroup group);

}  // namespace gridprint
