// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/grid_data.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "embedded_data.hpp"
#include "gridprint/emissions.hpp"
#include "gridprint/error.hpp"
#include "text.hpp"

namespace gridprint {

namespace fs = std::filesystem;

namespace {

// Source rounding can leave tiny negative shares; anything below this is a real error.
constexpr double kClampEpsilon = 1e-6;

void check_share(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " share " + text::shortest(v) +
                                " outside [0, 1]");
  }
}

EnergyMix mix_from_row(const text::CsvRow& row, std::size_t first, bool clamp) {
  static constexpr std::array<const char*, 4> kColumns = {"coal_frac", "oil_frac", "gas_frac",
                                                          "lowcarbon_frac"};
  std::array<double, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    v[i] = text::number_cell(row, first + i, kColumns[i]);
    if (clamp && v[i] < 0.0 && v[i] > -kClampEpsilon) v[i] = 0.0;
    if (v[i] < 0.0 || v[i] > 1.0) {
      throw SchemaError(row.line, kColumns[i], "share outside [0, 1]");
    }
  }
  EnergyMix mix{v[0], v[1], v[2], v[3]};
  try {
    mix.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(row.line, "lowcarbon_frac", e.what());
  }
  return mix;
}

double generation_cell(const text::CsvRow& row, std::size_t index, const char* column) {
  const double v = text::number_cell(row, index, column);
  if (v < 0.0) throw SchemaError(row.line, column, "negative generation");
  return v;
}

void check_name(const std::string& s, const std::string& what) {
  if (s.find_first_of(",\n\r") != std::string::npos) {
    throw std::invalid_argument(what + " '" + s + "' cannot be written to CSV");
  }
}

std::string mix_cells(const EnergyMix& m) {
  return text::shortest(m.coal) + ',' + text::shortest(m.oil) + ',' +
         text::shortest(m.natural_gas) + ',' + text::shortest(m.low_carbon);
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? text::shortest(*v) : std::string();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReadFailure(path.string(), "cannot open");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Lowercase with runs of whitespace, '_' and '-' collapsed to one space.
std::string normalize_key(std::string_view s) {
  std::string out;
  bool gap = false;
  for (char c : text::trim(s)) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
      gap = true;
      continue;
    }
    if (gap && !out.empty()) out += ' ';
    gap = false;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

void EnergyMix::validate() const {
  check_share(coal, "coal");
  check_share(oil, "oil");
  check_share(natural_gas, "natural_gas");
  check_share(low_carbon, "low_carbon");
  const double total = sum();
  if (total < 0.99 || total > 1.01) {
    throw std::invalid_argument("mix sums to " + text::shortest(total) +
                                ", expected within [0.99, 1.01]");
  }
}

FuelIntensities canonical_intensities() {
  return FuelIntensities{996.0, 817.0, 744.0, 0.0};
}

FuelIntensities derive_fuel_intensity(const FuelTriple& generation_mwh, const FuelTriple& emissions,
                                      MassUnit unit) {
  const double kg_per_unit = unit == MassUnit::Kilotonnes ? 1e6 : 1e3;
  const auto one = [&](double gen, double mass, const char* fuel) {
    if (gen < 0.0 || mass < 0.0) {
      throw std::invalid_argument(std::string(fuel) + ": negative generation or emissions");
    }
    if (gen == 0.0) {
      if (mass == 0.0) return 0.0;
      throw ZeroGeneration(std::string(fuel) + " has emissions but zero generation");
    }
    return mass * kg_per_unit / gen;
  };
  return FuelIntensities{one(generation_mwh.coal, emissions.coal, "coal"),
                         one(generation_mwh.oil, emissions.oil, "oil"),
                         one(generation_mwh.natural_gas, emissions.natural_gas, "natural_gas"),
                         0.0};
}

std::string_view to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::UsState: return "us-state";
    case RegionKind::Country: return "country";
    case RegionKind::Aggregate: return "aggregate";
  }
  return "?";
}

std::string_view to_string(RegionGroup group) {
  switch (group) {
    case RegionGroup::None: return "none";
    case RegionGroup::Us: return "us";
    case RegionGroup::Europe: return "europe";
    case RegionGroup::GlobalExUsEurope: return "global-ex-us-europe";
  }
  return "?";
}

RegionKind parse_region_kind(std::string_view s) {
  for (auto k : {RegionKind::UsState, RegionKind::Country, RegionKind::Aggregate}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown region kind '" + std::string(s) + "'");
}

RegionGroup parse_region_group(std::string_view s) {
  const std::string key = text::lower(text::trim(s));
  if (key == "global") return RegionGroup::GlobalExUsEurope;
  for (auto g : {RegionGroup::None, RegionGroup::Us, RegionGroup::Europe,
                 RegionGroup::GlobalExUsEurope}) {
    if (to_string(g) == key) return g;
  }
  throw UnknownGroup("unknown group '" + std::string(s) + "' (expected us, europe or global)");
}

std::span<const std::string_view> excluded_international_entities() {
  static constexpr std::array<std::string_view, 9> kExcluded = {
      "Former Czechoslovakia", "Former Serbia and Montenegro", "Former U.S.S.R.",
      "Former Yugoslavia",     "Hawaiian Trade Zone",          "Germany, East",
      "Germany, West",         "East Germany",                 "West Germany"};
  return kExcluded;
}

std::vector<EgridRow> parse_egrid(std::string_view csv) {
  std::vector<EgridRow> rows;
  for (const auto& row : text::read_csv(csv, kEgridHeader)) {
    const auto& c = row.cells;
    if (c[0].size() != 2) throw SchemaError(row.line, "state_id", "expected a 2-letter code");
    if (c[1].empty()) throw SchemaError(row.line, "state_name", "empty name");
    EgridRow out;
    out.region.source_code = std::string(c[0]);
    out.region.id = "us-" + text::lower(c[0]);
    out.region.display_name = std::string(c[1]);
    out.region.kind = RegionKind::UsState;
    out.region.group = RegionGroup::Us;
    out.region.mix = mix_from_row(row, 2, false);
    const double rate = text::number_cell(row, 6, "output_rate_lbs_per_mwh");
    if (rate < 0.0) throw SchemaError(row.line, "output_rate_lbs_per_mwh", "negative rate");
    out.region.direct_rate_lbs_per_mwh = rate;
    out.generation_mwh = {generation_cell(row, 7, "coal_gen_mwh"),
                          generation_cell(row, 8, "oil_gen_mwh"),
                          generation_cell(row, 9, "gas_gen_mwh")};
    const auto coal = text::optional_number_cell(row, 10, "coal_emit_kt");
    const auto oil = text::optional_number_cell(row, 11, "oil_emit_kt");
    const auto gas = text::optional_number_cell(row, 12, "gas_emit_kt");
    const int present = int(coal.has_value()) + int(oil.has_value()) + int(gas.has_value());
    if (present != 0 && present != 3) {
      throw SchemaError(row.line, "coal_emit_kt", "emission columns must be all set or all empty");
    }
    if (present == 3) {
      if (*coal < 0.0 || *oil < 0.0 || *gas < 0.0) {
        throw SchemaError(row.line, "coal_emit_kt", "negative emissions");
      }
      out.emissions_kt = FuelTriple{*coal, *oil, *gas};
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

std::vector<RegionRecord> parse_eia(std::string_view csv) {
  const auto excluded = excluded_international_entities();
  std::vector<RegionRecord> out;
  for (const auto& row : text::read_csv(csv, kEiaHeader)) {
    const auto& c = row.cells;
    if (std::find(excluded.begin(), excluded.end(), c[1]) != excluded.end()) continue;
    if (c[0].empty()) throw SchemaError(row.line, "country_id", "empty id");
    if (c[1].empty()) throw SchemaError(row.line, "country_name", "empty name");
    if (c[2] != "0" && c[2] != "1") throw SchemaError(row.line, "is_europe", "expected 0 or 1");
    RegionRecord r;
    r.source_code = std::string(c[0]);
    r.id = text::lower(c[0]);
    r.display_name = std::string(c[1]);
    r.kind = RegionKind::Country;
    r.group = c[2] == "1" ? RegionGroup::Europe : RegionGroup::GlobalExUsEurope;
    r.mix = mix_from_row(row, 3, true);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RegionRecord> parse_aggregates(std::string_view csv) {
  std::vector<RegionRecord> out;
  for (const auto& row : text::read_csv(csv, kAggregatesHeader)) {
    const auto& c = row.cells;
    if (c[0].empty()) throw SchemaError(row.line, "region_id", "empty id");
    RegionRecord r;
    r.source_code = std::string(c[0]);
    r.id = text::lower(c[0]);
    r.display_name = std::string(c[1]);
    r.kind = RegionKind::Aggregate;
    r.group = RegionGroup::None;
    r.mix = mix_from_row(row, 2, true);
    r.direct_rate_lbs_per_mwh = text::optional_number_cell(row, 6, "output_rate_lbs_per_mwh");
    if (r.direct_rate_lbs_per_mwh && *r.direct_rate_lbs_per_mwh < 0.0) {
      throw SchemaError(row.line, "output_rate_lbs_per_mwh", "negative rate");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string serialize_egrid(std::span<const EgridRow> rows) {
  std::string out(kEgridHeader);
  out += '\n';
  for (const auto& row : rows) {
    check_name(row.region.display_name, "state name");
    out += row.region.source_code + ',' + row.region.display_name + ',' +
           mix_cells(row.region.mix) + ',' + optional_cell(row.region.direct_rate_lbs_per_mwh) +
           ',' + text::shortest(row.generation_mwh.coal) + ',' +
           text::shortest(row.generation_mwh.oil) + ',' +
           text::shortest(row.generation_mwh.natural_gas) + ',';
    if (row.emissions_kt) {
      out += text::shortest(row.emissions_kt->coal) + ',' + text::shortest(row.emissions_kt->oil) +
             ',' + text::shortest(row.emissions_kt->natural_gas);
    } else {
      out += ",,";
    }
    out += '\n';
  }
  return out;
}

std::string serialize_eia(std::span<const RegionRecord> countries) {
  std::string out(kEiaHeader);
  out += '\n';
  for (const auto& r : countries) {
    check_name(r.display_name, "country name");
    out += r.source_code + ',' + r.display_name + ',' +
           (r.group == RegionGroup::Europe ? "1" : "0") + ',' + mix_cells(r.mix) + '\n';
  }
  return out;
}

std::string serialize_aggregates(std::span<const RegionRecord> aggregates) {
  std::string out(kAggregatesHeader);
  out += '\n';
  for (const auto& r : aggregates) {
    check_name(r.display_name, "aggregate name");
    out += r.source_code + ',' + r.display_name + ',' + mix_cells(r.mix) + ',' +
           optional_cell(r.direct_rate_lbs_per_mwh) + '\n';
  }
  return out;
}

DatasetSnapshot::DatasetSnapshot(std::vector<EgridRow> states, std::vector<RegionRecord> countries,
                                 std::vector<RegionRecord> aggregates,
                                 FuelIntensities intensities, std::string vintage,
                                 std::vector<std::string> provenance)
    : states_(std::move(states)),
      intensities_(intensities),
      vintage_(std::move(vintage)),
      provenance_(std::move(provenance)) {
  for (const auto& s : states_) {
    if (s.region.kind == RegionKind::UsState && !s.region.direct_rate_lbs_per_mwh) {
      throw std::invalid_argument("state " + s.region.id + " has no output emission rate");
    }
    regions_.push_back(s.region);
  }
  for (auto& r : countries) regions_.push_back(std::move(r));
  for (auto& r : aggregates) regions_.push_back(std::move(r));
  for (std::size_t i = 0; i < regions_.size(); ++i) {
    if (!by_id_.emplace(regions_[i].id, i).second) {
      throw std::invalid_argument("duplicate region id '" + regions_[i].id + "'");
    }
  }
}

DatasetSnapshot DatasetSnapshot::from_files(const SnapshotFiles& files, std::string vintage) {
  std::vector<std::string> provenance = {
      "US EPA eGRID" + vintage + ": state resource mix and output emission rates",
      "US EIA international data, " + vintage + ": energy consumption by source",
  };
  return DatasetSnapshot(parse_egrid(files.egrid_csv), parse_eia(files.eia_csv),
                         parse_aggregates(files.aggregates_csv), canonical_intensities(),
                         std::move(vintage), std::move(provenance));
}

const SnapshotFiles& DatasetSnapshot::builtin_files() {
  static const SnapshotFiles files{std::string(embedded::egrid_2016),
                                   std::string(embedded::eia_2016),
                                   std::string(embedded::aggregates_2016)};
  return files;
}

const DatasetSnapshot& DatasetSnapshot::builtin() {
  static const DatasetSnapshot snapshot = [] {
    auto s = from_files(builtin_files(), "2016");
    s.validate_coverage();
    return s;
  }();
  return snapshot;
}

DatasetSnapshot DatasetSnapshot::load_directory(const fs::path& dir) {
  SnapshotFiles files{read_file(dir / "egrid_2016.csv"), read_file(dir / "eia_2016.csv"),
                      read_file(dir / "aggregates_2016.csv")};
  auto s = from_files(files, "2016");
  s.validate_coverage();
  return s;
}

void DatasetSnapshot::validate_coverage() const {
  static constexpr std::array<std::string_view, 51> kStates = {
      "AK", "AL", "AR", "AZ", "CA", "CO", "CT", "DC", "DE", "FL", "GA", "HI", "IA",
      "ID", "IL", "IN", "KS", "KY", "LA", "MA", "MD", "ME", "MI", "MN", "MO", "MS",
      "MT", "NC", "ND", "NE", "NH", "NJ", "NM", "NV", "NY", "OH", "OK", "OR", "PA",
      "RI", "SC", "SD", "TN", "TX", "UT", "VA", "VT", "WA", "WI", "WV", "WY"};
  for (auto code : kStates) {
    const auto* r = find("us-" + text::lower(code));
    if (r == nullptr || r->kind != RegionKind::UsState) {
      throw std::invalid_argument("snapshot is missing state " + std::string(code));
    }
  }
  for (std::string_view id : {"us-average", "europe-average", "world-average"}) {
    const auto* r = find(id);
    if (r == nullptr || r->kind != RegionKind::Aggregate) {
      throw std::invalid_argument("snapshot is missing aggregate " + std::string(id));
    }
  }
}

const RegionRecord* DatasetSnapshot::find(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &regions_[it->second];
}

const RegionRecord& DatasetSnapshot::lookup(std::string_view key) const {
  const std::string wanted = normalize_key(key);
  std::vector<const RegionRecord*> hits;
  for (const auto& r : regions_) {
    if (normalize_key(r.id) == wanted || normalize_key(r.display_name) == wanted) {
      hits.push_back(&r);
    }
  }
  if (hits.size() == 1) return *hits.front();

  std::vector<std::string> suggestions;
  if (hits.size() > 1) {
    for (const auto* r : hits) suggestions.push_back(r->id);
    throw UnknownRegion(std::string(key), suggestions,
                        "region '" + std::string(key) + "' is ambiguous; use one of the ids: " +
                            suggestions.front() + ", " + suggestions[1]);
  }

  std::vector<std::pair<std::size_t, const RegionRecord*>> ranked;
  const std::size_t limit = std::max<std::size_t>(2, wanted.size() / 3);
  for (const auto& r : regions_) {
    const auto d = std::min(edit_distance(wanted, normalize_key(r.id)),
                            edit_distance(wanted, normalize_key(r.display_name)));
    if (d <= limit) ranked.emplace_back(d, &r);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < ranked.size() && i < 3; ++i) {
    suggestions.push_back(ranked[i].second->display_name);
  }
  std::string what = "unknown region '" + std::string(key) + "'";
  if (!suggestions.empty()) {
    what += "; did you mean ";
    for (std::size_t i = 0; i < suggestions.size(); ++i) {
      if (i > 0) what += i + 1 == suggestions.size() ? " or " : ", ";
      what += suggestions[i];
    }
    what += "?";
  }
  throw UnknownRegion(std::string(key), std::move(suggestions), what);
}

std::vector<const RegionRecord*> DatasetSnapshot::members(RegionGroup group) const {
  std::vector<const RegionRecord*> out;
  for (const auto& r : regions_) {
    if (r.group == group && r.kind != RegionKind::Aggregate) out.push_back(&r);
  }
  return out;
}

std::optional<FuelIntensities> calibrated_intensities(const DatasetSnapshot& snapshot) {
  FuelIntensities sum;
  std::size_t n = 0;
  for (const auto& row : snapshot.state_rows()) {
    if (!row.emissions_kt) continue;
    const auto d = derive_fuel_intensity(row.generation_mwh, *row.emissions_kt);
    sum.coal += d.coal;
    sum.oil += d.oil;
    sum.natural_gas += d.natural_gas;
    ++n;
  }
  if (n == 0) return std::nullopt;
  const double k = static_cast<double>(n);
  return FuelIntensities{sum.coal / k, sum.oil / k, sum.natural_gas / k, 0.0};
}

RegionExtremes region_extremes(const DatasetSnapshot& snapshot, RegionGroup group) {
  if (group == RegionGroup::None) throw UnknownGroup("aggregates have no extremes");
  std::vector<std::pair<double, const RegionRecord*>> ranked;
  for (const auto* r : snapshot.members(group)) {
    ranked.emplace_back(effective_intensity(*r, snapshot.intensities()), r);
  }
  if (ranked.empty()) throw EmptyGroup("group '" + std::string(to_string(group)) + "' is empty");
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second->id < b.second->id;
  });
  return RegionExtremes{*ranked.front().second, *ranked[ranked.size() / 2].second,
                        *ranked.back().second};
}

}  // namespace gridprint
