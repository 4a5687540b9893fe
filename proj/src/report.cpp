// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/report.hpp"

#include <cmath>
#include <ctime>
#include <numbers>

#include <fmt/format.h>
#include <json.hpp>

#include "gridprint/error.hpp"
#include "gridprint/version.hpp"
#include "text.hpp"

namespace gridprint {

using nlohmann::json;

ReportDocument build_report(const ReportHeader& header, const MeasurementSummary& summary,
                            const LocationResolution& resolution, const DatasetSnapshot& snapshot,
                            const EquivalencyFactors& factors, std::string started_at,
                            std::string finished_at) {
  ReportDocument doc;
  doc.tool_version = kVersion;
  doc.started_at = std::move(started_at);
  doc.finished_at = std::move(finished_at);
  doc.header = header;
  doc.readings = summary;
  doc.mix_region_name = resolution.region.display_name;
  doc.mix = resolution.region.mix;
  const auto result =
      emissions_for_energy(summary.adjusted_kwh, resolution.region, snapshot.intensities());
  doc.kwh = result.kwh;
  doc.intensity_kg_per_kwh = result.intensity_kg_per_kwh;
  doc.kg_co2 = result.kg_co2;
  doc.assumptions = snapshot.intensities();
  doc.factors = factors;
  doc.equivalents = equivalents(result.kg_co2, factors);
  doc.comparisons = comparison_sets(summary.adjusted_kwh, resolution.region, snapshot).sets;
  doc.resolution = resolution;
  if (summary.process_watts_clamped) {
    doc.warnings.push_back(
        "average total wattage was below the baseline; process wattage floored at 0");
  }
  return doc;
}

std::string iso_utc(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  ::gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_duration(double seconds) {
  const auto total = static_cast<long long>(std::llround(std::max(seconds, 0.0)));
  return fmt::format("{}:{:02}:{:02}", total / 3600, (total / 60) % 60, total % 60);
}

namespace {

std::string command_line(const ReportHeader& h) {
  std::string out = h.command;
  for (const auto& a : h.arguments) out += " " + a;
  return out;
}

constexpr std::array<const char*, 4> kFuelLabels = {"Coal", "Oil", "Natural gas", "Low carbon"};
constexpr std::array<const char*, 4> kFuelKeys = {"coal", "oil", "natural_gas", "low_carbon"};
constexpr std::array<const char*, 4> kFuelColors = {"#4d4d4d", "#a6611a", "#2c7bb6", "#1a9641"};
constexpr std::array<const char*, 3> kPositions = {"lowest", "median", "highest"};

std::array<double, 4> shares(const EnergyMix& m) {
  return {m.coal, m.oil, m.natural_gas, m.low_carbon};
}

std::array<double, 4> shares(const FuelIntensities& f) {
  return {f.coal, f.oil, f.natural_gas, f.low_carbon};
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
  std::string out;
  const auto line = [&out](std::string_view s) {
    out += s;
    out += '\n';
  };
  line("Energy Usage Report");
  line("===================");
  line(fmt::format("Energy usage and CO2 emissions for the command `{}`.",
                   command_line(doc.header)));
  if (doc.interrupted) line("Note: the command was interrupted; readings cover the part that ran.");
  if (doc.exit_status) line(fmt::format("Exit status: {}", *doc.exit_status));
  line("");

  const auto& r = doc.readings;
  line("Energy Usage Readings");
  line(fmt::format("  Average baseline wattage: {:.2f} watts", r.baseline_watts));
  line(fmt::format("  Average total wattage: {:.2f} watts", r.total_watts));
  line(fmt::format("  Average process wattage: {:.2f} watts", r.process_watts));
  line(fmt::format("  Process duration: {}", format_duration(r.duration_s)));
  line(fmt::format("  Power supply efficiency: {:.0f}%", r.psu_efficiency * 100.0));
  line("");

  line(fmt::format("Energy Mix Data ({})", doc.mix_region_name));
  const auto mix = shares(doc.mix);
  for (std::size_t i = 0; i < 4; ++i) {
    line(fmt::format("  {}: {:.2f}%", kFuelLabels[i], mix[i] * 100.0));
  }
  line(fmt::format("  Location: {} ({})", doc.resolution.region.display_name,
                   to_string(doc.resolution.method)));
  if (doc.resolution.method == ResolutionMethod::DefaultFallback) {
    line(fmt::format("  Note: location defaulted to {}",
                     text::lower(doc.resolution.region.display_name)));
  }
  line("");

  line("Summary");
  line(fmt::format("  Total kilowatt hours used: {:.3g} kWh", doc.kwh));
  line(fmt::format("  Effective emissions: {:.2e} kg CO2", doc.kg_co2));
  line("");

  line("Assumed Carbon Equivalencies");
  const auto fuels = shares(doc.assumptions);
  for (std::size_t i = 0; i < 4; ++i) {
    line(fmt::format("  {}: {:g} kg CO2/MWh", kFuelLabels[i], fuels[i]));
  }
  line("");

  line("CO2 Emissions Equivalents");
  line(fmt::format("  Miles driven: {:.2e} mi", doc.equivalents.miles));
  line(fmt::format("  Min. of 32-in. LCD TV: {:.2f} min.", doc.equivalents.tv_minutes));
  line(fmt::format("  % of CO2 per US house/day: {:.2e}%", doc.equivalents.household_day_percent));
  line("");

  line("Emission Comparisons");
  line("CO2 emissions for the command if the computation had been performed elsewhere.");
  line(fmt::format("  Local ({}): {:.2e} kg CO2", doc.resolution.region.display_name,
                   doc.kg_co2));
  for (const auto& set : doc.comparisons) {
    line(fmt::format("  {}", set.label));
    for (std::size_t i = 0; i < set.entries.size(); ++i) {
      line(fmt::format("    {} ({}): {:.2e} kg CO2", set.entries[i].region.display_name,
                       kPositions[i], set.entries[i].kg_co2));
    }
  }

  for (const auto& w : doc.warnings) line("Warning: " + w);
  return out;
}

namespace {

json mix_json(const EnergyMix& m) {
  return {{"coal", m.coal}, {"oil", m.oil}, {"natural_gas", m.natural_gas},
          {"low_carbon", m.low_carbon}};
}

EnergyMix mix_from(const json& j) {
  return {j.at("coal").get<double>(), j.at("oil").get<double>(),
          j.at("natural_gas").get<double>(), j.at("low_carbon").get<double>()};
}

json region_json(const RegionRecord& r) {
  return {{"id", r.id},
          {"display_name", r.display_name},
          {"kind", to_string(r.kind)},
          {"group", to_string(r.group)},
          {"mix", mix_json(r.mix)},
          {"direct_rate_lbs_per_mwh",
           r.direct_rate_lbs_per_mwh ? json(*r.direct_rate_lbs_per_mwh) : json(nullptr)},
          {"source_code", r.source_code}};
}

RegionRecord region_from(const json& j) {
  RegionRecord r;
  r.id = j.at("id").get<std::string>();
  r.display_name = j.at("display_name").get<std::string>();
  r.kind = parse_region_kind(j.at("kind").get<std::string>());
  r.group = parse_region_group(j.at("group").get<std::string>());
  r.mix = mix_from(j.at("mix"));
  const auto& rate = j.at("direct_rate_lbs_per_mwh");
  if (!rate.is_null()) r.direct_rate_lbs_per_mwh = rate.get<double>();
  r.source_code = j.at("source_code").get<std::string>();
  return r;
}

}  // namespace

std::string render_json(const ReportDocument& doc) {
  const auto& r = doc.readings;
  json comparisons = json::array();
  for (const auto& set : doc.comparisons) {
    json entries = json::array();
    for (std::size_t i = 0; i < set.entries.size(); ++i) {
      entries.push_back({{"position", kPositions[i]},
                         {"region", region_json(set.entries[i].region)},
                         {"kg_co2", set.entries[i].kg_co2}});
    }
    comparisons.push_back(
        {{"label", set.label}, {"group", to_string(set.group)}, {"entries", entries}});
  }
  json j = {
      {"schema_version", doc.schema_version},
      {"tool_version", doc.tool_version},
      {"started_at", doc.started_at},
      {"finished_at", doc.finished_at},
      {"header", {{"command", doc.header.command}, {"arguments", doc.header.arguments}}},
      {"readings",
       {{"baseline_watts", r.baseline_watts},
        {"total_watts", r.total_watts},
        {"process_watts", r.process_watts},
        {"duration_s", r.duration_s},
        {"measured_kwh", r.measured_kwh},
        {"adjusted_kwh", r.adjusted_kwh},
        {"psu_efficiency", r.psu_efficiency},
        {"process_watts_clamped", r.process_watts_clamped}}},
      {"mix", {{"region_name", doc.mix_region_name}, {"shares", mix_json(doc.mix)}}},
      {"summary",
       {{"kwh", doc.kwh},
        {"intensity_kg_per_kwh", doc.intensity_kg_per_kwh},
        {"kg_co2", doc.kg_co2}}},
      {"assumptions_kg_per_mwh",
       {{"coal", doc.assumptions.coal},
        {"oil", doc.assumptions.oil},
        {"natural_gas", doc.assumptions.natural_gas},
        {"low_carbon", doc.assumptions.low_carbon}}},
      {"equivalency_factors",
       {{"kg_per_mile", doc.factors.kg_per_mile},
        {"kg_per_tv_minute", doc.factors.kg_per_tv_minute},
        {"kg_per_household_day", doc.factors.kg_per_household_day}}},
      {"equivalents",
       {{"miles", doc.equivalents.miles},
        {"tv_minutes", doc.equivalents.tv_minutes},
        {"household_day_percent", doc.equivalents.household_day_percent}}},
      {"comparisons", comparisons},
      {"resolution",
       {{"region", region_json(doc.resolution.region)},
        {"method", to_string(doc.resolution.method)},
        {"detail", doc.resolution.detail}}},
      {"exit_status", doc.exit_status ? json(*doc.exit_status) : json(nullptr)},
      {"interrupted", doc.interrupted},
      {"warnings", doc.warnings},
  };
  return j.dump(2) + "\n";
}

ReportDocument parse_report_json(std::string_view text_in) {
  const json j = json::parse(text_in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw SchemaError(0, "*", "not a JSON object");
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kReportSchemaVersion) {
      throw SchemaError(0, "schema_version", "unsupported version '" + doc.schema_version + "'");
    }
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.started_at = j.at("started_at").get<std::string>();
    doc.finished_at = j.at("finished_at").get<std::string>();
    doc.header.command = j.at("header").at("command").get<std::string>();
    doc.header.arguments = j.at("header").at("arguments").get<std::vector<std::string>>();

    const auto& r = j.at("readings");
    doc.readings.baseline_watts = r.at("baseline_watts").get<double>();
    doc.readings.total_watts = r.at("total_watts").get<double>();
    doc.readings.process_watts = r.at("process_watts").get<double>();
    doc.readings.duration_s = r.at("duration_s").get<double>();
    doc.readings.measured_kwh = r.at("measured_kwh").get<double>();
    doc.readings.adjusted_kwh = r.at("adjusted_kwh").get<double>();
    doc.readings.psu_efficiency = r.at("psu_efficiency").get<double>();
    doc.readings.process_watts_clamped = r.at("process_watts_clamped").get<bool>();

    doc.mix_region_name = j.at("mix").at("region_name").get<std::string>();
    doc.mix = mix_from(j.at("mix").at("shares"));
    doc.kwh = j.at("summary").at("kwh").get<double>();
    doc.intensity_kg_per_kwh = j.at("summary").at("intensity_kg_per_kwh").get<double>();
    doc.kg_co2 = j.at("summary").at("kg_co2").get<double>();
    const auto& a = j.at("assumptions_kg_per_mwh");
    doc.assumptions = {a.at("coal").get<double>(), a.at("oil").get<double>(),
                       a.at("natural_gas").get<double>(), a.at("low_carbon").get<double>()};
    const auto& f = j.at("equivalency_factors");
    doc.factors = {f.at("kg_per_mile").get<double>(), f.at("kg_per_tv_minute").get<double>(),
                   f.at("kg_per_household_day").get<double>()};
    const auto& e = j.at("equivalents");
    doc.equivalents = {e.at("miles").get<double>(), e.at("tv_minutes").get<double>(),
                       e.at("household_day_percent").get<double>()};

    const auto& sets = j.at("comparisons");
    if (!sets.is_array() || sets.size() != doc.comparisons.size()) {
      throw SchemaError(0, "comparisons", "expected 3 comparison sets");
    }
    for (std::size_t i = 0; i < doc.comparisons.size(); ++i) {
      auto& set = doc.comparisons[i];
      set.label = sets[i].at("label").get<std::string>();
      set.group = parse_region_group(sets[i].at("group").get<std::string>());
      const auto& entries = sets[i].at("entries");
      if (!entries.is_array() || entries.size() != set.entries.size()) {
        throw SchemaError(0, "entries", "expected 3 entries");
      }
      for (std::size_t k = 0; k < set.entries.size(); ++k) {
        set.entries[k] = {region_from(entries[k].at("region")),
                          entries[k].at("kg_co2").get<double>()};
      }
    }

    const auto& res = j.at("resolution");
    doc.resolution = {region_from(res.at("region")),
                      parse_resolution_method(res.at("method").get<std::string>()),
                      res.at("detail").get<std::string>()};
    if (!j.at("exit_status").is_null()) doc.exit_status = j.at("exit_status").get<int>();
    doc.interrupted = j.at("interrupted").get<bool>();
    doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    return doc;
  } catch (const json::exception& e) {
    throw SchemaError(0, "*", e.what());
  } catch (const UnknownGroup& e) {
    throw SchemaError(0, "group", e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(0, "*", e.what());
  }
}

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

// Fixed precision keeps chart geometry byte-stable.
std::string num(double v) {
  const std::string s = fmt::format("{:.3f}", v);
  return s == "-0.000" ? "0.000" : s;
}

constexpr double kPieCx = 110.0;
constexpr double kPieCy = 110.0;
constexpr double kPieR = 100.0;

std::pair<double, double> on_circle(double fraction_of_turn) {
  // Angle measured clockwise from 12 o'clock; SVG y grows downward.
  const double a = fraction_of_turn * 2.0 * std::numbers::pi;
  return {kPieCx + kPieR * std::sin(a), kPieCy - kPieR * std::cos(a)};
}

std::string pie_svg(const ReportDocument& doc) {
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" class=\"mix-pie\" "
      "width=\"360\" height=\"220\" viewBox=\"0 0 360 220\" role=\"img\" "
      "aria-label=\"Energy mix of {}\">\n",
      escape(doc.mix_region_name));
  const auto mix = shares(doc.mix);
  const double total = mix[0] + mix[1] + mix[2] + mix[3];
  double start = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double fraction = total > 0.0 ? mix[i] / total : 0.0;
    const std::string attrs =
        fmt::format("class=\"wedge\" data-fuel=\"{}\" data-fraction=\"{}\" "
                    "data-start-deg=\"{}\" data-sweep-deg=\"{}\" fill=\"{}\"",
                    kFuelKeys[i], text::shortest(mix[i]), num(start * 360.0),
                    num(fraction * 360.0), kFuelColors[i]);
    if (fraction >= 1.0 - 1e-12) {
      out += fmt::format("  <circle {} cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", attrs, num(kPieCx),
                         num(kPieCy), num(kPieR));
    } else if (fraction > 0.0) {
      const auto [x0, y0] = on_circle(start);
      const auto [x1, y1] = on_circle(start + fraction);
      out += fmt::format(
          "  <path {} d=\"M {} {} L {} {} A {} {} 0 {} 1 {} {} Z\"/>\n", attrs, num(kPieCx),
          num(kPieCy), num(x0), num(y0), num(kPieR), num(kPieR), fraction > 0.5 ? 1 : 0,
          num(x1), num(y1));
    }
    start += fraction;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const double y = 40.0 + 30.0 * static_cast<double>(i);
    out += fmt::format(
        "  <rect x=\"230\" y=\"{}\" width=\"14\" height=\"14\" fill=\"{}\"/>"
        "<text x=\"250\" y=\"{}\" font-size=\"12\">{} {:.1f}%</text>\n",
        num(y), kFuelColors[i], num(y + 12.0), kFuelLabels[i], mix[i] * 100.0);
  }
  out += "</svg>\n";
  return out;
}

constexpr double kBarTop = 20.0;
constexpr double kBarHeight = 150.0;
constexpr double kBarWidth = 50.0;
constexpr double kBarGap = 20.0;

std::string bar_svg(const ComparisonSet& set, const ReportDocument& doc) {
  struct Bar {
    std::string label;
    std::string role;
    double kg;
  };
  std::vector<Bar> bars = {{doc.resolution.region.display_name, "local", doc.kg_co2}};
  for (std::size_t i = 0; i < set.entries.size(); ++i) {
    bars.push_back({set.entries[i].region.display_name, kPositions[i], set.entries[i].kg_co2});
  }
  double max_kg = 0.0;
  for (const auto& b : bars) max_kg = std::max(max_kg, b.kg);

  const double width = kBarGap + static_cast<double>(bars.size()) * (kBarWidth + kBarGap);
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" class=\"comparison\" "
      "data-group=\"{}\" data-max-kg=\"{}\" width=\"{}\" height=\"240\" "
      "viewBox=\"0 0 {} 240\" role=\"img\" aria-label=\"{}\">\n",
      to_string(set.group), text::shortest(max_kg), num(width), num(width), escape(set.label));
  out += fmt::format("  <text x=\"{}\" y=\"14\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
                     num(width / 2.0), escape(set.label));
  const double base = kBarTop + kBarHeight;
  out += fmt::format("  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#000\"/>\n",
                     num(kBarGap / 2.0), num(base), num(width - kBarGap / 2.0), num(base));
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    const double h = max_kg > 0.0 ? b.kg / max_kg * kBarHeight : 0.0;
    const double x = kBarGap + static_cast<double>(i) * (kBarWidth + kBarGap);
    out += fmt::format(
        "  <rect class=\"bar\" data-role=\"{}\" data-region=\"{}\" data-kg=\"{}\" x=\"{}\" "
        "y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
        b.role, escape(b.label), text::shortest(b.kg), num(x), num(base - h), num(kBarWidth),
        num(h), b.role == std::string("local") ? "#d7191c" : "#7f7f7f");
    out += fmt::format(
        "  <text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
        num(x + kBarWidth / 2.0), num(base + 14.0), escape(b.label));
    out += fmt::format(
        "  <text x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"middle\">{:.2e}</text>\n",
        num(x + kBarWidth / 2.0), num(base + 28.0), b.kg);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string render_html(const ReportDocument& doc) {
  const auto& r = doc.readings;
  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<title>Energy Usage Report</title>\n";
  out += "<style>body{font-family:sans-serif;max-width:60em;margin:2em auto}"
         "table{border-collapse:collapse}td{padding:0.15em 0.6em}"
         "td:first-child{text-align:right}.box{border:1px solid #999;padding:0.5em 1em;"
         "margin:1em 0}.charts svg{margin-right:1em}</style>\n";
  out += "</head>\n<body>\n<h1>Energy Usage Report</h1>\n";
  out += fmt::format("<p>Energy usage and CO<sub>2</sub> emissions for the command "
                     "<code>{}</code>.</p>\n",
                     escape(command_line(doc.header)));
  if (doc.interrupted) {
    out += "<p class=\"note\">The command was interrupted; readings cover the part that ran.</p>\n";
  }

  out += "<h2>Energy Usage Readings</h2>\n<table class=\"readings\">\n";
  out += fmt::format("<tr><td>Average baseline wattage:</td><td>{:.2f} watts</td></tr>\n",
                     r.baseline_watts);
  out += fmt::format("<tr><td>Average total wattage:</td><td>{:.2f} watts</td></tr>\n",
                     r.total_watts);
  out += fmt::format("<tr><td>Average process wattage:</td><td>{:.2f} watts</td></tr>\n",
                     r.process_watts);
  out += fmt::format("<tr><td>Process duration:</td><td>{}</td></tr>\n",
                     format_duration(r.duration_s));
  out += fmt::format("<tr><td>Power supply efficiency:</td><td>{:.0f}%</td></tr>\n</table>\n",
                     r.psu_efficiency * 100.0);

  out += fmt::format("<h2>Energy Mix Data ({})</h2>\n", escape(doc.mix_region_name));
  out += pie_svg(doc);
  out += fmt::format("<p>Location: {} ({})</p>\n", escape(doc.resolution.region.display_name),
                     to_string(doc.resolution.method));
  if (doc.resolution.method == ResolutionMethod::DefaultFallback) {
    out += fmt::format("<p class=\"note\">Note: location defaulted to {}</p>\n",
                       escape(text::lower(doc.resolution.region.display_name)));
  }

  out += "<div class=\"box\"><table class=\"summary\">\n";
  out += fmt::format("<tr><td><b>Total kilowatt hours used:</b></td><td>{:.3g} kWh</td></tr>\n",
                     doc.kwh);
  out += fmt::format(
      "<tr><td><b>Effective emissions:</b></td><td>{:.2e} kg CO<sub>2</sub></td></tr>\n",
      doc.kg_co2);
  out += "</table></div>\n";

  out += "<h2>Assumed Carbon Equivalencies</h2>\n<table class=\"assumptions\">\n";
  const auto fuels = shares(doc.assumptions);
  for (std::size_t i = 0; i < 4; ++i) {
    out += fmt::format("<tr><td>{}:</td><td>{:g} kg CO<sub>2</sub>/MWh</td></tr>\n",
                       kFuelLabels[i], fuels[i]);
  }
  out += "</table>\n";

  out += "<h2>CO<sub>2</sub> Emissions Equivalents</h2>\n<table class=\"equivalents\">\n";
  out += fmt::format("<tr><td>Miles driven:</td><td>{:.2e} mi</td></tr>\n", doc.equivalents.miles);
  out += fmt::format("<tr><td>Min. of 32-in. LCD TV:</td><td>{:.2f} min.</td></tr>\n",
                     doc.equivalents.tv_minutes);
  out += fmt::format("<tr><td>% of CO<sub>2</sub> per US house/day:</td><td>{:.2e}%</td></tr>\n",
                     doc.equivalents.household_day_percent);
  out += "</table>\n";

  out += "<h2>Emission Comparisons</h2>\n";
  out += "<p>CO<sub>2</sub> emissions for the command if the computation had been performed "
         "elsewhere.</p>\n<div class=\"charts\">\n";
  for (const auto& set : doc.comparisons) out += bar_svg(set, doc);
  out += "</div>\n";

  for (const auto& w : doc.warnings) {
    out += fmt::format("<p class=\"warning\">Warning: {}</p>\n", escape(w));
  }
  out += fmt::format("<footer><small>gridprint {} | started {} | finished {}</small></footer>\n",
                     escape(doc.tool_version), escape(doc.started_at), escape(doc.finished_at));
  out += "</body>\n</html>\n";
  return out;
}

}  // namespace gridprint
