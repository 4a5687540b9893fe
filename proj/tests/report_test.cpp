// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <regex>

#include <json.hpp>

#include "gridprint/error.hpp"
#include "gridprint/report.hpp"
#include "temp_dir.hpp"

using namespace gridprint;
using gridprint::testing::slurp;

namespace {

const DatasetSnapshot& snap() {
  return DatasetSnapshot::builtin();
}

LocationResolution fallback_world() {
  return {snap().lookup("world-average"), ResolutionMethod::DefaultFallback,
          "offline; location defaulted to World average"};
}

ReportDocument example_doc() {
  const auto summary = summarize_averages(2.35, 15.53, 1000.0, 0.8);
  return build_report({"exp", {"10"}}, summary, fallback_world(), snap(),
                      EquivalencyFactors::builtin(), "2026-01-02T03:04:05Z",
                      "2026-01-02T03:20:45Z");
}

ReportDocument wyoming_doc() {
  const auto summary = summarize_averages(4.0, 9.5, 37.2, 0.9);
  auto doc = build_report({"make", {"-j8", "all"}}, summary,
                          {snap().lookup("wyoming"), ResolutionMethod::ExplicitFlag,
                           "--location wyoming"},
                          snap(), EquivalencyFactors::builtin(), "2026-03-04T05:06:07Z",
                          "2026-03-04T05:06:44Z");
  doc.exit_status = 0;
  return doc;
}

// Compares against tests/golden/<name>; GRIDPRINT_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::string& actual) {
  const std::filesystem::path path = std::filesystem::path(GRIDPRINT_TEST_DATA) / ".." /
                                     "golden" / name;
  if (std::getenv("GRIDPRINT_UPDATE_GOLDEN") != nullptr) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << actual;
  }
  INFO("golden file " << path.string());
  CHECK(slurp(path) == actual);
}

std::vector<double> attribute_values(const std::string& html, const std::string& attr) {
  std::vector<double> out;
  const std::regex re(attr + "=\"([-0-9.e+]+)\"");
  for (auto it = std::sregex_iterator(html.begin(), html.end(), re); it != std::sregex_iterator();
       ++it) {
    out.push_back(std::stod((*it)[1].str()));
  }
  return out;
}

}  // namespace

TEST_CASE("example readings appear as in the published report") {
  const auto doc = example_doc();
  CHECK(doc.readings.baseline_watts == 2.35);
  CHECK(doc.readings.total_watts == 15.53);
  const auto text = render_text(doc);
  CHECK(text.find("Average baseline wattage: 2.35 watts") != std::string::npos);
  CHECK(text.find("Average total wattage: 15.53 watts") != std::string::npos);
  CHECK(text.find("Average process wattage: 13.18 watts") != std::string::npos);
  CHECK(text.find("Process duration: 0:16:40") != std::string::npos);
  CHECK(text.find("Coal: 996 kg CO2/MWh") != std::string::npos);
  CHECK(text.find("Low carbon: 0 kg CO2/MWh") != std::string::npos);
  CHECK(text.find("location defaulted to world average") != std::string::npos);
}

TEST_CASE("document is internally consistent") {
  for (const auto& doc : {example_doc(), wyoming_doc()}) {
    const double recomputed =
        doc.readings.adjusted_kwh * effective_intensity(doc.resolution.region, doc.assumptions);
    CHECK(doc.kg_co2 == doctest::Approx(recomputed).epsilon(1e-9));
    CHECK(doc.kwh == doc.readings.adjusted_kwh);
    CHECK(doc.equivalents == equivalents(doc.kg_co2, doc.factors));
    CHECK(doc.assumptions == canonical_intensities());
    CHECK(doc.mix == doc.resolution.region.mix);
  }
}

TEST_CASE("zero-energy summary keeps the structure") {
  const auto summary = summarize_averages(5.0, 5.0, 10.0, 0.8);
  const auto doc = build_report({"true", {}}, summary, fallback_world(), snap(),
                                EquivalencyFactors::builtin(), "a", "b");
  CHECK(doc.kg_co2 == 0.0);
  CHECK(doc.equivalents == Equivalents{});
  for (const auto& set : doc.comparisons) {
    for (const auto& e : set.entries) CHECK(e.kg_co2 == 0.0);
  }
  CHECK_FALSE(render_text(doc).empty());
  CHECK(parse_report_json(render_json(doc)) == doc);
}

TEST_CASE("clamped process wattage is reported") {
  const auto doc = build_report({"x", {}}, summarize_averages(9.0, 5.0, 10.0, 0.8),
                                fallback_world(), snap(), EquivalencyFactors::builtin(), "a", "b");
  REQUIRE(doc.warnings.size() == 1);
  CHECK(render_text(doc).find("Warning: ") != std::string::npos);
}

TEST_CASE("duration formatting") {
  CHECK(format_duration(1000.0) == "0:16:40");
  CHECK(format_duration(0.4) == "0:00:00");
  CHECK(format_duration(3725.6) == "1:02:06");
  CHECK(format_duration(-3.0) == "0:00:00");
}

TEST_CASE("iso timestamps") {
  CHECK(iso_utc(std::chrono::system_clock::time_point{}) == "1970-01-01T00:00:00Z");
}

TEST_CASE("text and HTML are byte-identical across renders and match the golden files") {
  const auto a = example_doc();
  const auto b = example_doc();
  CHECK(render_text(a) == render_text(b));
  CHECK(render_html(a) == render_html(b));
  check_golden("example.txt", render_text(a));
  check_golden("example.html", render_html(a));
  check_golden("wyoming.txt", render_text(wyoming_doc()));
  check_golden("wyoming.html", render_html(wyoming_doc()));
}

TEST_CASE("JSON round-trips losslessly with a schema version") {
  for (const auto& doc : {example_doc(), wyoming_doc()}) {
    const auto json = render_json(doc);
    CHECK(parse_report_json(json) == doc);
    CHECK(nlohmann::json::parse(json).at("schema_version") == "1");
  }
}

TEST_CASE("JSON of documents differing only in timestamps differs only at timestamp keys") {
  auto a = example_doc();
  auto b = example_doc();
  b.started_at = "2030-01-01T00:00:00Z";
  b.finished_at = "2030-01-01T00:16:40Z";
  const auto patch = nlohmann::json::diff(nlohmann::json::parse(render_json(a)),
                                          nlohmann::json::parse(render_json(b)));
  REQUIRE(patch.size() == 2);
  for (const auto& op : patch) {
    const auto path = op.at("path").get<std::string>();
    CHECK((path == "/started_at" || path == "/finished_at"));
  }
}

TEST_CASE("JSON keys are sorted and numbers keep full precision") {
  auto doc = example_doc();
  doc.readings.duration_s = 0.1 + 0.2;
  const auto json = render_json(doc);
  CHECK(json.find("\"assumptions_kg_per_mwh\"") < json.find("\"comparisons\""));
  CHECK(parse_report_json(json).readings.duration_s == 0.1 + 0.2);
}

TEST_CASE("bad JSON is a SchemaError") {
  CHECK_THROWS_AS(parse_report_json("nope"), SchemaError);
  CHECK_THROWS_AS(parse_report_json("{}"), SchemaError);
  auto j = nlohmann::json::parse(render_json(example_doc()));
  j["schema_version"] = "2";
  CHECK_THROWS_AS(parse_report_json(j.dump()), SchemaError);
  j["schema_version"] = "1";
  j["comparisons"].erase(0);
  CHECK_THROWS_AS(parse_report_json(j.dump()), SchemaError);
}

TEST_CASE("pie wedges are proportional to the mix and start at 12 o'clock") {
  const auto html = render_html(example_doc());
  CHECK(html.find("http://") == html.find("http://www.w3.org/2000/svg"));
  CHECK(html.find("https://") == std::string::npos);
  CHECK(html.find("<script") == std::string::npos);
  const auto& mix = example_doc().mix;
  const auto sweeps = attribute_values(html, "data-sweep-deg");
  const auto starts = attribute_values(html, "data-start-deg");
  REQUIRE(sweeps.size() == 4);
  const double shares[] = {mix.coal, mix.oil, mix.natural_gas, mix.low_carbon};
  double start = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(sweeps[i] == doctest::Approx(shares[i] / mix.sum() * 360.0).epsilon(1e-4));
    CHECK(starts[i] == doctest::Approx(start).epsilon(1e-4));
    start += sweeps[i];
  }
  // First wedge begins straight above the centre.
  CHECK(html.find("d=\"M 110.000 110.000 L 110.000 10.000 A") != std::string::npos);
  CHECK(html.find("data-fuel=\"coal\"") < html.find("data-fuel=\"oil\""));
  CHECK(html.find("data-fuel=\"natural_gas\"") < html.find("data-fuel=\"low_carbon\""));
}

TEST_CASE("an all low-carbon mix is one full circle") {
  auto res = fallback_world();
  res.region.mix = {0, 0, 0, 1};
  res.region.direct_rate_lbs_per_mwh.reset();
  const auto doc = build_report({"x", {}}, summarize_averages(0, 1, 1, 1), res, snap(),
                                EquivalencyFactors::builtin(), "a", "b");
  const auto html = render_html(doc);
  CHECK(html.find("<circle class=\"wedge\" data-fuel=\"low_carbon\"") != std::string::npos);
  CHECK(html.find("<path class=\"wedge\"") == std::string::npos);
}

TEST_CASE("comparison bars are proportional to kg within each panel") {
  const auto doc = wyoming_doc();
  const auto html = render_html(doc);
  const auto kg = attribute_values(html, "data-kg");
  const auto heights = attribute_values(html, "height");
  REQUIRE(kg.size() == 12);
  std::size_t svg_count = 0;
  for (auto pos = html.find("<svg"); pos != std::string::npos; pos = html.find("<svg", pos + 1)) {
    ++svg_count;
  }
  CHECK(svg_count == 4);

  const std::regex bar(R"re(data-kg="([^"]+)" x="[^"]+" y="[^"]+" width="[^"]+" height="([^"]+)")re");
  std::vector<std::pair<double, double>> bars;
  for (auto it = std::sregex_iterator(html.begin(), html.end(), bar); it != std::sregex_iterator();
       ++it) {
    bars.emplace_back(std::stod((*it)[1].str()), std::stod((*it)[2].str()));
  }
  REQUIRE(bars.size() == 12);
  for (std::size_t panel = 0; panel < 3; ++panel) {
    double max_kg = 0.0;
    for (std::size_t i = 0; i < 4; ++i) max_kg = std::max(max_kg, bars[panel * 4 + i].first);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto [k, h] = bars[panel * 4 + i];
      CHECK(h == doctest::Approx(k / max_kg * 150.0).epsilon(1e-4));
    }
  }
  (void)heights;
}
