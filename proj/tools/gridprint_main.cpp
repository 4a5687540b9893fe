// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

// gridprint: measure a command's energy use and report its CO2 emissions.
//
//   gridprint run [options] -- <command> [args...]
//   gridprint regions [--extremes us|europe|global]
//   gridprint bench <linear|quadratic|exp> <n> [options]

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "gridprint/bench.hpp"
#include "gridprint/emissions.hpp"
#include "gridprint/error.hpp"
#include "gridprint/gpu.hpp"
#include "gridprint/grid_data.hpp"
#include "gridprint/locate.hpp"
#include "gridprint/meter.hpp"
#include "gridprint/powercap.hpp"
#include "gridprint/profiler.hpp"
#include "gridprint/report.hpp"
#include "gridprint/trace.hpp"
#include "gridprint/version.hpp"

namespace {

using namespace gridprint;

constexpr int kEnvironmentError = 2;
constexpr int kSpawnError = 127;

// Failure before anything was measured; main prints it and exits 2.
struct UsageError {
  std::string message;
};

struct DataOptions {
  std::string data_dir;
  std::string equivalencies;
};

struct MeasureOptions {
  MeterConfig config;
  bool no_baseline = false;
  bool gpu = false;
  std::string gpu_command = "nvidia-smi";
  std::string trace;
  std::string powercap_root = kPowercapRoot;

  std::string format = "text";
  std::string out;
  std::string report_to = "stderr";

  std::optional<std::string> location;
  std::string default_region = "world";
  bool offline = false;
  std::string geo_endpoint = kDefaultGeoEndpoint;
  double geo_timeout = 3.0;
};

void add_data_options(CLI::App& app, DataOptions& o) {
  app.add_option("--data-dir", o.data_dir,
                 "Directory with egrid_2016.csv, eia_2016.csv and aggregates_2016.csv")
      ->check(CLI::ExistingDirectory);
  app.add_option("--equivalencies", o.equivalencies, "Equivalency factors CSV")
      ->check(CLI::ExistingFile);
}

void add_measure_options(CLI::App& app, MeasureOptions& o) {
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "html"}));
  app.add_option("--out", o.out, "Write the report to this file");
  app.add_option("--report-to", o.report_to, "Stream for the report when --out is not given")
      ->check(CLI::IsMember({"stderr", "stdout"}));
  app.add_option("--efficiency", o.config.psu_efficiency, "Power supply efficiency in (0, 1]");
  app.add_option("--sample-interval", o.config.sample_interval_s, "Seconds between counter reads");
  app.add_option("--baseline", o.config.baseline_duration_s, "Seconds of idle baseline sampling");
  app.add_flag("--no-baseline", o.no_baseline, "Skip the baseline (baseline wattage 0)");
  app.add_flag("--gpu", o.gpu, "Add GPU power from nvidia-smi");
  app.add_option("--gpu-command", o.gpu_command)->group("");
  app.add_option("--trace", o.trace, "Replay a recorded counter trace instead of reading RAPL")
      ->check(CLI::ExistingFile);
  app.add_option("--powercap-root", o.powercap_root)->group("");

  app.add_option("--location", o.location, "Region id or name (overrides geolocation)");
  app.add_option("--default-region", o.default_region, "Fallback when the location is unknown")
      ->check(CLI::IsMember({"world", "us", "europe"}));
  app.add_flag("--offline", o.offline, "Do not call the geolocation service");
  app.add_option("--geo-endpoint", o.geo_endpoint, "GeoJS-compatible endpoint");
  app.add_option("--geo-timeout", o.geo_timeout, "Geolocation timeout in seconds");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReadFailure(path, "cannot open");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

DatasetSnapshot load_snapshot(const DataOptions& o) {
  if (o.data_dir.empty()) return DatasetSnapshot::builtin();
  return DatasetSnapshot::load_directory(o.data_dir);
}

EquivalencyFactors load_factors(const DataOptions& o) {
  if (o.equivalencies.empty()) return EquivalencyFactors::builtin();
  return EquivalencyFactors::parse(read_text_file(o.equivalencies));
}

std::unique_ptr<Meter> open_meter(const MeasureOptions& o) {
  if (!o.trace.empty()) return std::make_unique<TraceMeter>(TraceMeter::load(o.trace));
  try {
    return std::make_unique<PowercapMeter>(o.powercap_root);
  } catch (const NoPowercapInterface& e) {
    throw UsageError{std::string(e.what()) +
                     "\nThis host does not expose Intel RAPL counters. Run on a Linux host "
                     "with /sys/class/powercap mounted, or pass --trace <file> to replay a "
                     "recorded counter trace."};
  } catch (const ReadFailure& e) {
    throw UsageError{std::string(e.what()) +
                     "\nThe RAPL counters are not readable by this user. On recent kernels "
                     "energy_uj is root-only; grant read access (for example "
                     "`sudo chmod a+r /sys/class/powercap/intel-rapl/*/energy_uj`) "
                     "or pass --trace <file>."};
  }
}

MeterConfig effective_config(const MeasureOptions& o) {
  MeterConfig c = o.config;
  c.gpu_enabled = o.gpu;
  if (o.no_baseline) c.baseline_duration_s = 0.0;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError{e.what()};
  }
  return c;
}

LocationResolution locate(const MeasureOptions& o, const DatasetSnapshot& snapshot) {
  LocateOptions lo;
  lo.override_key = o.location;
  lo.env_value = region_from_environment();
  lo.default_choice = parse_default_choice(o.default_region);
  lo.offline = o.offline;
  lo.timeout_s = o.geo_timeout;
  lo.endpoint = o.geo_endpoint;
  return resolve_location(lo, snapshot);
}

void emit_report(const ReportDocument& doc, const MeasureOptions& o) {
  std::string body;
  if (o.format == "json") {
    body = render_json(doc);
  } else if (o.format == "html") {
    body = render_html(doc);
  } else {
    body = render_text(doc);
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::binary);
    out << body;
    if (!out) {
      std::fprintf(stderr, "gridprint: cannot write report to %s\n", o.out.c_str());
    }
    return;
  }
  std::FILE* stream = o.report_to == "stdout" ? stdout : stderr;
  std::fflush(stdout);
  std::fwrite(body.data(), 1, body.size(), stream);
  std::fflush(stream);
}

struct Measured {
  int exit_status = 0;
  std::optional<ReportDocument> doc;
};

Measured measure(const MeasureOptions& o, const DataOptions& d, const ReportHeader& header,
                 const Workload& work) {
  const MeterConfig config = effective_config(o);
  const auto snapshot = load_snapshot(d);
  const auto factors = load_factors(d);
  const auto resolution = locate(o, snapshot);
  auto meter = open_meter(o);

  GpuProbe gpu;
  if (config.gpu_enabled) {
    gpu = [program = o.gpu_command, interval = config.sample_interval_s] {
      return read_gpu_power(program, interval);
    };
  }

  const auto result = profile(*meter, config, work, gpu);
  Measured m{result.exit_status, std::nullopt};
  if (!result.summary) {
    std::fprintf(stderr, "gridprint: measurement failed: %s\n", result.error.c_str());
    return m;
  }
  auto doc = build_report(header, *result.summary, resolution, snapshot, factors,
                          iso_utc(result.started), iso_utc(result.finished));
  doc.interrupted = result.interrupted;
  m.doc = std::move(doc);
  return m;
}

int cmd_run(const MeasureOptions& o, const DataOptions& d, const std::vector<std::string>& argv) {
  if (argv.empty()) throw UsageError{"run needs a command after --"};
  ReportHeader header{argv.front(), {argv.begin() + 1, argv.end()}};
  try {
    auto m = measure(o, d, header, [&] { return spawn_and_wait(argv); });
    if (m.doc) {
      m.doc->exit_status = m.exit_status;
      emit_report(*m.doc, o);
    }
    return m.exit_status;
  } catch (const SpawnFailure& e) {
    std::fprintf(stderr, "gridprint: %s\n", e.what());
    return kSpawnError;
  }
}

int cmd_regions(const DataOptions& d, const std::string& extremes) {
  const auto snapshot = load_snapshot(d);
  if (!extremes.empty()) {
    const auto ext = region_extremes(snapshot, parse_region_group(extremes));
    const char* labels[] = {"lowest", "median", "highest"};
    const RegionRecord* rows[] = {&ext.lowest, &ext.median, &ext.highest};
    for (int i = 0; i < 3; ++i) {
      fmt::print("{:<8} {:<28} {:<16} {:.4f} kg CO2/kWh\n", labels[i], rows[i]->display_name,
                 rows[i]->id, effective_intensity(*rows[i], snapshot.intensities()));
    }
    return 0;
  }
  for (const auto& r : snapshot.regions()) {
    fmt::print("{:<16} {:<34} {:<20} {:<10} coal {:5.1f}% oil {:5.1f}% gas {:5.1f}% "
               "low {:5.1f}%  {:.4f} kg CO2/kWh{}\n",
               r.id, r.display_name, to_string(r.group), to_string(r.kind), r.mix.coal * 100,
               r.mix.oil * 100, r.mix.natural_gas * 100, r.mix.low_carbon * 100,
               effective_intensity(r, snapshot.intensities()),
               r.direct_rate_lbs_per_mwh ? " (output rate)" : "");
  }
  return 0;
}

int cmd_bench(const MeasureOptions& o, const DataOptions& d, const std::string& shape,
              std::uint64_t n, std::uint64_t unit_ops) {
  WorkloadSpec spec;
  try {
    spec = {parse_shape(shape), n, unit_ops};
  } catch (const std::invalid_argument& e) {
    throw UsageError{e.what()};
  }
  const auto additions = total_additions(spec);
  std::uint64_t checksum = 0;
  ReportHeader header{"bench", {std::string(to_string(spec.shape)), std::to_string(n)}};
  auto m = measure(o, d, header, [&] {
    checksum = run_workload(spec);
    return 0;
  });
  fmt::print("bench {} {}: {} additions, checksum {}", to_string(spec.shape), n, additions,
             checksum);
  if (m.doc) {
    fmt::print(", {:.6g} s, {:.6g} kWh, {:.6g} kg CO2\n", m.doc->readings.duration_s, m.doc->kwh,
               m.doc->kg_co2);
    std::fflush(stdout);
    if (!o.out.empty()) emit_report(*m.doc, o);
    return 0;
  }
  fmt::print(", not measured\n");
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure a command's energy use and report its CO2 emissions."};
  app.set_version_flag("--version", std::string("gridprint ") + kVersion);
  app.require_subcommand(1);

  MeasureOptions run_opts;
  DataOptions run_data;
  std::vector<std::string> command;
  auto* run = app.add_subcommand("run", "Run a command under measurement");
  add_measure_options(*run, run_opts);
  add_data_options(*run, run_data);
  run->add_option("command", command, "Command and arguments (after --)");
  run->positionals_at_end();

  DataOptions regions_data;
  std::string extremes;
  auto* regions = app.add_subcommand("regions", "List regions or show a group's extremes");
  regions->add_option("--extremes", extremes, "us, europe or global");
  add_data_options(*regions, regions_data);

  MeasureOptions bench_opts;
  DataOptions bench_data;
  std::string shape;
  std::uint64_t bench_n = 0;
  std::uint64_t unit_ops = WorkloadSpec{}.unit_ops;
  auto* bench = app.add_subcommand("bench", "Run a synthetic workload under measurement");
  bench->add_option("shape", shape, "linear, quadratic or exp")->required();
  bench->add_option("n", bench_n, "Size parameter")->required();
  bench->add_option("--unit-ops", unit_ops, "Additions per work unit");
  add_measure_options(*bench, bench_opts);
  add_data_options(*bench, bench_data);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kEnvironmentError;
  }

  try {
    if (*run) return cmd_run(run_opts, run_data, command);
    if (*regions) return cmd_regions(regions_data, extremes);
    if (*bench) return cmd_bench(bench_opts, bench_data, shape, bench_n, unit_ops);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "gridprint: %s\n", e.message.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gridprint: %s\n", e.what());
  }
  return kEnvironmentError;
}
