// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/powercap.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include "gridprint/error.hpp"
#include "text.hpp"

namespace gridprint {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ReadFailure(path.string(), std::strerror(errno));
  }
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) {
    throw ReadFailure(path.string(), "read error");
  }
  return out.str();
}

std::uint64_t read_counter_file(const fs::path& path) {
  const auto value = parse_counter(read_file(path));
  if (!value) {
    throw ReadFailure(path.string(), "not a decimal counter");
  }
  return *value;
}

}  // namespace

std::optional<std::uint64_t> parse_counter(std::string_view text) {
  return text::to_uint(text);
}

std::vector<PackageDomain> enumerate_package_domains(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw NoPowercapInterface("no powercap hierarchy at " + root.string());
  }
  static const std::regex zone_name(R"(intel-rapl:(\d+))");
  std::vector<std::pair<unsigned long, PackageDomain>> found;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    const std::string name = entry.path().filename().string();
    std::smatch m;
    if (!std::regex_match(name, m, zone_name)) continue;
    const fs::path name_file = entry.path() / "name";
    if (!fs::exists(name_file, ec)) continue;
    if (!text::trim(read_file(name_file)).starts_with("package-")) continue;
    const auto index = std::stoul(m[1].str());
    found.push_back({index, PackageDomain{"pkg-" + m[1].str(), entry.path(),
                                          read_counter_file(entry.path() / "max_energy_range_uj")}});
  }
  if (ec) {
    throw NoPowercapInterface("cannot list " + root.string() + ": " + ec.message());
  }
  if (found.empty()) {
    throw NoPowercapInterface("no RAPL package domains under " + root.string());
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PackageDomain> domains;
  for (auto& [index, domain] : found) domains.push_back(std::move(domain));
  return domains;
}

EnergyCounterReading read_counter(const PackageDomain& domain, Seconds timestamp) {
  return EnergyCounterReading{domain.id, read_counter_file(domain.directory / "energy_uj"),
                              domain.max_range_uj, timestamp};
}

PowercapMeter::PowercapMeter(const fs::path& root)
    : domains_(enumerate_package_domains(root)), origin_(std::chrono::steady_clock::now()) {
  // Fail at construction rather than mid-session if the counters are root-only.
  for (const auto& d : domains_) read_counter(d, Seconds{0.0});
}

std::vector<std::string> PowercapMeter::domains() const {
  std::vector<std::string> ids;
  for (const auto& d : domains_) ids.push_back(d.id);
  return ids;
}

std::optional<std::vector<EnergyCounterReading>> PowercapMeter::poll() {
  std::vector<EnergyCounterReading> readings;
  readings.reserve(domains_.size());
  for (const auto& d : domains_) readings.push_back(read_counter(d, elapsed()));
  return readings;
}

void PowercapMeter::wait(Seconds interval) {
  std::this_thread::sleep_for(interval);
}

Seconds PowercapMeter::elapsed() const {
  return std::chrono::steady_clock::now() - origin_;
}

}  // namespace gridprint
