// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/trace.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gridprint/error.hpp"
#include "text.hpp"

namespace gridprint {

namespace {

constexpr std::string_view kTraceHeader = "timestamp_s,domain_id,energy_uj,max_range_uj";
constexpr double kTimeEpsilon = 1e-9;

}  // namespace

TraceMeter::TraceMeter(std::vector<std::vector<EnergyCounterReading>> instants)
    : instants_(std::move(instants)) {
  origin_ = instants_.front().front().timestamp;
  now_ = origin_;
}

TraceMeter TraceMeter::parse(std::string_view csv) {
  std::vector<std::vector<EnergyCounterReading>> instants;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(csv, '\n')) {
    ++line_no;
    line = text::trim(line);
    if (line.empty() || line.front() == '#' || line == kTraceHeader) continue;
    const auto cells = text::split(line, ',');
    if (cells.size() != 4) {
      throw SchemaError(line_no, "*", "expected 4 cells");
    }
    const auto t = text::to_double(cells[0]);
    if (!t || *t < 0.0) throw SchemaError(line_no, "timestamp_s", "invalid timestamp");
    const auto id = std::string(text::trim(cells[1]));
    if (id.empty()) throw SchemaError(line_no, "domain_id", "empty domain id");
    const auto energy = text::to_uint(cells[2]);
    if (!energy) throw SchemaError(line_no, "energy_uj", "invalid counter");
    const auto range = text::to_uint(cells[3]);
    if (!range) throw SchemaError(line_no, "max_range_uj", "invalid counter");
    if (*energy > *range) throw SchemaError(line_no, "energy_uj", "exceeds max_range_uj");

    EnergyCounterReading r{id, *energy, *range, Seconds{*t}};
    if (instants.empty() || instants.back().front().timestamp != r.timestamp) {
      if (!instants.empty() && !(r.timestamp > instants.back().front().timestamp)) {
        throw SchemaError(line_no, "timestamp_s", "timestamps must increase");
      }
      instants.emplace_back();
    }
    for (const auto& other : instants.back()) {
      if (other.domain_id == id) throw SchemaError(line_no, "domain_id", "duplicate domain");
    }
    instants.back().push_back(std::move(r));
  }
  if (instants.empty()) throw SchemaError(line_no, "*", "trace has no readings");

  const auto domain_set = [](const std::vector<EnergyCounterReading>& instant) {
    std::set<std::string> ids;
    for (const auto& r : instant) ids.insert(r.domain_id);
    return ids;
  };
  const auto first = domain_set(instants.front());
  for (const auto& instant : instants) {
    if (domain_set(instant) != first) {
      throw SchemaError(0, "domain_id",
                        "instant at t=" + text::shortest(instant.front().timestamp.count()) +
                            " does not list the same domains as the first instant");
    }
  }
  return TraceMeter(std::move(instants));
}

TraceMeter TraceMeter::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ReadFailure(path.string(), "cannot open trace");
  std::ostringstream out;
  out << in.rdbuf();
  return parse(out.str());
}

std::vector<std::string> TraceMeter::domains() const {
  std::vector<std::string> ids;
  for (const auto& r : instants_.front()) ids.push_back(r.domain_id);
  return ids;
}

std::optional<std::vector<EnergyCounterReading>> TraceMeter::poll() {
  if (now_.count() > instants_.back().front().timestamp.count() + kTimeEpsilon) {
    return std::nullopt;
  }
  // Latest instant at or before the virtual clock.
  auto it = std::upper_bound(instants_.begin(), instants_.end(), now_.count() + kTimeEpsilon,
                             [](double t, const auto& instant) {
                               return t < instant.front().timestamp.count();
                             });
  return *std::prev(it);
}

void TraceMeter::wait(Seconds interval) {
  now_ += interval;
}

Seconds TraceMeter::elapsed() const {
  return now_ - origin_;
}

std::string format_trace(const std::vector<EnergyCounterReading>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += text::shortest(r.timestamp.count());
    out += ',';
    out += r.domain_id;
    out += ',';
    out += std::to_string(r.energy_uj);
    out += ',';
    out += std::to_string(r.max_range_uj);
    out += '\n';
  }
  return out;
}

}  // namespace gridprint
