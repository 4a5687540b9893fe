// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/gpu.hpp"

#include <array>
#include <cstdio>
#include <memory>

#include "text.hpp"

namespace gridprint {

std::optional<double> parse_gpu_watts(std::string_view output) {
  double total = 0.0;
  bool any = false;
  for (std::string_view line : text::split(output, '\n')) {
    line = text::trim(line);
    if (line.empty()) continue;
    const auto watts = text::to_double(line);
    if (!watts || *watts < 0.0) return std::nullopt;
    total += *watts;
    any = true;
  }
  if (!any) return std::nullopt;
  return total;
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

std::optional<PowerSample> read_gpu_power(const std::string& program, double interval_s) {
  const std::string command = shell_quote(program) +
                              " --query-gpu=power.draw --format=csv,noheader,nounits"
                              " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return std::nullopt;
  std::string output;
  std::array<char, 256> buffer{};
  while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe) != nullptr) {
    output += buffer.data();
  }
  if (::pclose(pipe) != 0) return std::nullopt;
  const auto watts = parse_gpu_watts(output);
  if (!watts) return std::nullopt;
  return PowerSample{*watts, interval_s, PowerSource::Gpu};
}

}  // namespace gridprint
