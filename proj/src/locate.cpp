// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "gridprint/locate.hpp"

#include <chrono>
#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

#include "gridprint/error.hpp"
#include "text.hpp"

namespace gridprint {

std::string_view to_string(ResolutionMethod method) {
  switch (method) {
    case ResolutionMethod::ExplicitFlag: return "explicit-flag";
    case ResolutionMethod::EnvVar: return "env-var";
    case ResolutionMethod::GeoIP: return "geoip";
    case ResolutionMethod::DefaultFallback: return "default-fallback";
  }
  return "?";
}

ResolutionMethod parse_resolution_method(std::string_view s) {
  for (auto m : {ResolutionMethod::ExplicitFlag, ResolutionMethod::EnvVar, ResolutionMethod::GeoIP,
                 ResolutionMethod::DefaultFallback}) {
    if (to_string(m) == s) return m;
  }
  throw std::invalid_argument("unknown resolution method '" + std::string(s) + "'");
}

std::string_view to_string(DefaultChoice choice) {
  switch (choice) {
    case DefaultChoice::World: return "world";
    case DefaultChoice::Us: return "us";
    case DefaultChoice::Europe: return "europe";
  }
  return "?";
}

DefaultChoice parse_default_choice(std::string_view s) {
  const auto key = text::lower(text::trim(s));
  for (auto c : {DefaultChoice::World, DefaultChoice::Us, DefaultChoice::Europe}) {
    if (to_string(c) == key) return c;
  }
  throw std::invalid_argument("unknown default region '" + std::string(s) +
                              "' (expected world, us or europe)");
}

std::string_view default_region_id(DefaultChoice choice) {
  switch (choice) {
    case DefaultChoice::World: return "world-average";
    case DefaultChoice::Us: return "us-average";
    case DefaultChoice::Europe: return "europe-average";
  }
  return "world-average";
}

GeoFetch http_geo_fetch(const std::string& endpoint, double timeout_s) {
  try {
    // Split "scheme://host[:port][/prefix]" so a path prefix survives.
    std::string base = endpoint;
    std::string prefix;
    const auto scheme_end = base.find("://");
    const auto path_start = base.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    if (path_start != std::string::npos) {
      prefix = base.substr(path_start);
      base.resize(path_start);
    }
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

    httplib::Client client(base);
    if (!client.is_valid()) return {std::nullopt, "invalid geolocation endpoint '" + endpoint + "'"};
    const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::duration<double>(timeout_s));
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    client.set_follow_location(true);

    const auto res = client.Get(prefix + kGeoPath);
    if (!res) return {std::nullopt, "geolocation request failed: " + httplib::to_string(res.error())};
    if (res->status != 200) {
      return {std::nullopt, "geolocation endpoint returned HTTP " + std::to_string(res->status)};
    }
    return {res->body, ""};
  } catch (const std::exception& e) {
    return {std::nullopt, std::string("geolocation request failed: ") + e.what()};
  }
}

std::optional<std::string> region_from_environment() {
  const char* v = std::getenv(kRegionEnvVar);
  if (v == nullptr || text::trim(v).empty()) return std::nullopt;
  return std::string(text::trim(v));
}

std::optional<RegionRecord> map_geo_response(std::string_view body, const DatasetSnapshot& snapshot,
                                             std::string& detail) {
  const auto json = nlohmann::json::parse(body, nullptr, false);
  if (json.is_discarded() || !json.is_object()) {
    detail = "geolocation response is not a JSON object";
    return std::nullopt;
  }
  const auto field = [&](const char* key) -> std::string {
    const auto it = json.find(key);
    return it != json.end() && it->is_string() ? it->get<std::string>() : std::string();
  };
  const std::string code = text::lower(text::trim(field("country_code")));
  const std::string region = std::string(text::trim(field("region")));
  if (code.empty()) {
    detail = "geolocation response has no country_code";
    return std::nullopt;
  }

  if (code == "us") {
    const std::string wanted = text::lower(region);
    for (const auto& r : snapshot.regions()) {
      if (r.kind == RegionKind::UsState && !wanted.empty() &&
          text::lower(r.display_name) == wanted) {
        detail = "geolocated to " + region + ", US";
        return r;
      }
    }
    const auto* avg = snapshot.find("us-average");
    if (avg == nullptr) {
      detail = "geolocated to the US but the snapshot has no us-average";
      return std::nullopt;
    }
    detail = region.empty() ? "geolocated to the US without a state; using the US average"
                            : "geolocated to the US with unknown state '" + region +
                                  "'; using the US average";
    return *avg;
  }

  const auto* country = snapshot.find(code);
  if (country == nullptr || country->kind != RegionKind::Country) {
    detail = "no energy mix for country code '" + field("country_code") + "'";
    return std::nullopt;
  }
  detail = "geolocated to " + country->display_name;
  return *country;
}

LocationResolution resolve_location(const LocateOptions& options, const DatasetSnapshot& snapshot,
                                    const GeoFetcher& fetch) {
  if (options.override_key) {
    return {snapshot.lookup(*options.override_key), ResolutionMethod::ExplicitFlag,
            "--location " + *options.override_key};
  }
  if (options.env_value) {
    return {snapshot.lookup(*options.env_value), ResolutionMethod::EnvVar,
            std::string(kRegionEnvVar) + "=" + *options.env_value};
  }

  std::string why;
  if (options.offline) {
    why = "offline";
  } else if (!fetch) {
    why = "no geolocation client";
  } else {
    const GeoFetch got = fetch(options.endpoint, options.timeout_s);
    if (got.body) {
      if (auto region = map_geo_response(*got.body, snapshot, why)) {
        return {std::move(*region), ResolutionMethod::GeoIP, why};
      }
    } else {
      why = got.error;
    }
  }

  const auto id = default_region_id(options.default_choice);
  const auto* fallback = snapshot.find(id);
  if (fallback == nullptr) {
    throw UnknownRegion(std::string(id), {}, "snapshot has no '" + std::string(id) + "' aggregate");
  }
  return {*fallback, ResolutionMethod::DefaultFallback,
          why + "; location defaulted to " + fallback->display_name};
}

}  // namespace gridprint
