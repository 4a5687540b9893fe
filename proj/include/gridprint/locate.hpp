// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "gridprint/grid_data.hpp"

namespace gridprint {

inline constexpr const char* kRegionEnvVar = "ENERGYUSAGE_REGION";
inline constexpr const char* kDefaultGeoEndpoint = "https://get.geojs.io";
inline constexpr const char* kGeoPath = "/v1/ip/geo.json";

enum class ResolutionMethod { ExplicitFlag, EnvVar, GeoIP, DefaultFallback };
enum class DefaultChoice { World, Us, Europe };

std::string_view to_string(ResolutionMethod method);
ResolutionMethod parse_resolution_method(std::string_view s);
std::string_view to_string(DefaultChoice choice);
/// "world", "us" or "europe"; throws std::invalid_argument otherwise.
DefaultChoice parse_default_choice(std::string_view s);
/// Aggregate id for a default: world-average, us-average or europe-average.
std::string_view default_region_id(DefaultChoice choice);

struct LocationResolution {
  RegionRecord region;
  ResolutionMethod method = ResolutionMethod::DefaultFallback;
  std::string detail;

  bool operator==(const LocationResolution&) const = default;
};

/// Body of a geolocation response, or the reason there is none.
struct GeoFetch {
  std::optional<std::string> body;
  std::string error;
};

using GeoFetcher = std::function<GeoFetch(const std::string& endpoint, double timeout_s)>;

/// GET <endpoint>/v1/ip/geo.json over HTTP(S). Never throws.
GeoFetch http_geo_fetch(const std::string& endpoint, double timeout_s);

struct LocateOptions {
  std::optional<std::string> override_key;
  /// Value of ENERGYUSAGE_REGION, if set; passed in so resolution stays pure.
  std::optional<std::string> env_value;
  DefaultChoice default_choice = DefaultChoice::World;
  bool offline = false;
  double timeout_s = 3.0;
  std::string endpoint = kDefaultGeoEndpoint;
};

/// Reads ENERGYUSAGE_REGION; empty counts as unset.
std::optional<std::string> region_from_environment();

/// Maps a geolocation JSON body to a region: US responses to the state named
/// in `region` (us-average when missing or unknown), others to the country
/// with the ISO code. nullopt when the body is malformed or unmappable;
/// `detail` says why.
std::optional<RegionRecord> map_geo_response(std::string_view body, const DatasetSnapshot& snapshot,
                                             std::string& detail);

/// Explicit key, then the environment value, then (unless offline) geolocation,
/// then the chosen default aggregate. Only an unknown explicit or environment
/// key throws (UnknownRegion); network and parse problems fall through to the
/// default.
LocationResolution resolve_location(const LocateOptions& options, const DatasetSnapshot& snapshot,
                                    const GeoFetcher& fetch = http_geo_fetch);

}  // namespace gridprint
