// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdlib>
#include <thread>

#include <httplib.h>

#include "gridprint/error.hpp"
#include "gridprint/locate.hpp"

using namespace gridprint;

namespace {

const DatasetSnapshot& snap() {
  return DatasetSnapshot::builtin();
}

GeoFetcher canned(std::string body) {
  return [body](const std::string&, double) { return GeoFetch{body, ""}; };
}

GeoFetcher failing(std::string error) {
  return [error](const std::string&, double) { return GeoFetch{std::nullopt, error}; };
}

GeoFetcher must_not_fetch() {
  return [](const std::string&, double) -> GeoFetch {
    FAIL("geolocation must not be called");
    return {};
  };
}

// Serves one fixed geolocation body on 127.0.0.1.
class StubServer {
 public:
  explicit StubServer(std::string body, int delay_ms = 0) {
    server_.Get("/v1/ip/geo.json", [body, delay_ms](const httplib::Request&,
                                                    httplib::Response& res) {
      if (delay_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
      res.set_content(body, "application/json");
    });
    server_.Get("/prefix/v1/ip/geo.json", [body](const httplib::Request&, httplib::Response& res) {
      res.set_content(body, "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST_CASE("explicit override wins and skips geolocation") {
  LocateOptions o;
  o.override_key = "iceland";
  o.env_value = "wyoming";
  const auto r = resolve_location(o, snap(), must_not_fetch());
  CHECK(r.region.id == "is");
  CHECK(r.method == ResolutionMethod::ExplicitFlag);
}

TEST_CASE("environment value is used when no flag is given") {
  LocateOptions o;
  o.env_value = "Wyoming";
  const auto r = resolve_location(o, snap(), must_not_fetch());
  CHECK(r.region.id == "us-wy");
  CHECK(r.method == ResolutionMethod::EnvVar);
}

TEST_CASE("a typo in the override or environment is an error, not a fallback") {
  LocateOptions o;
  o.override_key = "atlantis";
  CHECK_THROWS_AS(resolve_location(o, snap(), must_not_fetch()), UnknownRegion);
  LocateOptions e;
  e.env_value = "atlantis";
  CHECK_THROWS_AS(resolve_location(e, snap(), must_not_fetch()), UnknownRegion);
}

TEST_CASE("offline falls back to the chosen default aggregate") {
  LocateOptions o;
  o.offline = true;
  for (auto [choice, id] : {std::pair{DefaultChoice::World, "world-average"},
                            std::pair{DefaultChoice::Us, "us-average"},
                            std::pair{DefaultChoice::Europe, "europe-average"}}) {
    o.default_choice = choice;
    const auto r = resolve_location(o, snap(), must_not_fetch());
    CHECK(r.region.id == id);
    CHECK(r.method == ResolutionMethod::DefaultFallback);
    CHECK(r.region.kind == RegionKind::Aggregate);
  }
}

TEST_CASE("geolocation maps US responses to the state") {
  LocateOptions o;
  const auto r = resolve_location(
      o, snap(), canned(R"({"country_code":"US","region":"Wyoming","country":"United States"})"));
  CHECK(r.region.id == "us-wy");
  CHECK(r.method == ResolutionMethod::GeoIP);

  // Georgia the state, not Georgia the country.
  const auto ga = resolve_location(o, snap(), canned(R"({"country_code":"US","region":"Georgia"})"));
  CHECK(ga.region.id == "us-ga");
}

TEST_CASE("US without a known state maps to the US average") {
  LocateOptions o;
  const auto none = resolve_location(o, snap(), canned(R"({"country_code":"US"})"));
  CHECK(none.region.id == "us-average");
  CHECK(none.method == ResolutionMethod::GeoIP);
  const auto guam = resolve_location(o, snap(), canned(R"({"country_code":"US","region":"Guam"})"));
  CHECK(guam.region.id == "us-average");
}

TEST_CASE("non-US responses map to the country by ISO code") {
  LocateOptions o;
  const auto r = resolve_location(o, snap(), canned(R"({"country_code":"IS","region":"Reykjavik"})"));
  CHECK(r.region.id == "is");
  CHECK(r.method == ResolutionMethod::GeoIP);
}

TEST_CASE("malformed, unmappable or failed geolocation degrades to the default") {
  LocateOptions o;
  o.default_choice = DefaultChoice::Europe;
  for (const auto& fetch : {canned("not json"), canned("[1,2]"), canned(R"({"region":"x"})"),
                            canned(R"({"country_code":"QQ"})"), canned(R"({"country_code":7})"),
                            failing("timed out")}) {
    const auto r = resolve_location(o, snap(), fetch);
    CHECK(r.region.id == "europe-average");
    CHECK(r.method == ResolutionMethod::DefaultFallback);
    CHECK_FALSE(r.detail.empty());
  }
}

TEST_CASE("default choice parsing") {
  CHECK(parse_default_choice("World") == DefaultChoice::World);
  CHECK(parse_default_choice("us") == DefaultChoice::Us);
  CHECK(parse_default_choice("europe") == DefaultChoice::Europe);
  CHECK_THROWS_AS(parse_default_choice("mars"), std::invalid_argument);
}

TEST_CASE("environment variable reading") {
  ::setenv(kRegionEnvVar, "  iceland ", 1);
  CHECK(region_from_environment() == std::optional<std::string>("iceland"));
  ::setenv(kRegionEnvVar, "", 1);
  CHECK_FALSE(region_from_environment());
  ::unsetenv(kRegionEnvVar);
  CHECK_FALSE(region_from_environment());
}

TEST_CASE("HTTP fetch against a stub server") {
  StubServer server(R"({"country_code":"US","region":"Wyoming"})");
  const auto got = http_geo_fetch(server.endpoint(), 2.0);
  REQUIRE(got.body);
  LocateOptions o;
  o.endpoint = server.endpoint();
  const auto r = resolve_location(o, snap());
  CHECK(r.region.id == "us-wy");
  CHECK(r.method == ResolutionMethod::GeoIP);

  CHECK(http_geo_fetch(server.endpoint() + "/prefix/", 2.0).body);
}

TEST_CASE("HTTP timeout and refused connections fall back") {
  StubServer slow(R"({"country_code":"IS"})", 1500);
  LocateOptions o;
  o.endpoint = slow.endpoint();
  o.timeout_s = 0.2;
  const auto r = resolve_location(o, snap());
  CHECK(r.method == ResolutionMethod::DefaultFallback);
  CHECK(r.region.id == "world-average");

  const auto refused = http_geo_fetch("http://127.0.0.1:1", 1.0);
  CHECK_FALSE(refused.body);
  CHECK_FALSE(refused.error.empty());
  CHECK_FALSE(http_geo_fetch("gopher://nowhere", 1.0).body);
}
