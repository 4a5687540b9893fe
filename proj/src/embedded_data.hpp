// Copyright 2026 The gridprint Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

// Generated at configure time from data/*.csv.
namespace gridprint::embedded {

extern const std::string_view egrid_2016;
extern const std::string_view eia_2016;
extern const std::string_view aggregates_2016;
extern const std::string_view equivalencies;

}  // namespace gridprint::embedded
