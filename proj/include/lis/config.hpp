// SPDX-License-Identifier: Apache-2.0
//
// lis-precoding: precoding and power allocation for large intelligent surfaces
// Copyright (C) 2026 The lis-precoding authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lis/asymptotics.hpp"

namespace lis
{
    enum class Experiment
    {
        BeamPattern, // interference gain versus interferer azimuth
        SeLossMap,   // relative SE loss of MR and ZF over the interferer's (azimuth, elevation)
        WidthSweep,  // MR / ZF / interference-free SE versus surface width
        UserDrops    // random K-user drops with ZF and utility-optimal power
    };

    std::string_view experiment_name(Experiment e); // lower_snake_case, e.g. "se_loss_map"
    Experiment experiment_from_name(std::string_view name);

    // Explicit user position, degrees as written in the configuration file
    struct UserAngles
    {
        double azimuth_deg = 0.0;
        double elevation_deg = 0.0;

        bool operator==(const UserAngles &) const = default;
        Direction to_direction() const { return Direction::from_degrees(azimuth_deg, elevation_deg); }
    };

    struct ScenarioConfig
    {
        Experiment experiment = Experiment::BeamPattern;
        double aperture_width = 10.0;  // L / lambda
        double aperture_height = 10.0; // H / lambda
        std::vector<double> spacings;  // d / lambda; 0 selects the dense limit
        double reference_snr_db = 20.0;
        std::size_t user_count = 2;         // K when no explicit users are given
        std::vector<UserAngles> users;      // explicit users; overrides user_count when nonempty
        std::string utility = "proportional_fairness";
        std::size_t drops = 1;
        std::uint64_t seed = 1;
        std::size_t angle_grid = 2001;      // angle points per axis, or width points for the width sweep
        std::array<double, 2> width_range{1.0, 1.0e4};
        bool effective_area = true;         // scale user costs by cos(phi) cos(theta)

        bool operator==(const ScenarioConfig &) const = default;

        Aperture aperture() const { return Aperture(aperture_width, aperture_height); }
        std::size_t users_served() const { return users.empty() ? user_count : users.size(); }

        // Throws ConfigError on any invalid combination
        void validate() const;

        // Settings taken from the figure captions of each experiment
        static ScenarioConfig defaults(Experiment e);
    };

    // Keys are the lower_snake_case field names above; unknown keys are rejected with ConfigError.
    // "users" is either a count or a list of {"azimuth_deg", "elevation_deg"} objects.
    // Missing keys keep the experiment defaults.
    ScenarioConfig config_from_json(const nlohmann::json &doc, Experiment experiment);
    ScenarioConfig load_config(const std::filesystem::path &path, Experiment experiment);

    nlohmann::ordered_json config_to_json(const ScenarioConfig &cfg);
}
