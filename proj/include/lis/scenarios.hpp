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

#include <cstddef>
#include <span>
#include <vector>

#include "lis/config.hpp"
#include "lis/table.hpp"

namespace lis
{
    struct RunOptions
    {
        unsigned threads = 1; // worker threads; never changes the output
    };

    // Uniform azimuth grid of `points` values over [-pi/2, pi/2], exactly antisymmetric about zero
    std::vector<double> symmetric_angle_grid(std::size_t points);

    // Logarithmic grid of `points` values from lo to hi inclusive
    std::vector<double> log_grid(double lo, double hi, std::size_t points);

    // Reference SNR per square wavelength: the interference-free SNR of a broadside user given the
    // whole budget is reference * L * H / lambda^2
    double reference_density(const ScenarioConfig &cfg);

    // Columns: spacing, azimuth, null_order, gain, gain_db. Desired user at broadside, interferer on
    // the theta = 0 cut. The uniform grid is extended by the dense-limit nulls +-arcsin(n lambda / L),
    // flagged with their signed order n in null_order. Spacing 0 is the dense limit.
    ResultTable run_beampattern(const ScenarioConfig &cfg, const RunOptions &opts = {});

    // Columns: azimuth, elevation, interference, se_loss_mr, se_loss_zf over the interferer's angle grid
    ResultTable run_se_loss_map(const ScenarioConfig &cfg, const RunOptions &opts = {});

    // Columns: width, se_mr, se_zf, se_free, on a logarithmic width grid
    ResultTable run_width_sweep(const ScenarioConfig &cfg, const RunOptions &opts = {});

    // Columns: drop_index, user_index, azimuth, zf_gain, power, physical_power, sinr, se.
    // Throws DegenerateDropLimit if more than 1% of the drops had to be redrawn.
    ResultTable run_user_drops(const ScenarioConfig &cfg, const RunOptions &opts = {});

    ResultTable run_scenario(const ScenarioConfig &cfg, const RunOptions &opts = {});

    // Azimuths of drop `drop_index`, as drawn by run_user_drops before any redraw
    std::vector<double> drop_azimuths(std::uint64_t seed, std::uint64_t drop_index, std::size_t users);
}
