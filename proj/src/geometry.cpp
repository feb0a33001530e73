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

#include "lis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lis/detail/trig.hpp"
#include "lis/errors.hpp"

namespace lis
{
    namespace
    {
        constexpr double half_pi = 0.5 * std::numbers::pi;

        // Below this distance to the nearest integer the ratio sin(pi N A)/sin(pi A) is replaced by its expansion
        constexpr double integer_branch_width = 1e-9;
    }

    ArrayGeometry::ArrayGeometry(std::size_t rows, std::size_t cols, double spacing, double wavelength)
        : rows_(rows), cols_(cols), spacing_(spacing), wavelength_(wavelength)
    {
        if (rows == 0 || cols == 0)
            throw InvalidGeometry("array must have at least one row and one column");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw InvalidGeometry("element spacing must be positive, got " + std::to_string(spacing));
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw InvalidGeometry("wavelength must be positive, got " + std::to_string(wavelength));
    }

    Direction::Direction(double azimuth_rad, double elevation_rad)
        : azimuth(azimuth_rad), elevation(elevation_rad)
    {
        if (!(std::abs(azimuth_rad) <= half_pi) || !(std::abs(elevation_rad) <= half_pi))
            throw InvalidGeometry("direction angles must lie in [-pi/2, pi/2]");
    }

    Direction Direction::from_degrees(double azimuth_deg, double elevation_deg)
    {
        // Clamp the +-90 degree endpoints, whose radian value may round just past pi/2
        auto to_rad = [](double deg)
        {
            if (deg == 90.0)
                return half_pi;
            if (deg == -90.0)
                return -half_pi;
            return deg * std::numbers::pi / 180.0;
        };
        return Direction(to_rad(azimuth_deg), to_rad(elevation_deg));
    }

    SteeringVector steering_vector(const ArrayGeometry &geom, const Direction &dir)
    {
        const std::size_t n_rows = geom.rows(), n_cols = geom.cols();
        const double horizontal = geom.spacing() * std::cos(dir.elevation) * std::sin(dir.azimuth);
        const double vertical = geom.spacing() * std::sin(dir.elevation);

        SteeringVector a(static_cast<Eigen::Index>(n_rows * n_cols));
        Eigen::Index i = 0;
        for (std::size_t n = 0; n < n_rows; ++n)
            for (std::size_t m = 0; m < n_cols; ++m)
            {
                // phase / (2 pi), evaluated through sin_pi/cos_pi so large arrays keep full accuracy
                const double cycles = static_cast<double>(m) * horizontal + static_cast<double>(n) * vertical;
                a[i++] = cdouble(detail::cos_pi(2.0 * cycles), detail::sin_pi(2.0 * cycles));
            }
        return a;
    }

    cdouble dirichlet_sum(std::size_t count, double arg)
    {
        const double n = static_cast<double>(count);
        const double delta = arg - std::nearbyint(arg); // period 1 in arg

        // Common phase exp(i pi (N-1) delta)
        const double half_turns = (n - 1.0) * delta;
        const cdouble phase(detail::cos_pi(half_turns), detail::sin_pi(half_turns));

        if (std::abs(delta) < integer_branch_width)
        {
            const double x = std::numbers::pi * delta;
            return phase * (n * (1.0 - x * x * (n * n - 1.0) / 6.0));
        }
        return phase * (detail::sin_pi(n * delta) / detail::sin_pi(delta));
    }

    double fraunhofer_distance(const ArrayGeometry &geom)
    {
        const double longest = static_cast<double>(std::max(geom.rows(), geom.cols()));
        return 2.0 * geom.spacing() * geom.spacing() * longest * longest * geom.wavelength();
    }

    bool validate_far_field(const ArrayGeometry &geom, double distance)
    {
        if (!(distance > 0.0))
            throw InvalidGeometry("distance must be positive");
        return distance > fraunhofer_distance(geom);
    }
}
