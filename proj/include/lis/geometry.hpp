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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace lis
{
    using cdouble = std::complex<double>;

    // Length-NM complex array response, ordered row by row from the origin element
    using SteeringVector = Eigen::VectorXcd;

    // Uniform planar array with N rows and M columns in the y-z plane.
    // Lengths are kept in wavelengths; the wavelength in meters is only needed for
    // conversions to physical distances (Fraunhofer range, path loss).
    class ArrayGeometry
    {
    public:
        // Throws InvalidGeometry if rows or cols is zero, or spacing / wavelength are not positive
        ArrayGeometry(std::size_t rows, std::size_t cols, double spacing, double wavelength = 1.0);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        std::size_t element_count() const { return rows_ * cols_; }

        double spacing() const { return spacing_; }       // d / lambda
        double wavelength() const { return wavelength_; } // lambda in meters

        double width() const { return static_cast<double>(cols_) * spacing_; }  // L / lambda
        double height() const { return static_cast<double>(rows_) * spacing_; } // H / lambda

    private:
        std::size_t rows_;
        std::size_t cols_;
        double spacing_;
        double wavelength_;
    };

    // Far-field direction in radians, both angles in [-pi/2, pi/2]
    struct Direction
    {
        double azimuth = 0.0;
        double elevation = 0.0;

        Direction() = default;
        Direction(double azimuth_rad, double elevation_rad); // throws InvalidGeometry when out of range

        static Direction from_degrees(double azimuth_deg, double elevation_deg);
    };

    // a(phi, theta) with entry (n, m) = exp(i 2 pi d/lambda ((m-1) cos(theta) sin(phi) + (n-1) sin(theta)))
    SteeringVector steering_vector(const ArrayGeometry &geom, const Direction &dir);

    // Closed-form sum_{n=1..count} exp(i 2 pi (n-1) arg).
    // The argument is reduced modulo 1 before evaluation; within 1e-9 of an integer a
    // second-order expansion around the integer replaces the 0/0 ratio.
    cdouble dirichlet_sum(std::size_t count, double arg);

    // 2 d^2 max(M^2, N^2) / lambda, in meters
    double fraunhofer_distance(const ArrayGeometry &geom);

    // True iff distance (meters, > 0) exceeds the Fraunhofer distance
    bool validate_far_field(const ArrayGeometry &geom, double distance);
}
