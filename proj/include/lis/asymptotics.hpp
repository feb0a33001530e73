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

#include "lis/geometry.hpp"
#include "lis/precoding.hpp"

namespace lis
{
    // Surface width L and height H, in wavelengths
    struct Aperture
    {
        double width = 1.0;
        double height = 1.0;

        Aperture() = default;
        Aperture(double width_wl, double height_wl); // throws InvalidGeometry unless both are positive
    };

    // Physical link of one user. Angles must be strictly inside (-pi/2, pi/2).
    struct UserLink
    {
        Direction direction;
        double distance = 1.0;    // r, meters
        double tx_power = 1.0;    // q, watts
        double noise_power = 1.0; // sigma^2, watts
    };

    // Nulls, sidelobe peaks and beamwidth of the theta = 0 cut of the dense-limit interference gain.
    // The pattern is symmetric in azimuth; every angle listed here also occurs with negative sign.
    struct BeamPatternReport
    {
        std::vector<double> null_angles;        // arcsin(n lambda / L), n = 1..n_max
        std::vector<double> null_angles_approx; // n lambda / L
        std::vector<double> sidelobe_angles;    // arcsin((2n+1) lambda / (2L)), where |sin(pi L Psi / lambda)| = 1
        std::vector<double> sidelobe_angles_approx; // (2n+1) lambda / (2L)
        std::vector<double> sidelobe_levels;    // (2 / ((2n+1) pi))^2
        double beamwidth = 0.0;                 // 2 arcsin(lambda / L)
        double beamwidth_approx = 0.0;          // 2 lambda / L
        bool small_angle_valid = true;          // every approximation above is within 1% of its exact value
    };

    // p = (q / sigma^2) cos(phi) cos(theta) / (4 pi r^2), per square meter.
    // Throws InvalidGeometry when the effective area vanishes (|phi| or |theta| >= pi/2).
    double link_density(const UserLink &link);

    // c = 4 pi r^2 sigma^2 / (d^2 cos(theta) cos(phi)) with d in meters; rho * c = q for rho = p d^2
    double link_cost(const UserLink &link, const ArrayGeometry &geom);

    // Interference-free SNR p L H, for p given per square wavelength
    double dense_snr(double p, const Aperture &ap);

    // Dense-array limit of I12^2: sinc^2(H Omega / lambda) sinc^2(L Psi / lambda)
    double limiting_interference(const Aperture &ap, const AngleOffsets &off);

    double limiting_sinr_mr(double p1, double p2, const Aperture &ap, const AngleOffsets &off);
    double limiting_sinr_zf(double p1, const Aperture &ap, const AngleOffsets &off);

    // ZF gains b_k in the dense limit, from the normalized correlation matrix
    // R_ij = sinc(H Omega_ij) sinc(L Psi_ij) exp(i pi (H Omega_ij + L Psi_ij)) as b_k = 1 / [R^-1]_kk.
    // Throws DegenerateAngles if R has an eigenvalue below 1e-10.
    ZfGains dense_zf_gains(const Aperture &ap, std::span<const Direction> dirs);

    // Throws ApertureTooSmall unless L / lambda > n_max + 1/2 (the last sidelobe must be visible)
    BeamPatternReport beam_pattern(double width, std::size_t n_max);

    // Small-angle rule for replacing the discrete pattern by its dense limit:
    // true iff pi d |angle| / lambda <= pi^2 / 8
    bool undersampling_error_bound(double d_over_lambda, double angle);

    // log2(1 + SINR_ZF) - log2(1 + SINR_MR) in the dense limit at surface width L (wavelengths).
    // Nonnegative whenever p1 = p2 and p1 L H (1 - I^2) >= 1. Requires Psi != 0.
    double se_gap_mr_zf(double p1, double p2, double height, const AngleOffsets &off, double width);

    // Upper bound on se_gap_mr_zf for p1 = p2 = p, obtained from sinc^2(x) <= 1 / (pi x)^2:
    // log2(1 + p L H) - log2(1 + S / (S Ibar + 1)), S = p L H, Ibar = 1 / (pi L Psi)^2
    double se_gap_upper_bound(double p, double height, double psi, double width);

    // Widths L at which the MR sidelobe of an interferer with offset Psi peaks: L Psi = j + 1/2
    std::vector<double> sidelobe_aligned_widths(double psi, double min_width, double max_width);
}
