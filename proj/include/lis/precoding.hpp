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

namespace lis
{
    // Omega = sin(theta2) - sin(theta1), Psi = cos(theta2) sin(phi2) - cos(theta1) sin(phi1)
    struct AngleOffsets
    {
        double omega = 0.0;
        double psi = 0.0;
    };

    enum class PrecoderKind
    {
        MR,
        ZF
    };

    // Unit-norm precoding vector
    struct Precoder
    {
        Eigen::VectorXcd vector;
        PrecoderKind kind = PrecoderKind::MR;
    };

    // Per-user ZF projection gains b_k in [0, 1]
    struct ZfGains
    {
        std::vector<double> values;
    };

    AngleOffsets angle_offsets(const Direction &dir1, const Direction &dir2);

    // I12 = |a1^H a2| / NM through the factorized Dirichlet form, O(N + M)
    double interference_gain(const ArrayGeometry &geom, const Direction &dir1, const Direction &dir2);

    // Same quantity from the explicit NM-term inner product; O(NM), kept as a reference path
    double interference_gain_direct(const ArrayGeometry &geom, const Direction &dir1, const Direction &dir2);

    Precoder mr_precoder(const ArrayGeometry &geom, const Direction &dir);

    // Normalized projection of a(dirs[k]) onto the orthogonal complement of the other users' steering vectors.
    // Throws TooManyUsers if K > NM and DegenerateAngles if the K x K Gram matrix has an eigenvalue below 1e-10 NM.
    Precoder zf_precoder(const ArrayGeometry &geom, std::span<const Direction> dirs, std::size_t k);

    // All K ZF precoders at once
    std::vector<Precoder> zf_precoders(const ArrayGeometry &geom, std::span<const Direction> dirs);

    // b_k = 1 - a_k^H A_k (A_k^H A_k)^-1 A_k^H a_k / NM for every user; same errors as zf_precoder
    ZfGains zf_gains(const ArrayGeometry &geom, std::span<const Direction> dirs);

    // SINR of user k with noise power normalized to one:
    // rho_k |a_k^H v_k|^2 / (sum_{i != k} rho_i |a_k^H v_i|^2 + 1)
    double sinr_general(const ArrayGeometry &geom, std::span<const Direction> dirs,
                        std::span<const Precoder> precoders, std::span<const double> powers, std::size_t k);

    // Two-user closed forms
    double mr_sinr_two_user(double snr1, double snr2, double i12);
    double zf_sinr_two_user(double snr1, double i12);
}
