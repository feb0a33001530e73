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

#include "lis/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "lis/detail/trig.hpp"
#include "lis/errors.hpp"

namespace lis
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void check_effective_area(const Direction &dir)
        {
            if (!(std::abs(dir.azimuth) < 0.5 * pi) || !(std::abs(dir.elevation) < 0.5 * pi))
                throw InvalidGeometry("user at |angle| = pi/2 sees zero effective antenna area");
        }

        void check_link(const UserLink &link)
        {
            check_effective_area(link.direction);
            if (!(link.distance > 0.0))
                throw InvalidGeometry("link distance must be positive");
            if (!(link.tx_power >= 0.0))
                throw InvalidGeometry("transmit power must be nonnegative");
            if (!(link.noise_power > 0.0))
                throw InvalidGeometry("noise power must be positive");
        }

        bool within_percent(double approx, double exact)
        {
            return std::abs(approx - exact) <= 0.01 * std::abs(exact);
        }
    }

    Aperture::Aperture(double width_wl, double height_wl) : width(width_wl), height(height_wl)
    {
        if (!(width_wl > 0.0) || !(height_wl > 0.0))
            throw InvalidGeometry("aperture width and height must be positive");
    }

    double link_density(const UserLink &link)
    {
        check_link(link);
        const double area = std::cos(link.direction.azimuth) * std::cos(link.direction.elevation);
        return link.tx_power / link.noise_power * area / (4.0 * pi * link.distance * link.distance);
    }

    double link_cost(const UserLink &link, const ArrayGeometry &geom)
    {
        check_link(link);
        const double d = geom.spacing() * geom.wavelength();
        return 4.0 * pi * link.distance * link.distance * link.noise_power /
               (d * d * std::cos(link.direction.elevation) * std::cos(link.direction.azimuth));
    }

    double dense_snr(double p, const Aperture &ap)
    {
        return p * ap.width * ap.height;
    }

    double limiting_interference(const Aperture &ap, const AngleOffsets &off)
    {
        const double v = detail::sinc(ap.height * off.omega);
        const double h = detail::sinc(ap.width * off.psi);
        return v * v * h * h;
    }

    double limiting_sinr_mr(double p1, double p2, const Aperture &ap, const AngleOffsets &off)
    {
        const double area = ap.width * ap.height;
        return p1 * area / (p2 * area * limiting_interference(ap, off) + 1.0);
    }

    double limiting_sinr_zf(double p1, const Aperture &ap, const AngleOffsets &off)
    {
        return p1 * ap.width * ap.height * (1.0 - limiting_interference(ap, off));
    }

    ZfGains dense_zf_gains(const Aperture &ap, std::span<const Direction> dirs)
    {
        if (dirs.empty())
            throw std::invalid_argument("at least one user direction is required");
        const auto users = static_cast<Eigen::Index>(dirs.size());
        Eigen::MatrixXcd corr(users, users);
        for (Eigen::Index i = 0; i < users; ++i)
            for (Eigen::Index j = 0; j < users; ++j)
            {
                const AngleOffsets off = angle_offsets(dirs[static_cast<std::size_t>(i)], dirs[static_cast<std::size_t>(j)]);
                const double x = ap.height * off.omega, y = ap.width * off.psi;
                const double turns = x + y; // phase / pi
                corr(i, j) = detail::sinc(x) * detail::sinc(y) * cdouble(detail::cos_pi(turns), detail::sin_pi(turns));
            }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(corr, Eigen::EigenvaluesOnly);
        if (eig.eigenvalues().minCoeff() < 1e-10)
            throw DegenerateAngles("dense-limit correlation matrix is singular");

        const Eigen::MatrixXcd inverse = corr.ldlt().solve(Eigen::MatrixXcd::Identity(users, users));
        ZfGains gains;
        for (Eigen::Index k = 0; k < users; ++k)
            gains.values.push_back(1.0 / inverse(k, k).real());
        return gains;
    }

    BeamPatternReport beam_pattern(double width, std::size_t n_max)
    {
        if (n_max == 0)
            throw std::invalid_argument("at least one lobe must be requested");
        if (!(width > static_cast<double>(n_max) + 0.5))
            throw ApertureTooSmall("surface of width " + std::to_string(width) + " lambda cannot host " +
                                   std::to_string(n_max) + " sidelobes");

        BeamPatternReport report;
        for (std::size_t n = 1; n <= n_max; ++n)
        {
            const double nd = static_cast<double>(n);
            const double null_sin = nd / width;
            const double peak_sin = (2.0 * nd + 1.0) / (2.0 * width);

            report.null_angles.push_back(std::asin(null_sin));
            report.null_angles_approx.push_back(null_sin);
            report.sidelobe_angles.push_back(std::asin(peak_sin));
            report.sidelobe_angles_approx.push_back(peak_sin);

            const double level = 2.0 / ((2.0 * nd + 1.0) * pi);
            report.sidelobe_levels.push_back(level * level);

            report.small_angle_valid = report.small_angle_valid &&
                                       within_percent(null_sin, report.null_angles.back()) &&
                                       within_percent(peak_sin, report.sidelobe_angles.back());
        }
        report.beamwidth = 2.0 * std::asin(1.0 / width);
        report.beamwidth_approx = 2.0 / width;
        report.small_angle_valid = report.small_angle_valid && within_percent(report.beamwidth_approx, report.beamwidth);
        return report;
    }

    bool undersampling_error_bound(double d_over_lambda, double angle)
    {
        // pi d |angle| <= pi^2 / 8, divided through by pi
        return d_over_lambda * std::abs(angle) <= pi / 8.0;
    }

    double se_gap_mr_zf(double p1, double p2, double height, const AngleOffsets &off, double width)
    {
        if (off.psi == 0.0)
            throw std::invalid_argument("horizontal offset Psi must be nonzero");
        const Aperture ap(width, height);
        return std::log2(1.0 + limiting_sinr_zf(p1, ap, off)) - std::log2(1.0 + limiting_sinr_mr(p1, p2, ap, off));
    }

    double se_gap_upper_bound(double p, double height, double psi, double width)
    {
        if (psi == 0.0)
            throw std::invalid_argument("horizontal offset Psi must be nonzero");
        const double snr = p * width * height;
        const double x = pi * width * psi;
        const double bound = 1.0 / (x * x);
        return std::log2(1.0 + snr) - std::log2(1.0 + snr / (snr * bound + 1.0));
    }

    std::vector<double> sidelobe_aligned_widths(double psi, double min_width, double max_width)
    {
        if (psi == 0.0)
            throw std::invalid_argument("horizontal offset Psi must be nonzero");
        const double step = 1.0 / std::abs(psi);
        std::vector<double> widths;
        for (double j = std::max(1.0, std::ceil(min_width * std::abs(psi) - 0.5));; j += 1.0)
        {
            const double w = (j + 0.5) * step;
            if (w > max_width)
                break;
            if (w >= min_width)
                widths.push_back(w);
        }
        return widths;
    }
}
