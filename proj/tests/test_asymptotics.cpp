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


#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lis/asymptotics.hpp"
#include "lis/errors.hpp"
#include "oracles.hpp"

using namespace lis;
using std::numbers::pi;

TEST_CASE("asymptotics: link budget")
{
    const double r = 1.0 / (2.0 * std::sqrt(pi));
    UserLink link{Direction(0.0, 0.0), r, 1.0, 1.0};
    CHECK(link_density(link) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(link_cost(link, ArrayGeometry(4, 4, 1.0)) == doctest::Approx(1.0).epsilon(1e-14));

    // rho * c = q with rho = p d^2
    link = UserLink{Direction(0.4, -0.3), 3.0, 2.5, 0.1};
    const ArrayGeometry g(8, 8, 0.25, 0.1);
    const double d = 0.025;
    CHECK(link_density(link) * d * d * link_cost(link, g) == doctest::Approx(2.5).epsilon(1e-13));

    link.direction = Direction(pi / 2, 0.0);
    CHECK_THROWS_AS(link_density(link), InvalidGeometry);
    CHECK_THROWS_AS(link_cost(link, g), InvalidGeometry);
    link.direction = Direction(0.0, -pi / 2);
    CHECK_THROWS_AS(link_cost(link, g), InvalidGeometry);
    CHECK_THROWS_AS(Aperture(0.0, 1.0), InvalidGeometry);
}

TEST_CASE("asymptotics: dense SNR and limiting interference")
{
    CHECK(dense_snr(1.0, Aperture(10, 10)) == doctest::Approx(100.0));
    CHECK(dense_snr(0.0, Aperture(10, 10)) == 0.0);
    CHECK(dense_snr(100.0, Aperture(50, 50)) == doctest::Approx(250000.0));

    CHECK(limiting_interference(Aperture(10, 10), {0.0, 0.0}) == 1.0);
    CHECK(limiting_interference(Aperture(10, 20), {0.1, 0.0}) < 1e-30);
    // 40-digit reference for sinc^2(50 sin(pi/12))
    const double frozen = 2.058196467945896e-5;
    CHECK(std::abs(limiting_interference(Aperture(50, 50), {0.0, std::sin(pi / 12)}) - frozen) <= 1e-12 * frozen);

    // same quantity from a lambda/1000 array
    const ArrayGeometry fine(10000, 10000, 0.005); // 50 lambda square
    const double i12 = interference_gain(fine, Direction(0.0, 0.0), Direction(pi / 12, 0.0));
    CHECK(std::abs(i12 * i12 - frozen) <= 1e-4 * frozen);
}

TEST_CASE("asymptotics: refinement converges to the dense limit")
{
    const Aperture ap(10, 10);
    const Direction a(0.0, 0.0), b(0.37, 0.11);
    const double limit = limiting_interference(ap, angle_offsets(a, b));
    double prev = 1e300;
    for (int k = 1; k <= 10; ++k)
    {
        const std::size_t n = std::size_t(10) << k; // d = lambda / 2^k
        const ArrayGeometry g(n, n, 1.0 / double(std::size_t(1) << k));
        const double i12 = interference_gain(g, a, b);
        const double err = std::abs(i12 * i12 - limit);
        CHECK(err <= prev);
        prev = err;
    }
    const ArrayGeometry thousandth(10000, 10000, 0.001);
    const double i12 = interference_gain(thousandth, a, b);
    CHECK(std::abs(i12 * i12 - limit) <= 1e-4 * limit);
}

TEST_CASE("asymptotics: limiting SINRs")
{
    const Aperture ap(10, 10);
    const double s = 100.0;
    CHECK(limiting_sinr_mr(1.0, 1.0, ap, {0.0, 0.0}) == doctest::Approx(s / (s + 1)));
    CHECK(limiting_sinr_mr(1.0, 1.0, ap, {0.1, 0.0}) == doctest::Approx(s));
    CHECK(limiting_sinr_zf(1.0, ap, {0.0, 0.0}) == 0.0);
    CHECK(limiting_sinr_zf(1.0, ap, {0.1, 0.0}) == doctest::Approx(s));
    // I^2 = 1/2 at x = 0.4429464706894523 (40-digit root of sinc(x) = 1/sqrt 2)
    const double half = 0.44294647068945234;
    CHECK(limiting_sinr_zf(1.0, ap, {0.0, half / 10.0}) == doctest::Approx(50.0).epsilon(1e-10));

    // consistency with the finite two-user forms
    const Aperture big(50, 50);
    const AngleOffsets off{0.0, std::sin(pi / 12)};
    const double i = std::sqrt(limiting_interference(big, off));
    CHECK(limiting_sinr_mr(100, 100, big, off) == doctest::Approx(mr_sinr_two_user(2.5e5, 2.5e5, i)).epsilon(1e-13));
    CHECK(limiting_sinr_zf(100, big, off) == doctest::Approx(zf_sinr_two_user(2.5e5, i)).epsilon(1e-13));
}

TEST_CASE("asymptotics: dense ZF gains")
{
    const Aperture ap(10, 10);
    const std::vector<Direction> two{Direction(0.0, 0.0), Direction(0.2, 0.05)};
    const auto b = dense_zf_gains(ap, two);
    const double i2 = limiting_interference(ap, angle_offsets(two[0], two[1]));
    CHECK(std::abs(b.values[0] - (1.0 - i2)) < 1e-12);
    CHECK(std::abs(b.values[1] - (1.0 - i2)) < 1e-12);

    // agreement with a lambda/64 array for three users
    const std::vector<Direction> three{Direction(0.0, 0.0), Direction(0.15, 0.02), Direction(-0.3, -0.04)};
    const auto dense = dense_zf_gains(ap, three);
    const auto fine = zf_gains(ArrayGeometry(640, 640, 1.0 / 64.0), three);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(std::abs(dense.values[k] - fine.values[k]) < 1e-3);

    const std::vector<Direction> dup{Direction(0.1, 0.0), Direction(0.1, 0.0)};
    CHECK_THROWS_AS(dense_zf_gains(ap, dup), DegenerateAngles);
}

TEST_CASE("asymptotics: beam pattern report")
{
    const auto r = beam_pattern(10.0, 3);
    REQUIRE(r.null_angles.size() == 3);
    CHECK(r.null_angles[0] == doctest::Approx(0.10016742116155980).epsilon(1e-15));
    CHECK(r.sidelobe_levels[0] == doctest::Approx(0.045031637174372343).epsilon(1e-15));
    CHECK(oracle::db(r.sidelobe_levels[0]) == doctest::Approx(-13.464822634996302).epsilon(1e-13));
    CHECK(r.beamwidth == doctest::Approx(2 * std::asin(0.1)));
    CHECK(r.beamwidth_approx == doctest::Approx(0.2));
    CHECK_FALSE(r.small_angle_valid); // asin(0.35) is 2% above 0.35
    CHECK(beam_pattern(10.0, 1).small_angle_valid);

    // nulls and peaks interleave, and the pattern really vanishes at the nulls
    for (std::size_t n = 0; n < 3; ++n)
    {
        CHECK(r.null_angles[n] < r.sidelobe_angles[n]);
        if (n + 1 < 3)
            CHECK(r.sidelobe_angles[n] < r.null_angles[n + 1]);
        CHECK(limiting_interference(Aperture(10, 10), {0.0, std::sin(r.null_angles[n])}) < 1e-28);
        CHECK(r.sidelobe_levels[n] <= 1.0 / std::pow(pi * (n + 1.5), 2) * (1 + 1e-12));
    }
    CHECK(r.sidelobe_levels[1] < r.sidelobe_levels[0]);

    CHECK_FALSE(beam_pattern(3.0, 2).small_angle_valid);
    CHECK_THROWS_AS(beam_pattern(3.0, 3), ApertureTooSmall);
    CHECK_THROWS_AS(beam_pattern(10.0, 0), std::invalid_argument);
}

TEST_CASE("asymptotics: undersampling rule")
{
    CHECK(undersampling_error_bound(0.5, pi / 4));
    CHECK_FALSE(undersampling_error_bound(1.0, pi / 4));
    CHECK(undersampling_error_bound(1e-9, pi / 2));
    CHECK(undersampling_error_bound(0.5, -pi / 4));
}

TEST_CASE("asymptotics: MR/ZF gap on a wide surface")
{
    const AngleOffsets off{0.0, std::sin(pi / 12)};
    // 40-digit references, p = 100 per lambda^2, H = lambda
    CHECK(std::abs(se_gap_mr_zf(100, 100, 1.0, off, 1e4) - 0.006906392105843993) < 1e-12);
    CHECK(std::abs(se_gap_mr_zf(100, 100, 1.0, off, 100) - 0.26155517982153487) < 1e-12);
    CHECK(se_gap_mr_zf(100, 100, 1.0, off, 1e4) < 0.01);

    // a null of the interferer gives zero gap
    CHECK(std::abs(se_gap_mr_zf(100, 100, 1.0, {0.0, 0.1}, 20.0)) < 1e-12);
    CHECK_THROWS_AS(se_gap_mr_zf(1, 1, 1, {0.1, 0.0}, 10), std::invalid_argument);

    const auto widths = sidelobe_aligned_widths(off.psi, 1.0, 1e4);
    REQUIRE(widths.size() > 100);
    double prev = 1e300;
    for (double w : widths)
    {
        CHECK(std::abs(w * off.psi - std::round(w * off.psi - 0.5) - 0.5) < 1e-9);
        const double gap = se_gap_mr_zf(100, 100, 1.0, off, w);
        CHECK(gap >= 0.0);
        CHECK(gap < prev);
        CHECK(gap <= se_gap_upper_bound(100, 1.0, off.psi, w) + 1e-12);
        prev = gap;
    }
}
