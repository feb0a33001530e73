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

#include "lis/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <optional>
#include <string>
#include <thread>

#include "lis/detail/trig.hpp"
#include "lis/errors.hpp"
#include "lis/geometry.hpp"
#include "lis/powerctl.hpp"
#include "lis/precoding.hpp"
#include "lis/rng.hpp"
#include "lis/version.hpp"

namespace lis
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        // Runs body(i) for i in [0, count); each index is handled by exactly one worker
        template <typename Body>
        void parallel_for(std::size_t count, unsigned threads, Body body)
        {
            const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
            if (workers == 1)
            {
                for (std::size_t i = 0; i < count; ++i)
                    body(i);
                return;
            }
            std::vector<std::exception_ptr> errors(workers);
            {
                std::vector<std::jthread> pool;
                for (std::size_t w = 0; w < workers; ++w)
                    pool.emplace_back([&, w]
                                      {
                                          try
                                          {
                                              for (std::size_t i = w; i < count; i += workers)
                                                  body(i);
                                          }
                                          catch (...)
                                          {
                                              errors[w] = std::current_exception();
                                          } });
            }
            for (auto &e : errors)
                if (e)
                    std::rethrow_exception(e);
        }

        nlohmann::ordered_json base_metadata(const ScenarioConfig &cfg)
        {
            nlohmann::ordered_json meta;
            meta["generator"] = "lis-precoding";
            meta["version"] = version;
            meta["seed"] = cfg.seed;
            meta["config"] = config_to_json(cfg);
            meta["snr_calibration"] =
                "reference SNR is a density per square wavelength; a broadside user with the whole budget "
                "has interference-free SNR 10^(reference_snr_db/10) * L * H";
            return meta;
        }

        // Planar array realizing the configured aperture at spacing s (rounded to whole elements)
        ArrayGeometry array_for(const ScenarioConfig &cfg, double spacing)
        {
            auto elements = [&](double length)
            { return static_cast<std::size_t>(std::max<long long>(1, std::llround(length / spacing))); };
            return ArrayGeometry(elements(cfg.aperture_height), elements(cfg.aperture_width), spacing);
        }

        std::vector<Direction> explicit_directions(const ScenarioConfig &cfg)
        {
            std::vector<Direction> dirs;
            for (const auto &u : cfg.users)
                dirs.push_back(u.to_direction());
            return dirs;
        }

        double to_db(double linear)
        {
            return 10.0 * std::log10(linear);
        }
    }

    std::vector<double> symmetric_angle_grid(std::size_t points)
    {
        if (points < 2)
            throw ConfigError("angle grid needs at least two points");
        std::vector<double> grid(points);
        const double span = static_cast<double>(points - 1);
        for (std::size_t j = 0; j < points; ++j)
        {
            const double t = (2.0 * static_cast<double>(j) - span) / span; // exact in [-1, 1], odd in j
            grid[j] = 0.5 * pi * t;
        }
        return grid;
    }

    std::vector<double> log_grid(double lo, double hi, std::size_t points)
    {
        if (points < 2 || !(lo > 0.0) || !(hi > lo))
            throw ConfigError("logarithmic grid needs 0 < lo < hi and at least two points");
        std::vector<double> grid(points);
        const double step = std::log(hi / lo) / static_cast<double>(points - 1);
        for (std::size_t j = 0; j < points; ++j)
            grid[j] = lo * std::exp(step * static_cast<double>(j));
        grid.front() = lo;
        grid.back() = hi;
        return grid;
    }

    double reference_density(const ScenarioConfig &cfg)
    {
        return std::pow(10.0, cfg.reference_snr_db / 10.0);
    }

    ResultTable run_beampattern(const ScenarioConfig &cfg, const RunOptions &opts)
    {
        cfg.validate();
        const Aperture ap = cfg.aperture();

        // Uniform grid plus the exact dense-limit nulls, sorted
        struct Angle
        {
            double azimuth;
            double null_order;
        };
        std::vector<Angle> angles;
        for (double phi : symmetric_angle_grid(cfg.angle_grid))
            angles.push_back({phi, 0.0});
        for (std::size_t n = 1; static_cast<double>(n) < ap.width; ++n)
        {
            const double phi = std::asin(static_cast<double>(n) / ap.width);
            angles.push_back({phi, static_cast<double>(n)});
            angles.push_back({-phi, -static_cast<double>(n)});
        }
        std::stable_sort(angles.begin(), angles.end(), [](const Angle &a, const Angle &b)
                         { return a.azimuth < b.azimuth; });

        const Direction desired(0.0, 0.0);
        ResultTable table({"spacing", "azimuth", "null_order", "gain", "gain_db"});
        auto meta = base_metadata(cfg);
        meta["arrays"] = nlohmann::ordered_json::array();

        for (double spacing : cfg.spacings)
        {
            std::vector<double> gains(angles.size());
            if (spacing == 0.0)
            {
                parallel_for(angles.size(), opts.threads, [&](std::size_t i)
                             { gains[i] = limiting_interference(ap, angle_offsets(desired, Direction(angles[i].azimuth, 0.0))); });
                meta["arrays"].push_back({{"spacing", 0.0}, {"dense_limit", true}});
            }
            else
            {
                const ArrayGeometry geom = array_for(cfg, spacing);
                parallel_for(angles.size(), opts.threads, [&](std::size_t i)
                             {
                                 const double g = interference_gain(geom, desired, Direction(angles[i].azimuth, 0.0));
                                 gains[i] = g * g; });
                meta["arrays"].push_back({{"spacing", spacing},
                                          {"rows", geom.rows()},
                                          {"cols", geom.cols()},
                                          {"width", geom.width()},
                                          {"height", geom.height()}});
            }
            for (std::size_t i = 0; i < angles.size(); ++i)
                table.add_row({spacing, angles[i].azimuth, angles[i].null_order, gains[i], to_db(gains[i])});
        }
        table.metadata() = std::move(meta);
        return table;
    }

    ResultTable run_se_loss_map(const ScenarioConfig &cfg, const RunOptions &opts)
    {
        cfg.validate();
        const Aperture ap = cfg.aperture();
        const double p = reference_density(cfg);
        const double snr = dense_snr(p, ap);
        const double se_free = std::log2(1.0 + snr);
        const Direction desired(0.0, 0.0);

        const auto grid = symmetric_angle_grid(cfg.angle_grid);
        const std::size_t cells = grid.size() * grid.size();
        std::vector<std::array<double, 5>> rows(cells);
        parallel_for(cells, opts.threads, [&](std::size_t c)
                     {
                         const double phi = grid[c / grid.size()], theta = grid[c % grid.size()];
                         const AngleOffsets off = angle_offsets(desired, Direction(phi, theta));
                         const double mr = limiting_sinr_mr(p, p, ap, off);
                         const double zf = limiting_sinr_zf(p, ap, off);
                         rows[c] = {phi, theta, limiting_interference(ap, off),
                                    1.0 - std::log2(1.0 + mr) / se_free,
                                    1.0 - std::log2(1.0 + zf) / se_free}; });

        ResultTable table({"azimuth", "elevation", "interference", "se_loss_mr", "se_loss_zf"});
        for (const auto &r : rows)
            table.add_row({r[0], r[1], r[2], r[3], r[4]});
        table.metadata() = base_metadata(cfg);
        table.metadata()["interference_free_snr"] = snr;
        return table;
    }

    ResultTable run_width_sweep(const ScenarioConfig &cfg, const RunOptions &opts)
    {
        cfg.validate();
        const auto dirs = explicit_directions(cfg);
        const AngleOffsets off = angle_offsets(dirs[0], dirs[1]);
        const double p = reference_density(cfg);
        const auto widths = log_grid(cfg.width_range[0], cfg.width_range[1], cfg.angle_grid);

        std::vector<std::array<double, 4>> rows(widths.size());
        parallel_for(widths.size(), opts.threads, [&](std::size_t i)
                     {
                         const Aperture ap(widths[i], cfg.aperture_height);
                         rows[i] = {widths[i], std::log2(1.0 + limiting_sinr_mr(p, p, ap, off)),
                                    std::log2(1.0 + limiting_sinr_zf(p, ap, off)),
                                    std::log2(1.0 + dense_snr(p, ap))}; });

        ResultTable table({"width", "se_mr", "se_zf", "se_free"});
        for (const auto &r : rows)
            table.add_row({r[0], r[1], r[2], r[3]});
        table.metadata() = base_metadata(cfg);
        return table;
    }

    std::vector<double> drop_azimuths(std::uint64_t seed, std::uint64_t drop_index, std::size_t users)
    {
        SplitMix64 rng(seed ^ drop_index);
        std::vector<double> az(users);
        for (auto &a : az)
            a = -0.5 * pi + pi * rng.uniform_open();
        return az;
    }

    ResultTable run_user_drops(const ScenarioConfig &cfg, const RunOptions &opts)
    {
        cfg.validate();
        const Aperture ap = cfg.aperture();
        const Utility utility = utility_from_name(cfg.utility);
        const std::size_t users = cfg.users_served();
        const double spacing = cfg.spacings.front();
        const bool dense = spacing == 0.0;
        const double density = reference_density(cfg);
        constexpr double budget = 1.0;

        // Element area (in lambda^2) and element count: SINR_k = rho_k * count * b_k
        std::optional<ArrayGeometry> geom;
        double element_area = 1.0, count = ap.width * ap.height;
        if (!dense)
        {
            geom = array_for(cfg, spacing);
            element_area = spacing * spacing;
            count = static_cast<double>(geom->element_count());
        }

        struct Drop
        {
            std::vector<double> azimuth, gain, power, physical, sinr;
            std::size_t redraws = 0;
        };
        std::vector<Drop> drops(cfg.drops);

        parallel_for(cfg.drops, opts.threads, [&](std::size_t d)
                     {
                         Drop &out = drops[d];
                         SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(d));
                         std::vector<Direction> dirs(users);
                         ZfGains gains;
                         for (;;)
                         {
                             for (std::size_t k = 0; k < users; ++k)
                                 dirs[k] = Direction(-0.5 * pi + pi * rng.uniform_open(), 0.0);
                             if (!cfg.users.empty())
                                 dirs = explicit_directions(cfg);
                             try
                             {
                                 gains = dense ? dense_zf_gains(ap, dirs) : zf_gains(*geom, dirs);
                                 break;
                             }
                             catch (const DegenerateAngles &)
                             {
                                 if (!cfg.users.empty())
                                     throw;
                                 ++out.redraws;
                                 if (out.redraws > cfg.drops)
                                     throw DegenerateDropLimit("drop " + std::to_string(d) + " keeps producing degenerate angles");
                             }
                         }

                         // Allocate in received-SNR units rho'_k = count * rho_k, so the utility acts on the
                         // actual SINR rho'_k b_k; the matching cost is c_k / count.
                         AllocationProblem problem;
                         problem.budget = budget;
                         problem.gains = gains.values;
                         std::vector<double> costs;
                         for (const auto &dir : dirs)
                         {
                             const double area = cfg.effective_area ? std::cos(dir.azimuth) * std::cos(dir.elevation) : 1.0;
                             costs.push_back(budget / (density * element_area * area));
                             problem.costs.push_back(costs.back() / count);
                         }
                         const PowerAllocation alloc = allocate(problem, utility);

                         for (std::size_t k = 0; k < users; ++k)
                         {
                             out.azimuth.push_back(dirs[k].azimuth);
                             out.gain.push_back(gains.values[k]);
                             out.power.push_back(alloc.powers[k] / count);
                             out.physical.push_back(alloc.powers[k] * problem.costs[k]);
                             out.sinr.push_back(alloc.sinrs[k]);
                         } });

        std::size_t redraws = 0;
        for (const auto &d : drops)
            redraws += d.redraws;
        if (static_cast<double>(redraws) > 0.01 * static_cast<double>(cfg.drops))
            throw DegenerateDropLimit(std::to_string(redraws) + " of " + std::to_string(cfg.drops) +
                                      " drops had to be redrawn");

        ResultTable table({"drop_index", "user_index", "azimuth", "zf_gain", "power", "physical_power", "sinr", "se"});
        for (std::size_t d = 0; d < drops.size(); ++d)
            for (std::size_t k = 0; k < users; ++k)
                table.add_row({static_cast<double>(d), static_cast<double>(k), drops[d].azimuth[k], drops[d].gain[k],
                               drops[d].power[k], drops[d].physical[k], drops[d].sinr[k], std::log2(1.0 + drops[d].sinr[k])});

        auto meta = base_metadata(cfg);
        meta["budget"] = budget;
        meta["dense_limit"] = dense;
        if (geom)
            meta["array"] = {{"rows", geom->rows()}, {"cols", geom->cols()}, {"spacing", spacing}};
        meta["redrawn_drops"] = redraws;
        table.metadata() = std::move(meta);
        return table;
    }

    ResultTable run_scenario(const ScenarioConfig &cfg, const RunOptions &opts)
    {
        switch (cfg.experiment)
        {
        case Experiment::BeamPattern:
            return run_beampattern(cfg, opts);
        case Experiment::SeLossMap:
            return run_se_loss_map(cfg, opts);
        case Experiment::WidthSweep:
            return run_width_sweep(cfg, opts);
        case Experiment::UserDrops:
            return run_user_drops(cfg, opts);
        }
        throw ConfigError("unknown experiment");
    }
}
