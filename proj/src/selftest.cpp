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

#include "lis/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lis/asymptotics.hpp"
#include "lis/geometry.hpp"
#include "lis/powerctl.hpp"
#include "lis/precoding.hpp"
#include "lis/rng.hpp"

namespace lis
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        SelftestResult check(std::string name, double worst, double tolerance)
        {
            std::ostringstream detail;
            detail << "max error " << worst << " (tolerance " << tolerance << ")";
            return {std::move(name), worst <= tolerance, detail.str()};
        }

        double uniform(SplitMix64 &rng, double lo, double hi)
        {
            return lo + (hi - lo) * rng.uniform_open();
        }

        double relative(double a, double b)
        {
            const double scale = std::max(std::abs(a), std::abs(b));
            return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
        }
    }

    std::vector<SelftestResult> run_selftest()
    {
        std::vector<SelftestResult> results;
        SplitMix64 rng(20190501);

        {
            double worst = 0.0;
            for (int trial = 0; trial < 500; ++trial)
            {
                const auto n = static_cast<std::size_t>(1 + rng.next() % 300);
                const double a = trial % 10 == 0 ? std::round(uniform(rng, -2.0, 2.0)) : uniform(rng, -2.0, 2.0);
                std::complex<long double> literal = 0.0L;
                for (std::size_t k = 0; k < n; ++k)
                {
                    const long double phase = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) * a;
                    literal += std::complex<long double>(std::cos(phase), std::sin(phase));
                }
                const cdouble closed = dirichlet_sum(n, a);
                worst = std::max(worst, static_cast<double>(std::abs(std::complex<long double>(closed) - literal)));
            }
            results.push_back(check("dirichlet closed form vs literal sum", worst, 1e-12));
        }

        {
            double worst = 0.0;
            for (int trial = 0; trial < 40; ++trial)
            {
                const ArrayGeometry geom(1 + rng.next() % 30, 1 + rng.next() % 30, uniform(rng, 0.05, 1.0));
                const Direction d1(uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5));
                const Direction d2(uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5));
                worst = std::max(worst, std::abs(interference_gain(geom, d1, d2) - interference_gain_direct(geom, d1, d2)));
            }
            results.push_back(check("factorized vs direct interference gain", worst, 1e-10));
        }

        {
            double worst = 0.0;
            const ArrayGeometry geom(8, 8, 0.5);
            for (int trial = 0; trial < 20; ++trial)
            {
                const std::vector<Direction> dirs = {Direction(uniform(rng, -1.2, 1.2), uniform(rng, -0.5, 0.5)),
                                                     Direction(uniform(rng, -1.2, 1.2), uniform(rng, -0.5, 0.5))};
                const double i12 = interference_gain(geom, dirs[0], dirs[1]);
                const ZfGains b = zf_gains(geom, dirs);
                worst = std::max(worst, std::abs(b.values[0] - (1.0 - i12 * i12)));
            }
            results.push_back(check("two-user ZF gain vs 1 - I12^2", worst, 1e-10));
        }

        {
            double worst = 0.0, spent = 0.0;
            for (int trial = 0; trial < 200; ++trial)
            {
                AllocationProblem problem;
                const auto users = static_cast<std::size_t>(1 + rng.next() % 8);
                for (std::size_t k = 0; k < users; ++k)
                {
                    problem.gains.push_back(uniform(rng, 1e-3, 1.0));
                    problem.costs.push_back(uniform(rng, 0.1, 100.0));
                }
                problem.budget = uniform(rng, 0.1, 1000.0);
                for (const Utility &u : {Utility::proportional_fairness(), Utility::sum_se(), Utility::harmonic_mean()})
                {
                    const PowerAllocation generic = solve_allocation(problem, u);
                    const PowerAllocation closed = allocate(problem, u);
                    for (std::size_t k = 0; k < users; ++k)
                        worst = std::max(worst, relative(generic.powers[k], closed.powers[k]));
                    spent = std::max(spent, std::abs(closed.spent(problem) - problem.budget) / problem.budget);
                }
            }
            results.push_back(check("closed-form allocations vs generic solver", worst, 1e-8));
            results.push_back(check("budget binds", spent, 1e-8));
        }

        {
            double worst = 0.0;
            for (int trial = 0; trial < 20; ++trial)
            {
                AllocationProblem problem{{uniform(rng, 0.05, 1.0), uniform(rng, 0.05, 1.0)},
                                          {uniform(rng, 0.5, 5.0), uniform(rng, 0.5, 5.0)},
                                          uniform(rng, 1.0, 10.0)};
                for (const Utility &u : {Utility::proportional_fairness(), Utility::sum_se(), Utility::harmonic_mean()})
                {
                    const double solver = total_utility(problem, u, allocate(problem, u).powers);
                    const double grid = total_utility(problem, u, brute_force_allocation(problem, u, 1e-3 * problem.budget).powers);
                    worst = std::max(worst, grid - solver);
                }
            }
            results.push_back(check("grid oracle never beats the solver", worst, 1e-9));
        }

        {
            const Aperture ap(10.0, 10.0);
            const ArrayGeometry fine(1, 10000, 1e-3);
            double worst = 0.0;
            for (double phi : {0.05, 0.2, 0.7, 1.3})
            {
                const Direction d1(0.0, 0.0), d2(phi, 0.0);
                const double exact = limiting_interference(ap, angle_offsets(d1, d2));
                const double g = interference_gain(fine, d1, d2);
                worst = std::max(worst, relative(g * g, exact));
            }
            results.push_back(check("dense limit vs lambda/1000 array", worst, 1e-4));
        }
        return results;
    }
}
