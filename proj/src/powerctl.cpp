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

#include "lis/powerctl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lis/errors.hpp"

namespace lis
{
    namespace
    {
        constexpr double ln2 = std::numbers::ln2;
        constexpr int max_bisection_steps = 200;
        constexpr int max_bracket_steps = 2100; // enough to span the double exponent range

        PowerAllocation finish(const AllocationProblem &problem, std::vector<double> powers, double multiplier)
        {
            PowerAllocation out;
            out.sinrs.resize(powers.size());
            for (std::size_t i = 0; i < powers.size(); ++i)
                out.sinrs[i] = powers[i] * problem.gains[i];
            out.powers = std::move(powers);
            out.multiplier = multiplier;
            return out;
        }
    }

    Utility Utility::proportional_fairness() { return Utility(UtilityKind::ProportionalFairness); }
    Utility Utility::sum_se() { return Utility(UtilityKind::SumSE); }
    Utility Utility::harmonic_mean() { return Utility(UtilityKind::HarmonicMean); }

    Utility Utility::custom(std::function<double(double)> derivative_inverse, std::function<double(double)> value)
    {
        if (!derivative_inverse)
            throw std::invalid_argument("custom utility needs the inverse of its derivative");
        Utility u(UtilityKind::Custom);
        u.custom_inverse_ = std::move(derivative_inverse);
        u.custom_value_ = std::move(value);
        return u;
    }

    std::string_view Utility::name() const
    {
        switch (kind_)
        {
        case UtilityKind::ProportionalFairness:
            return "proportional_fairness";
        case UtilityKind::SumSE:
            return "sum_se";
        case UtilityKind::HarmonicMean:
            return "harmonic_mean";
        case UtilityKind::Custom:
            break;
        }
        return "custom";
    }

    double Utility::value(double x) const
    {
        switch (kind_)
        {
        case UtilityKind::ProportionalFairness:
            return std::log(x);
        case UtilityKind::SumSE:
            return std::log2(1.0 + x);
        case UtilityKind::HarmonicMean:
            return -1.0 / x;
        case UtilityKind::Custom:
            break;
        }
        if (!custom_value_)
            throw std::logic_error("custom utility has no value function");
        return custom_value_(x);
    }

    double Utility::derivative(double x) const
    {
        switch (kind_)
        {
        case UtilityKind::ProportionalFairness:
            return 1.0 / x;
        case UtilityKind::SumSE:
            return 1.0 / ((1.0 + x) * ln2);
        case UtilityKind::HarmonicMean:
            return 1.0 / (x * x);
        case UtilityKind::Custom:
            break;
        }
        throw std::logic_error("derivative is not available for custom utilities");
    }

    double Utility::derivative_inverse(double y) const
    {
        switch (kind_)
        {
        case UtilityKind::ProportionalFairness:
            return 1.0 / y;
        case UtilityKind::SumSE:
            return 1.0 / (y * ln2) - 1.0;
        case UtilityKind::HarmonicMean:
            return 1.0 / std::sqrt(y);
        case UtilityKind::Custom:
            break;
        }
        return custom_inverse_(y);
    }

    Utility utility_from_name(std::string_view name)
    {
        if (name == "proportional_fairness")
            return Utility::proportional_fairness();
        if (name == "sum_se")
            return Utility::sum_se();
        if (name == "harmonic_mean")
            return Utility::harmonic_mean();
        throw std::invalid_argument("unknown utility '" + std::string(name) +
                                    "' (expected proportional_fairness, sum_se or harmonic_mean)");
    }

    void AllocationProblem::validate() const
    {
        if (gains.empty())
            throw std::invalid_argument("allocation problem has no users");
        if (gains.size() != costs.size())
            throw std::invalid_argument("gains and costs must have the same length");
        if (!(budget > 0.0) || !std::isfinite(budget))
            throw std::invalid_argument("power budget must be positive");
        for (std::size_t i = 0; i < gains.size(); ++i)
        {
            if (gains[i] == 0.0)
                throw ZeroGainUser("user " + std::to_string(i) + " has zero ZF gain");
            if (!(gains[i] > 0.0) || gains[i] > 1.0 + 1e-9)
                throw std::invalid_argument("gain of user " + std::to_string(i) + " must lie in (0, 1]");
            if (!(costs[i] > 0.0) || !std::isfinite(costs[i]))
                throw std::invalid_argument("cost of user " + std::to_string(i) + " must be positive");
        }
    }

    double PowerAllocation::spent(const AllocationProblem &problem) const
    {
        double total = 0.0;
        for (std::size_t i = 0; i < powers.size(); ++i)
            total += powers[i] * problem.costs[i];
        return total;
    }

    double total_utility(const AllocationProblem &problem, const Utility &utility, std::span<const double> powers)
    {
        double total = 0.0;
        for (std::size_t i = 0; i < powers.size(); ++i)
            total += utility.value(powers[i] * problem.gains[i]);
        return total;
    }

    PowerAllocation solve_allocation(const AllocationProblem &problem, const Utility &utility)
    {
        problem.validate();
        const std::size_t users = problem.users();
        const double budget = problem.budget;

        auto power_of = [&](std::size_t i, double nu)
        {
            const double x = utility.derivative_inverse(problem.costs[i] / (nu * problem.gains[i]));
            // [.]_+ also absorbs arguments outside the range of U'
            return (std::isfinite(x) && x > 0.0) ? x / problem.gains[i] : 0.0;
        };
        auto spent = [&](double nu)
        {
            double total = 0.0;
            for (std::size_t i = 0; i < users; ++i)
                total += problem.costs[i] * power_of(i, nu);
            return total;
        };

        // Spent power is nondecreasing in nu; bracket the root geometrically around Q max_i c_i
        const double nu0 = budget * *std::max_element(problem.costs.begin(), problem.costs.end());
        double lo = nu0, hi = nu0;
        if (spent(nu0) < budget)
        {
            int steps = 0;
            while (spent(hi) < budget)
            {
                lo = hi;
                hi *= 2.0;
                if (++steps > max_bracket_steps || !std::isfinite(hi))
                    throw NonBindingBudget("allocated power stays below the budget for every multiplier");
            }
        }
        else
        {
            int steps = 0;
            while (spent(lo) >= budget)
            {
                hi = lo;
                lo *= 0.5;
                if (++steps > max_bracket_steps || lo == 0.0)
                    throw NonBindingBudget("allocated power exceeds the budget for every positive multiplier");
            }
        }

        // Bisect until the bracket collapses to adjacent doubles
        for (int step = 0; step < max_bisection_steps; ++step)
        {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi)
                break;
            const double total = spent(mid);
            if (total == budget)
            {
                lo = hi = mid;
                break;
            }
            (total < budget ? lo : hi) = mid;
        }
        const double nu = std::abs(spent(lo) - budget) <= std::abs(spent(hi) - budget) ? lo : hi;

        std::vector<double> powers(users);
        for (std::size_t i = 0; i < users; ++i)
            powers[i] = power_of(i, nu);
        return finish(problem, std::move(powers), nu);
    }

    PowerAllocation alloc_proportional_fairness(const AllocationProblem &problem)
    {
        problem.validate();
        const double users = static_cast<double>(problem.users());
        std::vector<double> powers(problem.users());
        for (std::size_t i = 0; i < powers.size(); ++i)
            powers[i] = problem.budget / (problem.costs[i] * users);
        return finish(problem, std::move(powers), problem.budget / users);
    }

    PowerAllocation alloc_sum_se_waterfilling(const AllocationProblem &problem)
    {
        problem.validate();
        const std::size_t users = problem.users();

        // Floors c_i / b_i in physical power; users are activated in ascending floor order
        std::vector<double> floor(users);
        for (std::size_t i = 0; i < users; ++i)
            floor[i] = problem.costs[i] / problem.gains[i];
        std::vector<std::size_t> order(users);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return floor[a] < floor[b]; });

        // Water level nu / ln 2 = (Q + sum_active floor) / |active|, for the largest feasible prefix
        double level = 0.0, floor_sum = 0.0;
        for (std::size_t active = 1; active <= users; ++active)
        {
            floor_sum += floor[order[active - 1]];
            const double candidate = (problem.budget + floor_sum) / static_cast<double>(active);
            if (active > 1 && candidate <= floor[order[active - 1]])
                break;
            level = candidate;
        }

        std::vector<double> powers(users);
        for (std::size_t i = 0; i < users; ++i)
            powers[i] = std::max(0.0, level / problem.costs[i] - 1.0 / problem.gains[i]);
        return finish(problem, std::move(powers), level * ln2);
    }

    PowerAllocation alloc_harmonic_mean(const AllocationProblem &problem)
    {
        problem.validate();
        double weight_sum = 0.0;
        for (std::size_t i = 0; i < problem.users(); ++i)
            weight_sum += std::sqrt(problem.costs[i] / problem.gains[i]);

        std::vector<double> powers(problem.users());
        for (std::size_t i = 0; i < powers.size(); ++i)
            powers[i] = problem.budget / (std::sqrt(problem.gains[i] * problem.costs[i]) * weight_sum);
        const double root_nu = problem.budget / weight_sum;
        return finish(problem, std::move(powers), root_nu * root_nu);
    }

    PowerAllocation allocate(const AllocationProblem &problem, const Utility &utility)
    {
        switch (utility.kind())
        {
        case UtilityKind::ProportionalFairness:
            return alloc_proportional_fairness(problem);
        case UtilityKind::SumSE:
            return alloc_sum_se_waterfilling(problem);
        case UtilityKind::HarmonicMean:
            return alloc_harmonic_mean(problem);
        case UtilityKind::Custom:
            break;
        }
        return solve_allocation(problem, utility);
    }

    PowerAllocation brute_force_allocation(const AllocationProblem &problem, const Utility &utility, double grid_step)
    {
        problem.validate();
        const std::size_t users = problem.users();
        if (users > 4)
            throw TooManyUsersForOracle("grid oracle supports at most 4 users, got " + std::to_string(users));
        if (!(grid_step > 0.0))
            throw std::invalid_argument("grid step must be positive");

        const double budget = problem.budget;
        const auto ticks = static_cast<long>(std::floor(budget / grid_step * (1.0 + 1e-12)));

        std::vector<double> q(users), best_q(users);
        double best = -std::numeric_limits<double>::infinity();
        bool found = false;

        auto evaluate = [&]
        {
            double total = 0.0;
            for (std::size_t i = 0; i < users; ++i)
                total += utility.value(q[i] / problem.costs[i] * problem.gains[i]);
            // strict improvement only: ties keep the lexicographically first grid point
            if (!std::isnan(total) && (!found || total > best))
            {
                best = total;
                best_q = q;
                found = true;
            }
        };

        // Enumerate q_0..q_{K-2} on the grid; the last user receives the remaining budget
        auto recurse = [&](auto &self, std::size_t i, long used) -> void
        {
            if (i + 1 == users)
            {
                q[i] = std::max(0.0, budget - static_cast<double>(used) * grid_step);
                evaluate();
                return;
            }
            for (long t = 0; t + used <= ticks; ++t)
            {
                q[i] = static_cast<double>(t) * grid_step;
                self(self, i + 1, used + t);
            }
        };
        recurse(recurse, 0, 0);

        std::vector<double> powers(users);
        for (std::size_t i = 0; i < users; ++i)
            powers[i] = best_q[i] / problem.costs[i];
        return finish(problem, std::move(powers), std::numeric_limits<double>::quiet_NaN());
    }
}
