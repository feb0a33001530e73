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
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace lis
{
    enum class UtilityKind
    {
        ProportionalFairness, // U(x) = ln x
        SumSE,                // U(x) = log2(1 + x)
        HarmonicMean,         // U(x) = -1 / x
        Custom
    };

    // Increasing utility U of a user's SINR, described by its value and the inverse of its derivative.
    // U'^-1 must be strictly decreasing; arguments above sup U' may return any nonpositive value
    // and are clipped to zero by the allocator.
    class Utility
    {
    public:
        static Utility proportional_fairness();
        static Utility sum_se();
        static Utility harmonic_mean();
        // value may be left empty when only the allocation (not the objective) is needed
        static Utility custom(std::function<double(double)> derivative_inverse,
                              std::function<double(double)> value = {});

        UtilityKind kind() const { return kind_; }
        std::string_view name() const;

        double value(double sinr) const;
        double derivative(double sinr) const; // built-in kinds only
        double derivative_inverse(double y) const;

    private:
        explicit Utility(UtilityKind kind) : kind_(kind) {}

        UtilityKind kind_;
        std::function<double(double)> custom_inverse_;
        std::function<double(double)> custom_value_;
    };

    // Parses "proportional_fairness", "sum_se" or "harmonic_mean"; throws std::invalid_argument otherwise
    Utility utility_from_name(std::string_view name);

    // maximize sum_i U(rho_i b_i) subject to sum_i rho_i c_i <= Q
    struct AllocationProblem
    {
        std::vector<double> gains; // b_i in (0, 1]
        std::vector<double> costs; // c_i > 0
        double budget = 1.0;       // Q > 0

        std::size_t users() const { return gains.size(); }

        // Throws ZeroGainUser for b_i = 0 and std::invalid_argument for any other violation
        void validate() const;
    };

    struct PowerAllocation
    {
        std::vector<double> powers; // rho_i
        double multiplier = 0.0;    // nu
        std::vector<double> sinrs;  // rho_i b_i, to be scaled by NM (or LH) by the caller

        // sum_i rho_i c_i
        double spent(const AllocationProblem &problem) const;
    };

    // sum_i U(rho_i b_i)
    double total_utility(const AllocationProblem &problem, const Utility &utility, std::span<const double> powers);

    // Generic inverse-derivative solution rho_i = [U'^-1(c_i / (nu b_i))]_+ / b_i, nu found by bisection.
    // Throws NonBindingBudget if no finite nu spends the budget.
    PowerAllocation solve_allocation(const AllocationProblem &problem, const Utility &utility);

    // rho_i = Q / (c_i K): equal physical power for every user
    PowerAllocation alloc_proportional_fairness(const AllocationProblem &problem);

    // rho_i = [nu / (ln 2 c_i) - 1 / b_i]_+ with the exact active-set water level
    PowerAllocation alloc_sum_se_waterfilling(const AllocationProblem &problem);

    // rho_i = Q / (sqrt(b_i c_i) sum_k sqrt(c_k / b_k))
    PowerAllocation alloc_harmonic_mean(const AllocationProblem &problem);

    // Closed form for the built-in utilities, generic solver for custom ones
    PowerAllocation allocate(const AllocationProblem &problem, const Utility &utility);

    // Exhaustive search over physical powers q_i on the budget simplex at the given grid step.
    // Only meant for verification; throws TooManyUsersForOracle for more than four users.
    PowerAllocation brute_force_allocation(const AllocationProblem &problem, const Utility &utility, double grid_step);
}
