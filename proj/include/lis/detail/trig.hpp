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

#include <cmath>
#include <numbers>

namespace lis::detail
{
    // sin(pi*x) with the argument reduced to [-1, 1] first, so that integer x gives exact zeros
    inline double sin_pi(double x)
    {
        const double r = x - 2.0 * std::nearbyint(0.5 * x);
        if (r == 0.0 || r == 1.0 || r == -1.0)
            return 0.0;
        return std::sin(std::numbers::pi * r);
    }

    inline double cos_pi(double x)
    {
        const double r = x - 2.0 * std::nearbyint(0.5 * x);
        if (r == 0.5 || r == -0.5)
            return 0.0;
        return std::cos(std::numbers::pi * r);
    }

    // Normalized sinc, sin(pi x) / (pi x), with sinc(0) = 1
    inline double sinc(double x)
    {
        if (std::abs(x) < 1e-6)
        {
            const double px = std::numbers::pi * x;
            return 1.0 - px * px / 6.0;
        }
        return sin_pi(x) / (std::numbers::pi * x);
    }
}
