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


// Independent reference implementations used only by the tests. None of them call into the
// library's closed forms: sums are written out term by term and projections use classical
// Gram-Schmidt instead of Householder QR.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle
{
    using cld = std::complex<long double>;

    // sum_{n=0}^{N-1} exp(i 2 pi n A) in long double, with the phase reduced per term
    inline std::complex<double> dirichlet_literal(std::size_t count, double arg)
    {
        const long double a = static_cast<long double>(arg);
        long double re = 0.0L, im = 0.0L;
        for (std::size_t n = 0; n < count; ++n)
        {
            long double t = static_cast<long double>(n) * a;
            t -= std::nearbyint(t);
            const long double ph = 2.0L * std::numbers::pi_v<long double> * t;
            re += std::cos(ph);
            im += std::sin(ph);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    // Steering vector entry (n, m) written straight from its definition
    inline std::complex<long double> steering_entry(double d, double phi, double theta, std::size_t n, std::size_t m)
    {
        const long double pi = std::numbers::pi_v<long double>;
        const long double arg = 2.0L * pi * d *
                                (static_cast<long double>(m) * std::cos(static_cast<long double>(theta)) * std::sin(static_cast<long double>(phi)) +
                                 static_cast<long double>(n) * std::sin(static_cast<long double>(theta)));
        return {std::cos(arg), std::sin(arg)};
    }

    inline std::vector<cld> steering(std::size_t rows, std::size_t cols, double d, double phi, double theta)
    {
        std::vector<cld> a;
        a.reserve(rows * cols);
        for (std::size_t n = 0; n < rows; ++n)
            for (std::size_t m = 0; m < cols; ++m)
                a.push_back(steering_entry(d, phi, theta, n, m));
        return a;
    }

    inline cld inner(const std::vector<cld> &x, const std::vector<cld> &y) // x^H y
    {
        cld s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += std::conj(x[i]) * y[i];
        return s;
    }

    // |a1^H a2| / NM from the explicit double sum
    inline double interference_double_sum(std::size_t rows, std::size_t cols, double d,
                                          double phi1, double theta1, double phi2, double theta2)
    {
        cld s = 0;
        for (std::size_t n = 0; n < rows; ++n)
            for (std::size_t m = 0; m < cols; ++m)
                s += std::conj(steering_entry(d, phi1, theta1, n, m)) * steering_entry(d, phi2, theta2, n, m);
        return static_cast<double>(std::abs(s) / static_cast<long double>(rows * cols));
    }

    struct Dir
    {
        double phi, theta;
    };

    // b_k = ||a_k||^2 - sum_j |e_j^H a_k|^2 over an orthonormal basis e_j of the other users,
    // built with twice-iterated classical Gram-Schmidt, divided by NM
    inline double zf_gain_gram_schmidt(std::size_t rows, std::size_t cols, double d,
                                       const std::vector<Dir> &dirs, std::size_t k)
    {
        std::vector<std::vector<cld>> basis;
        for (std::size_t j = 0; j < dirs.size(); ++j)
        {
            if (j == k)
                continue;
            auto v = steering(rows, cols, d, dirs[j].phi, dirs[j].theta);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto &e : basis)
                {
                    const cld c = inner(e, v);
                    for (std::size_t i = 0; i < v.size(); ++i)
                        v[i] -= c * e[i];
                }
            const long double nrm = std::sqrt(std::real(inner(v, v)));
            for (auto &x : v)
                x /= nrm;
            basis.push_back(std::move(v));
        }
        const auto a = steering(rows, cols, d, dirs[k].phi, dirs[k].theta);
        long double res = std::real(inner(a, a));
        for (const auto &e : basis)
            res -= std::norm(inner(e, a));
        return static_cast<double>(res / static_cast<long double>(rows * cols));
    }

    // Two-sample Kolmogorov-Smirnov statistic sup |F1 - F2|
    inline double ks_distance(std::vector<double> x, std::vector<double> y)
    {
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        std::size_t i = 0, j = 0;
        double best = 0.0;
        while (i < x.size() && j < y.size())
        {
            const double v = std::min(x[i], y[j]);
            while (i < x.size() && x[i] <= v)
                ++i;
            while (j < y.size() && y[j] <= v)
                ++j;
            best = std::max(best, std::abs(double(i) / double(x.size()) - double(j) / double(y.size())));
        }
        return best;
    }

    inline double sinc(double x) // sin(pi x) / (pi x), plain textbook form
    {
        if (x == 0.0)
            return 1.0;
        const double px = std::numbers::pi * x;
        return std::sin(px) / px;
    }

    inline double db(double x) { return 10.0 * std::log10(x); }
}
