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

#include "lis/precoding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "lis/errors.hpp"

namespace lis
{
    namespace
    {
        // Gram eigenvalues below rank_tolerance * NM count as linear dependence
        constexpr double rank_tolerance = 1e-10;

        Eigen::MatrixXcd steering_matrix(const ArrayGeometry &geom, std::span<const Direction> dirs)
        {
            Eigen::MatrixXcd a(static_cast<Eigen::Index>(geom.element_count()), static_cast<Eigen::Index>(dirs.size()));
            for (std::size_t i = 0; i < dirs.size(); ++i)
                a.col(static_cast<Eigen::Index>(i)) = steering_vector(geom, dirs[i]);
            return a;
        }

        void check_users(const ArrayGeometry &geom, std::span<const Direction> dirs)
        {
            if (dirs.empty())
                throw std::invalid_argument("at least one user direction is required");
            if (dirs.size() > geom.element_count())
                throw TooManyUsers("cannot zero-force " + std::to_string(dirs.size()) + " users with " +
                                   std::to_string(geom.element_count()) + " antennas");
        }

        void check_rank(const Eigen::MatrixXcd &a)
        {
            if (a.cols() < 2)
                return;
            const Eigen::MatrixXcd gram = a.adjoint() * a;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
            const double smallest = eig.eigenvalues().minCoeff();
            if (smallest < rank_tolerance * static_cast<double>(a.rows()))
                throw DegenerateAngles("steering vectors are linearly dependent (smallest Gram eigenvalue " +
                                       std::to_string(smallest) + ")");
        }

        // Component of column k orthogonal to all other columns, via Householder QR of the others
        Eigen::VectorXcd orthogonal_residual(const Eigen::MatrixXcd &a, Eigen::Index k)
        {
            const Eigen::Index users = a.cols();
            Eigen::VectorXcd target = a.col(k);
            if (users == 1)
                return target;

            Eigen::MatrixXcd others(a.rows(), users - 1);
            for (Eigen::Index i = 0, j = 0; i < users; ++i)
                if (i != k)
                    others.col(j++) = a.col(i);

            Eigen::HouseholderQR<Eigen::MatrixXcd> qr(others);
            Eigen::VectorXcd coeffs = qr.householderQ().adjoint() * target;
            coeffs.head(users - 1).setZero();
            return qr.householderQ() * coeffs;
        }
    }

    AngleOffsets angle_offsets(const Direction &dir1, const Direction &dir2)
    {
        return {std::sin(dir2.elevation) - std::sin(dir1.elevation),
                std::cos(dir2.elevation) * std::sin(dir2.azimuth) - std::cos(dir1.elevation) * std::sin(dir1.azimuth)};
    }

    double interference_gain(const ArrayGeometry &geom, const Direction &dir1, const Direction &dir2)
    {
        const AngleOffsets off = angle_offsets(dir1, dir2);
        const double vertical = std::abs(dirichlet_sum(geom.rows(), geom.spacing() * off.omega)) /
                                static_cast<double>(geom.rows());
        const double horizontal = std::abs(dirichlet_sum(geom.cols(), geom.spacing() * off.psi)) /
                                  static_cast<double>(geom.cols());
        return std::min(1.0, vertical * horizontal);
    }

    double interference_gain_direct(const ArrayGeometry &geom, const Direction &dir1, const Direction &dir2)
    {
        const SteeringVector a1 = steering_vector(geom, dir1);
        const SteeringVector a2 = steering_vector(geom, dir2);
        return std::abs(a1.dot(a2)) / static_cast<double>(geom.element_count());
    }

    Precoder mr_precoder(const ArrayGeometry &geom, const Direction &dir)
    {
        return {steering_vector(geom, dir) / std::sqrt(static_cast<double>(geom.element_count())), PrecoderKind::MR};
    }

    Precoder zf_precoder(const ArrayGeometry &geom, std::span<const Direction> dirs, std::size_t k)
    {
        check_users(geom, dirs);
        if (k >= dirs.size())
            throw std::out_of_range("user index out of range");
        const Eigen::MatrixXcd a = steering_matrix(geom, dirs);
        check_rank(a);
        Eigen::VectorXcd w = orthogonal_residual(a, static_cast<Eigen::Index>(k));
        w.normalize();
        return {std::move(w), PrecoderKind::ZF};
    }

    std::vector<Precoder> zf_precoders(const ArrayGeometry &geom, std::span<const Direction> dirs)
    {
        check_users(geom, dirs);
        const Eigen::MatrixXcd a = steering_matrix(geom, dirs);
        check_rank(a);
        std::vector<Precoder> out;
        out.reserve(dirs.size());
        for (Eigen::Index k = 0; k < a.cols(); ++k)
        {
            Eigen::VectorXcd w = orthogonal_residual(a, k);
            w.normalize();
            out.push_back({std::move(w), PrecoderKind::ZF});
        }
        return out;
    }

    ZfGains zf_gains(const ArrayGeometry &geom, std::span<const Direction> dirs)
    {
        check_users(geom, dirs);
        const Eigen::MatrixXcd a = steering_matrix(geom, dirs);
        check_rank(a);
        const double nm = static_cast<double>(geom.element_count());
        ZfGains gains;
        gains.values.reserve(dirs.size());
        // a_k^H P a_k = ||P a_k||^2 for the orthogonal projector P
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            gains.values.push_back(orthogonal_residual(a, k).squaredNorm() / nm);
        return gains;
    }

    double sinr_general(const ArrayGeometry &geom, std::span<const Direction> dirs,
                        std::span<const Precoder> precoders, std::span<const double> powers, std::size_t k)
    {
        if (precoders.size() != dirs.size() || powers.size() != dirs.size())
            throw std::invalid_argument("directions, precoders and powers must have the same length");
        if (k >= dirs.size())
            throw std::out_of_range("user index out of range");
        for (double rho : powers)
            if (!(rho >= 0.0))
                throw std::invalid_argument("powers must be nonnegative");

        const SteeringVector ak = steering_vector(geom, dirs[k]);
        double interference = 0.0;
        for (std::size_t i = 0; i < dirs.size(); ++i)
            if (i != k)
                interference += powers[i] * std::norm(ak.dot(precoders[i].vector));
        return powers[k] * std::norm(ak.dot(precoders[k].vector)) / (interference + 1.0);
    }

    double mr_sinr_two_user(double snr1, double snr2, double i12)
    {
        return snr1 / (snr2 * i12 * i12 + 1.0);
    }

    double zf_sinr_two_user(double snr1, double i12)
    {
        return snr1 * (1.0 - i12 * i12);
    }
}
