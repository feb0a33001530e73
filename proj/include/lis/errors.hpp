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

#include <stdexcept>
#include <string>

namespace lis
{
    // Base class of every error raised by the library
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Array or link parameters outside their valid domain (e.g. zero effective area)
    class InvalidGeometry : public Error
    {
    public:
        using Error::Error;
    };

    // Steering vectors of the served users are numerically linearly dependent
    class DegenerateAngles : public Error
    {
    public:
        using Error::Error;
    };

    // More users than antenna elements
    class TooManyUsers : public Error
    {
    public:
        using Error::Error;
    };

    // Aperture too narrow to host the requested number of lobes
    class ApertureTooSmall : public Error
    {
    public:
        using Error::Error;
    };

    // No finite multiplier makes the power budget bind
    class NonBindingBudget : public Error
    {
    public:
        using Error::Error;
    };

    // A user with zero effective gain was passed to the power allocator
    class ZeroGainUser : public Error
    {
    public:
        using Error::Error;
    };

    // Grid oracle is restricted to a handful of users
    class TooManyUsersForOracle : public Error
    {
    public:
        using Error::Error;
    };

    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    // Too many random drops had to be redrawn
    class DegenerateDropLimit : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        using Error::Error;
    };
}
