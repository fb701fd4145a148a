// hbf - Tensor-based hybrid beamforming design and simulation library
// Copyright (C) 2026 The hbf Authors
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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hbf
{
    using Complex = std::complex<double>;
    using Index = Eigen::Index;

    // Column-major dense storage; every matrix symbol of the system model lives here.
    using ComplexMatrix = Eigen::MatrixXcd;
    using ComplexVector = Eigen::VectorXcd;
    using RealMatrix = Eigen::MatrixXd;
    using RealVector = Eigen::VectorXd;

    /// Raised for malformed shapes, out-of-range indices and invalid parameters.
    class ArgumentError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Raised when an iterative numerical routine fails. Carries the iteration
    /// count reached before giving up (0 when the backend does not expose one).
    class NumericError : public std::runtime_error
    {
    public:
        NumericError(const std::string &what, std::size_t iterations)
            : std::runtime_error(what), iterations_(iterations) {}

        std::size_t iterations() const noexcept { return iterations_; }

    private:
        std::size_t iterations_;
    };

    /// Raised by the simulation harness for infeasible or inconsistent configurations.
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };
}
