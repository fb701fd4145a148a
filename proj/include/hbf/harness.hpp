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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hbf/channel.hpp"
#include "hbf/tucker.hpp"

namespace hbf
{
    enum class Method
    {
        tucker,
        optimal,
        avgcov,
    };

    std::string_view method_name(Method m) noexcept;
    /// Throws ConfigError on an unknown name.
    Method parse_method(std::string_view name);

    /// Monte Carlo experiment configuration. The RF chain count equals n_s.
    struct SimConfig
    {
        ChannelParams channel{16, 16, 64, 5, 10, 10.0, 0.5};
        Index n_s = 2;
        std::vector<double> snr_db{-10.0, -5.0, 0.0, 5.0, 10.0};
        Index trials = 50;
        std::uint64_t seed = 1;
        AlsOptions als;
        std::vector<Method> methods{Method::tucker, Method::optimal, Method::avgcov};
        int workers = 1;
        bool timing = false;                ///< fill design_ms / eval_ms (breaks byte-identical output)
        bool keep_subcarrier_rates = false; ///< retain R_sum,m per SNR in the results

        /// Desk-scale defaults (16x16 arrays, 64 subcarriers, 2 streams, 50 trials).
        static SimConfig desk();
        /// Full experiment scale (64x64 arrays, 1024 subcarriers, 4 streams, 1000 trials).
        static SimConfig full();

        bool has(Method m) const;

        /// Throws ConfigError naming the first offending field.
        void validate() const;
    };

    struct MethodResult
    {
        Method method = Method::tucker;
        std::vector<double> avg_rate;                      ///< per SNR grid point
        std::vector<std::vector<double>> subcarrier_rates; ///< per SNR, only if requested
        std::optional<AlsReport> als;                      ///< tucker only
        double design_ms = 0.0;
        double eval_ms = 0.0;
    };

    struct TrialResult
    {
        Index trial = 0;
        std::uint64_t seed = 0;
        std::vector<MethodResult> methods; ///< in SimConfig::methods order

        const MethodResult *find(Method m) const;
    };

    /// Per-trial seed: split_seed(config.seed, trial). Under it, the channel
    /// draws from sub-stream kChannelStream and the ALS start points from
    /// kDesignStream, so enabling or disabling methods never changes the channel.
    std::uint64_t trial_seed(std::uint64_t master, Index trial) noexcept;

    TrialResult run_trial(const SimConfig &config, Index trial);

    /// Runs all trials on config.workers threads; results are in trial order
    /// and do not depend on the worker count.
    std::vector<TrialResult> run_experiment(const SimConfig &config);

    enum class SweepAxis
    {
        snr,
        streams,
        antennas,
    };

    std::string_view axis_name(SweepAxis a) noexcept;
    SweepAxis parse_axis(std::string_view name);

    struct SweepPoint
    {
        double value = 0.0;
        SimConfig config;
        std::vector<TrialResult> trials;
    };

    /// Mean and standard error of the trial-averaged sum-rate.
    struct AggregateRow
    {
        double value = 0.0;
        Method method = Method::tucker;
        double snr_db = 0.0;
        double mean = 0.0;
        double std_error = 0.0;
        Index count = 0;
    };

    struct SweepResult
    {
        SweepAxis axis = SweepAxis::snr;
        std::vector<SweepPoint> points;
        std::vector<AggregateRow> table;
    };

    /// SimConfig for one sweep point; throws ConfigError for an invalid value.
    SimConfig sweep_point_config(const SimConfig &base, SweepAxis axis, double value);

    /// One experiment per value. For the snr axis the grid is replaced by the
    /// single value; other axes keep the base SNR grid.
    SweepResult sweep(const SimConfig &base, SweepAxis axis, const std::vector<double> &values);

    std::vector<AggregateRow> aggregate(const SimConfig &config, const std::vector<TrialResult> &trials, double value);
}
