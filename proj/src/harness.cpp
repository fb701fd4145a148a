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

#include "hbf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#include "hbf/metrics.hpp"

namespace hbf
{
    std::string_view method_name(Method m) noexcept
    {
        switch (m)
        {
        case Method::tucker:
            return "tucker";
        case Method::optimal:
            return "optimal";
        case Method::avgcov:
            return "avgcov";
        }
        return "?";
    }

    Method parse_method(std::string_view name)
    {
        for (Method m : {Method::tucker, Method::optimal, Method::avgcov})
            if (name == method_name(m))
                return m;
        throw ConfigError("unknown method '" + std::string(name) + "' (expected tucker, optimal or avgcov)");
    }

    std::string_view axis_name(SweepAxis a) noexcept
    {
        switch (a)
        {
        case SweepAxis::snr:
            return "snr";
        case SweepAxis::streams:
            return "streams";
        case SweepAxis::antennas:
            return "antennas";
        }
        return "?";
    }

    SweepAxis parse_axis(std::string_view name)
    {
        for (SweepAxis a : {SweepAxis::snr, SweepAxis::streams, SweepAxis::antennas})
            if (name == axis_name(a))
                return a;
        throw ConfigError("unknown sweep axis '" + std::string(name) + "' (expected snr, streams or antennas)");
    }

    SimConfig SimConfig::desk()
    {
        return SimConfig{};
    }

    SimConfig SimConfig::full()
    {
        SimConfig c;
        c.channel = ChannelParams{64, 64, 1024, 5, 10, 10.0, 0.5};
        c.n_s = 4;
        c.trials = 1000;
        c.snr_db = {-15.0, -10.0, -5.0, 0.0, 5.0, 10.0, 15.0};
        return c;
    }

    bool SimConfig::has(Method m) const
    {
        return std::find(methods.begin(), methods.end(), m) != methods.end();
    }

    void SimConfig::validate() const
    {
        try
        {
            channel.validate();
        }
        catch (const ArgumentError &e)
        {
            throw ConfigError(e.what());
        }
        if (n_s < 1)
            throw ConfigError("n_s must be >= 1");
        if (n_s > std::min(channel.n_tx, channel.n_rx))
            throw ConfigError("n_s = " + std::to_string(n_s) + " exceeds min(n_tx, n_rx) = " +
                              std::to_string(std::min(channel.n_tx, channel.n_rx)));
        if (snr_db.empty())
            throw ConfigError("SNR grid must not be empty");
        for (double s : snr_db)
            if (!std::isfinite(s))
                throw ConfigError("SNR grid contains a non-finite value");
        if (trials < 1)
            throw ConfigError("trials must be >= 1");
        if (!(als.tolerance >= 0.0) || !std::isfinite(als.tolerance))
            throw ConfigError("eps must be finite and non-negative");
        if (als.max_iterations < 1)
            throw ConfigError("nite must be >= 1");
        if (methods.empty())
            throw ConfigError("at least one method must be selected");
        for (std::size_t i = 0; i < methods.size(); ++i)
            for (std::size_t j = i + 1; j < methods.size(); ++j)
                if (methods[i] == methods[j])
                    throw ConfigError("method '" + std::string(method_name(methods[i])) + "' listed twice");
        if (workers < 1)
            throw ConfigError("workers must be >= 1");
    }

    const MethodResult *TrialResult::find(Method m) const
    {
        for (const auto &r : methods)
            if (r.method == m)
                return &r;
        return nullptr;
    }

    std::uint64_t trial_seed(std::uint64_t master, Index trial) noexcept
    {
        return split_seed(master, static_cast<std::uint64_t>(trial));
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        double elapsed_ms(Clock::time_point since)
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
        }

        void evaluate_into(MethodResult &out, const SimConfig &config, const std::vector<LinkGains> &links)
        {
            for (double snr : config.snr_db)
            {
                RateResult r = evaluate_rates(links, LinkBudget::from_snr_db(snr), config.n_s);
                out.avg_rate.push_back(r.average);
                if (config.keep_subcarrier_rates)
                    out.subcarrier_rates.push_back(std::move(r.per_subcarrier));
            }
        }
    }

    TrialResult run_trial(const SimConfig &config, Index trial)
    {
        TrialResult result;
        result.trial = trial;
        result.seed = trial_seed(config.seed, trial);

        Rng channel_rng(split_seed(result.seed, kChannelStream));
        const ComplexTensor3 h = generate_channel(config.channel, channel_rng);

        for (Method method : config.methods)
        {
            MethodResult mr;
            mr.method = method;

            auto t0 = Clock::now();
            PerSubcarrierBeams beams;
            switch (method)
            {
            case Method::tucker:
            {
                Rng design_rng(split_seed(result.seed, kDesignStream));
                HybridDesign d = design_hybrid(h, config.n_s, config.als, design_rng);
                mr.als = std::move(d.report);
                beams = to_beams(d.beamformer);
                break;
            }
            case Method::optimal:
                beams = optimal_digital_design(h, config.n_s);
                break;
            case Method::avgcov:
                beams = to_beams(avg_cov_design(h, config.n_s));
                break;
            }
            const double design_ms = elapsed_ms(t0);

            t0 = Clock::now();
            evaluate_into(mr, config, link_gains(h, beams));
            const double eval_ms = elapsed_ms(t0);

            if (config.timing)
            {
                mr.design_ms = design_ms;
                mr.eval_ms = eval_ms;
            }
            result.methods.push_back(std::move(mr));
        }
        return result;
    }

    std::vector<TrialResult> run_experiment(const SimConfig &config)
    {
        config.validate();

        const Index n = config.trials;
        std::vector<TrialResult> results(static_cast<std::size_t>(n));
        std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n));

#pragma omp parallel for num_threads(config.workers) schedule(dynamic, 1)
        for (Index t = 0; t < n; ++t)
        {
            try
            {
                results[static_cast<std::size_t>(t)] = run_trial(config, t);
            }
            catch (...)
            {
                failures[static_cast<std::size_t>(t)] = std::current_exception();
            }
        }

        for (const auto &e : failures)
            if (e)
                std::rethrow_exception(e);
        return results;
    }

    SimConfig sweep_point_config(const SimConfig &base, SweepAxis axis, double value)
    {
        auto as_count = [&](const char *what) -> Index
        {
            if (!std::isfinite(value) || value < 1.0 || value != std::floor(value))
            {
                std::ostringstream msg;
                msg << "sweep value " << value << " is not a valid " << what;
                throw ConfigError(msg.str());
            }
            return static_cast<Index>(value);
        };

        SimConfig c = base;
        switch (axis)
        {
        case SweepAxis::snr:
            if (!std::isfinite(value))
                throw ConfigError("sweep value is not a finite SNR");
            c.snr_db = {value};
            break;
        case SweepAxis::streams:
        {
            const Index n = as_count("stream count");
            if (n > std::min(c.channel.n_tx, c.channel.n_rx))
                throw ConfigError("sweep value " + std::to_string(n) + " exceeds min(n_tx, n_rx)");
            c.n_s = n;
            break;
        }
        case SweepAxis::antennas:
        {
            const Index n = as_count("antenna count");
            if (!is_perfect_square(n))
                throw ConfigError("sweep value " + std::to_string(n) + " is not a perfect square antenna count");
            if (n < c.n_s)
                throw ConfigError("sweep value " + std::to_string(n) + " is smaller than n_s");
            c.channel.n_tx = n;
            c.channel.n_rx = n;
            break;
        }
        }
        c.validate();
        return c;
    }

    std::vector<AggregateRow> aggregate(const SimConfig &config, const std::vector<TrialResult> &trials, double value)
    {
        std::vector<AggregateRow> rows;
        for (Method m : config.methods)
            for (std::size_t s = 0; s < config.snr_db.size(); ++s)
            {
                double sum = 0.0;
                Index count = 0;
                for (const auto &t : trials)
                    if (const MethodResult *r = t.find(m))
                    {
                        sum += r->avg_rate[s];
                        ++count;
                    }
                const double mean = count > 0 ? sum / static_cast<double>(count) : 0.0;
                double ss = 0.0;
                for (const auto &t : trials)
                    if (const MethodResult *r = t.find(m))
                        ss += (r->avg_rate[s] - mean) * (r->avg_rate[s] - mean);
                const double se = count > 1 ? std::sqrt(ss / static_cast<double>(count - 1) / static_cast<double>(count)) : 0.0;
                rows.push_back({value, m, config.snr_db[s], mean, se, count});
            }
        return rows;
    }

    SweepResult sweep(const SimConfig &base, SweepAxis axis, const std::vector<double> &values)
    {
        if (values.empty())
            throw ConfigError("sweep needs at least one value");

        // Validate every point before running any of them.
        std::vector<SimConfig> configs;
        for (double v : values)
            configs.push_back(sweep_point_config(base, axis, v));

        SweepResult out;
        out.axis = axis;
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            SweepPoint p{values[i], configs[i], run_experiment(configs[i])};
            auto rows = aggregate(p.config, p.trials, p.value);
            out.table.insert(out.table.end(), rows.begin(), rows.end());
            out.points.push_back(std::move(p));
        }
        return out;
    }
}
