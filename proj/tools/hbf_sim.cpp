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

// hbf_sim: Monte Carlo average sum-rate experiments for hybrid beamforming.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hbf/harness.hpp"
#include "hbf/report.hpp"

namespace
{
    constexpr int kExitConfig = 2;
    constexpr int kExitNumeric = 3;

    struct Options
    {
        bool full = false;
        std::optional<long> nt, nr, ns, m, ncl, nray;
        std::optional<double> spread_deg, spacing, eps;
        std::optional<int> nite, workers;
        std::optional<long> trials;
        std::optional<std::uint64_t> seed;
        std::vector<double> snr;
        std::vector<std::string> methods;
        std::string sweep;
        std::vector<double> sweep_values;
        std::string out;
        std::string format = "csv";
        bool timing = false;
        std::string dump_channel;
    };

    hbf::SimConfig build_config(const Options &o)
    {
        hbf::SimConfig c = o.full ? hbf::SimConfig::full() : hbf::SimConfig::desk();
        if (o.nt)
            c.channel.n_tx = *o.nt;
        if (o.nr)
            c.channel.n_rx = *o.nr;
        if (o.ns)
            c.n_s = *o.ns;
        if (o.m)
            c.channel.n_subcarriers = *o.m;
        if (o.ncl)
            c.channel.n_clusters = *o.ncl;
        if (o.nray)
            c.channel.n_rays = *o.nray;
        if (o.spread_deg)
            c.channel.angular_spread_deg = *o.spread_deg;
        if (o.spacing)
            c.channel.spacing = *o.spacing;
        if (o.eps)
            c.als.tolerance = *o.eps;
        if (o.nite)
            c.als.max_iterations = *o.nite;
        if (o.workers)
            c.workers = *o.workers;
        if (o.trials)
            c.trials = *o.trials;
        if (o.seed)
            c.seed = *o.seed;
        if (!o.snr.empty())
            c.snr_db = o.snr;
        else if (!o.sweep.empty() && o.sweep != "snr")
            c.snr_db = {0.0}; // stream and antenna sweeps run at 0 dB unless told otherwise
        if (!o.methods.empty())
        {
            c.methods.clear();
            for (const auto &name : o.methods)
                c.methods.push_back(hbf::parse_method(name));
        }
        c.timing = o.timing;
        c.validate();
        return c;
    }

    void dump_first_channel(const hbf::SimConfig &c, const std::string &path)
    {
        hbf::ChannelDump dump;
        dump.seed = hbf::trial_seed(c.seed, 0);
        dump.params = c.channel;
        hbf::Rng rng(hbf::split_seed(dump.seed, hbf::kChannelStream));
        dump.channel = hbf::generate_channel(c.channel, rng);
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw hbf::ConfigError("cannot open '" + path + "' for writing");
        hbf::write_channel_dump(f, dump);
    }

    int run(const Options &o)
    {
        if (o.format != "csv" && o.format != "json")
            throw hbf::ConfigError("--format must be csv or json");

        const hbf::SimConfig config = build_config(o);

        std::ofstream file;
        if (!o.out.empty())
        {
            file.open(o.out, std::ios::binary);
            if (!file)
                throw hbf::ConfigError("cannot open '" + o.out + "' for writing");
        }
        std::ostream &out = o.out.empty() ? std::cout : file;

        if (!o.dump_channel.empty())
            dump_first_channel(config, o.dump_channel);

        if (o.sweep.empty())
        {
            if (!o.sweep_values.empty())
                throw hbf::ConfigError("--sweep-values requires --sweep");
            const auto trials = hbf::run_experiment(config);
            if (o.format == "csv")
                hbf::write_csv(out, config, trials);
            else
                hbf::write_json(out, config, trials);
            std::cerr << hbf::format_table(hbf::aggregate(config, trials, 0.0), hbf::SweepAxis::snr);
        }
        else
        {
            const hbf::SweepAxis axis = hbf::parse_axis(o.sweep);
            if (o.sweep_values.empty())
                throw hbf::ConfigError("--sweep requires --sweep-values");
            const auto result = hbf::sweep(config, axis, o.sweep_values);
            if (o.format == "csv")
                hbf::write_sweep_csv(out, result);
            else
                hbf::write_sweep_json(out, config, result);
            std::cerr << hbf::format_table(result.table, axis);
        }

        out.flush();
        if (!out)
            throw hbf::ConfigError("failed writing results");
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Monte Carlo sum-rate simulation of tensor-based hybrid beamforming for OFDM mmWave MIMO"};
    Options o;

    app.add_flag("--full", o.full, "Start from full-scale defaults (64x64, M=1024, Ns=4, 1000 trials)");
    app.add_option("--nt", o.nt, "Transmit antennas (perfect square)");
    app.add_option("--nr", o.nr, "Receive antennas (perfect square)");
    app.add_option("--ns", o.ns, "Data streams = RF chains");
    app.add_option("--m", o.m, "Subcarriers");
    app.add_option("--ncl", o.ncl, "Clusters");
    app.add_option("--nray", o.nray, "Rays per cluster");
    app.add_option("--spread-deg", o.spread_deg, "Angular spread in degrees");
    app.add_option("--spacing", o.spacing, "Element spacing over wavelength");
    app.add_option("--snr", o.snr, "SNR grid in dB, comma separated")->delimiter(',');
    app.add_option("--trials", o.trials, "Channel realizations");
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--eps", o.eps, "ALS stopping threshold on the squared objective change");
    app.add_option("--nite", o.nite, "ALS iteration cap per stream");
    app.add_option("--methods", o.methods, "Comma list of tucker,optimal,avgcov")->delimiter(',');
    app.add_option("--sweep", o.sweep, "Sweep axis: snr, streams or antennas");
    app.add_option("--sweep-values", o.sweep_values, "Comma separated sweep values")->delimiter(',');
    app.add_option("--out", o.out, "Output path (default: stdout)");
    app.add_option("--format", o.format, "csv or json");
    app.add_option("--workers", o.workers, "Trial worker threads");
    app.add_flag("--timing", o.timing, "Record design/eval wall-clock times (output no longer reproducible)");
    app.add_option("--dump-channel", o.dump_channel, "Write the first trial's channel tensor to this path");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kExitConfig;
    }

    try
    {
        return run(o);
    }
    catch (const hbf::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const hbf::ArgumentError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const hbf::NumericError &e)
    {
        std::cerr << "numeric failure after " << e.iterations() << " iterations: " << e.what() << '\n';
        return kExitNumeric;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}
