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

#include "hbf/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace hbf
{
    namespace
    {
        std::string num(double v, const char *fmt = "%.10g")
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, fmt, v);
            return buf;
        }

        void write_rows(std::ostream &out, const SimConfig &config, const std::vector<TrialResult> &trials,
                        const std::string &suffix)
        {
            for (const auto &t : trials)
                for (const auto &mr : t.methods)
                    for (std::size_t s = 0; s < config.snr_db.size(); ++s)
                    {
                        out << t.trial << ',' << t.seed << ',' << method_name(mr.method) << ','
                            << num(config.snr_db[s]) << ',' << num(mr.avg_rate[s]) << ',';
                        if (mr.als)
                            out << num(mr.als->mean_iterations()) << ',' << num(mr.als->converged_fraction());
                        else
                            out << ',';
                        out << ',' << num(mr.design_ms, "%.3f") << ',' << num(mr.eval_ms, "%.3f") << suffix << '\n';
                    }
        }
    }

    void write_csv(std::ostream &out, const SimConfig &config, const std::vector<TrialResult> &trials)
    {
        out << kCsvHeader << '\n';
        write_rows(out, config, trials, "");
    }

    void write_sweep_csv(std::ostream &out, const SweepResult &result)
    {
        out << kCsvHeader << ",n_s,n_antennas\n";
        for (const auto &p : result.points)
        {
            const std::string suffix = "," + std::to_string(p.config.n_s) + "," + std::to_string(p.config.channel.n_tx);
            write_rows(out, p.config, p.trials, suffix);
        }
    }

    nlohmann::json to_json(const SimConfig &c)
    {
        nlohmann::json methods = nlohmann::json::array();
        for (Method m : c.methods)
            methods.push_back(std::string(method_name(m)));
        return {
            {"nt", c.channel.n_tx},
            {"nr", c.channel.n_rx},
            {"ns", c.n_s},
            {"m", c.channel.n_subcarriers},
            {"ncl", c.channel.n_clusters},
            {"nray", c.channel.n_rays},
            {"spread_deg", c.channel.angular_spread_deg},
            {"spacing", c.channel.spacing},
            {"snr_db", c.snr_db},
            {"trials", c.trials},
            {"seed", c.seed},
            {"eps", c.als.tolerance},
            {"nite", c.als.max_iterations},
            {"methods", methods},
            {"workers", c.workers},
            {"timing", c.timing},
        };
    }

    nlohmann::json to_json(const AlsReport &report)
    {
        nlohmann::json streams = nlohmann::json::array();
        for (const auto &s : report.streams)
            streams.push_back({{"iterations", s.iterations}, {"converged", s.converged}, {"objective", s.objective}});
        return {{"mean_iterations", report.mean_iterations()},
                {"converged_fraction", report.converged_fraction()},
                {"streams", streams}};
    }

    nlohmann::json to_json(const SimConfig &config, const TrialResult &trial)
    {
        nlohmann::json rows = nlohmann::json::array();
        nlohmann::json als = nullptr;
        for (const auto &mr : trial.methods)
        {
            for (std::size_t s = 0; s < config.snr_db.size(); ++s)
            {
                nlohmann::json row = {
                    {"trial", trial.trial},
                    {"seed", trial.seed},
                    {"method", std::string(method_name(mr.method))},
                    {"snr_db", config.snr_db[s]},
                    {"avg_sum_rate_bps_hz", mr.avg_rate[s]},
                    {"als_mean_iters", nullptr},
                    {"als_converged_frac", nullptr},
                    {"design_ms", mr.design_ms},
                    {"eval_ms", mr.eval_ms},
                };
                if (mr.als)
                {
                    row["als_mean_iters"] = mr.als->mean_iterations();
                    row["als_converged_frac"] = mr.als->converged_fraction();
                }
                rows.push_back(std::move(row));
            }
            if (mr.als)
                als = to_json(*mr.als);
        }
        return {{"trial", trial.trial}, {"seed", trial.seed}, {"rows", rows}, {"als", als}};
    }

    void write_json(std::ostream &out, const SimConfig &config, const std::vector<TrialResult> &trials)
    {
        nlohmann::json results = nlohmann::json::array();
        for (const auto &t : trials)
            results.push_back(to_json(config, t));
        out << nlohmann::json{{"config", to_json(config)}, {"results", results}}.dump(2) << '\n';
    }

    void write_sweep_json(std::ostream &out, const SimConfig &base, const SweepResult &result)
    {
        nlohmann::json points = nlohmann::json::array();
        for (const auto &p : result.points)
        {
            nlohmann::json results = nlohmann::json::array();
            for (const auto &t : p.trials)
                results.push_back(to_json(p.config, t));
            points.push_back({{"value", p.value}, {"config", to_json(p.config)}, {"results", results}});
        }
        nlohmann::json table = nlohmann::json::array();
        for (const auto &r : result.table)
            table.push_back({{"value", r.value},
                             {"method", std::string(method_name(r.method))},
                             {"snr_db", r.snr_db},
                             {"mean", r.mean},
                             {"std_error", r.std_error},
                             {"count", r.count}});
        out << nlohmann::json{{"config", to_json(base)},
                              {"sweep", std::string(axis_name(result.axis))},
                              {"points", points},
                              {"summary", table}}
                   .dump(2)
            << '\n';
    }

    std::string format_table(const std::vector<AggregateRow> &rows, SweepAxis axis)
    {
        std::ostringstream s;
        char line[160];
        std::snprintf(line, sizeof line, "%10s  %-8s %8s  %12s  %10s  %6s\n",
                      std::string(axis_name(axis)).c_str(), "method", "snr_db", "mean_bps_hz", "std_err", "n");
        s << line;
        for (const auto &r : rows)
        {
            std::snprintf(line, sizeof line, "%10g  %-8s %8g  %12.5f  %10.5f  %6ld\n", r.value,
                          std::string(method_name(r.method)).c_str(), r.snr_db, r.mean, r.std_error,
                          static_cast<long>(r.count));
            s << line;
        }
        return s.str();
    }
}
