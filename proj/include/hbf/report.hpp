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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbf/harness.hpp"

// Result serialization.
//
// CSV: one row per (trial, method, snr) with the header
//
//   trial,seed,method,snr_db,avg_sum_rate_bps_hz,als_mean_iters,als_converged_frac,design_ms,eval_ms
//
// The two ALS columns are empty for methods without an ALS stage. Sweep
// output appends n_s,n_antennas so the swept quantity is recoverable.
//
// JSON: {"config": {...}, "results": [TrialResult...]} where each trial
// carries "rows" mirroring the CSV fields plus the per-stream ALS report.

namespace hbf
{
    inline constexpr const char *kCsvHeader =
        "trial,seed,method,snr_db,avg_sum_rate_bps_hz,als_mean_iters,als_converged_frac,design_ms,eval_ms";

    void write_csv(std::ostream &out, const SimConfig &config, const std::vector<TrialResult> &trials);
    void write_sweep_csv(std::ostream &out, const SweepResult &result);

    nlohmann::json to_json(const SimConfig &config);
    nlohmann::json to_json(const AlsReport &report);
    nlohmann::json to_json(const SimConfig &config, const TrialResult &trial);

    void write_json(std::ostream &out, const SimConfig &config, const std::vector<TrialResult> &trials);
    void write_sweep_json(std::ostream &out, const SimConfig &base, const SweepResult &result);

    /// Human-readable mean +- standard error table.
    std::string format_table(const std::vector<AggregateRow> &rows, SweepAxis axis);
}
