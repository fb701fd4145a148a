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

#include <vector>

#include "hbf/tensor.hpp"
#include "hbf/tucker.hpp"

namespace hbf
{
    /// Received power rho and noise variance; SNR = rho / sigma_n^2.
    struct LinkBudget
    {
        double rho = 1.0;
        double noise_variance = 1.0;

        /// Unit noise variance, rho = 10^(snr_db / 10).
        static LinkBudget from_snr_db(double snr_db);
        double snr() const { return rho / noise_variance; }
        void validate() const;
    };

    struct RateResult
    {
        std::vector<double> per_subcarrier; ///< R_sum,m in bit/s/Hz
        double average = 0.0;               ///< (1/M) sum_m R_sum,m, summed in subcarrier order
    };

    /// SINR of stream k (zero-based) on one subcarrier; f and w are the full
    /// (analog times digital) precoder Nt x Ns and combiner Nr x Ns.
    ///
    ///   gamma_k = (rho/Ns)|w_k^H H f_k|^2 / ((rho/Ns) sum_{i!=k}|w_k^H H f_i|^2 + sigma^2 ||w_k||^2)
    double stream_sinr(const ComplexMatrix &h, const ComplexMatrix &f, const ComplexMatrix &w,
                       Index k, const LinkBudget &budget, Index n_s);

    /// sum_k log2(1 + gamma_k)
    double sum_rate(const ComplexMatrix &h, const ComplexMatrix &f, const ComplexMatrix &w,
                    const LinkBudget &budget, Index n_s);

    /// Power-gain view of one subcarrier link: gains(i, k) = |w_i^H H f_k|^2,
    /// combiner_norm_sq(i) = ||w_i||^2. Independent of rho, so one instance
    /// serves a whole SNR grid.
    struct LinkGains
    {
        RealMatrix gains;
        RealVector combiner_norm_sq;

        static LinkGains from(const ComplexMatrix &h, const ComplexMatrix &f, const ComplexMatrix &w);
        double sinr(Index k, const LinkBudget &budget, Index n_s) const;
        double sum_rate(const LinkBudget &budget, Index n_s) const;
    };

    /// Per-subcarrier precoders and combiners (fully digital, or hybrid products).
    struct PerSubcarrierBeams
    {
        std::vector<ComplexMatrix> f;
        std::vector<ComplexMatrix> w;
    };

    PerSubcarrierBeams to_beams(const HybridBeamformer &bf);

    /// Link gains for every subcarrier.
    std::vector<LinkGains> link_gains(const ComplexTensor3 &h, const PerSubcarrierBeams &beams);

    RateResult evaluate_rates(const std::vector<LinkGains> &links, const LinkBudget &budget, Index n_s);
    RateResult evaluate_rates(const ComplexTensor3 &h, const PerSubcarrierBeams &beams, const LinkBudget &budget, Index n_s);
    RateResult evaluate_rates(const ComplexTensor3 &h, const HybridBeamformer &bf, const LinkBudget &budget, Index n_s);

    /// Unconstrained benchmark: top-Ns right/left singular vectors of each H_m,
    /// equal power per stream (||F_m||_F^2 = Ns), no water-filling.
    PerSubcarrierBeams optimal_digital_design(const ComplexTensor3 &h, Index n_s);
    RateResult optimal_digital(const ComplexTensor3 &h, Index n_s, const LinkBudget &budget);

    /// Average-covariance phase baseline: the analog stages are the phases of
    /// the top-Ns eigenvectors of (1/M) sum_m H_m^H H_m (precoder) and
    /// (1/M) sum_m H_m H_m^H (combiner); the digital stage is design_digital.
    HybridBeamformer avg_cov_design(const ComplexTensor3 &h, Index n_s);

    struct BaselineResult
    {
        HybridBeamformer beamformer;
        RateResult rates;
    };

    BaselineResult avg_cov_baseline(const ComplexTensor3 &h, Index n_s, const LinkBudget &budget);
}
