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

#include "hbf/metrics.hpp"

#include <cmath>
#include <string>

#include "hbf/kernels.hpp"
#include "hbf/linalg.hpp"
#include "parallel.hpp"

namespace hbf
{
    LinkBudget LinkBudget::from_snr_db(double snr_db)
    {
        return {std::pow(10.0, snr_db / 10.0), 1.0};
    }

    void LinkBudget::validate() const
    {
        if (!(rho > 0.0) || !(noise_variance > 0.0) || !std::isfinite(rho) || !std::isfinite(noise_variance))
            throw ArgumentError("link budget: rho and noise variance must be finite and positive");
    }

    LinkGains LinkGains::from(const ComplexMatrix &h, const ComplexMatrix &f, const ComplexMatrix &w)
    {
        if (h.rows() != w.rows() || h.cols() != f.rows())
            throw ArgumentError("link gains: precoder/combiner do not match the channel");
        const ComplexMatrix g = w.adjoint() * h * f;
        return {g.cwiseAbs2(), w.colwise().squaredNorm().transpose()};
    }

    double LinkGains::sinr(Index k, const LinkBudget &budget, Index n_s) const
    {
        if (n_s < 1 || n_s > gains.rows() || n_s > gains.cols())
            throw ArgumentError("stream count " + std::to_string(n_s) + " exceeds the beamformer width");
        if (k < 0 || k >= n_s)
            throw ArgumentError("stream index " + std::to_string(k) + " out of range [0, " + std::to_string(n_s) + ")");

        const double per_stream = budget.rho / static_cast<double>(n_s);
        const double signal = per_stream * gains(k, k);
        if (signal == 0.0)
            return 0.0;

        double interference = 0.0;
        for (Index i = 0; i < n_s; ++i)
            if (i != k)
                interference += gains(k, i);
        return signal / (per_stream * interference + budget.noise_variance * combiner_norm_sq[k]);
    }

    double LinkGains::sum_rate(const LinkBudget &budget, Index n_s) const
    {
        double acc = 0.0;
        for (Index k = 0; k < n_s; ++k)
            acc += std::log2(1.0 + sinr(k, budget, n_s));
        return acc;
    }

    double stream_sinr(const ComplexMatrix &h, const ComplexMatrix &f, const ComplexMatrix &w,
                       Index k, const LinkBudget &budget, Index n_s)
    {
        budget.validate();
        return LinkGains::from(h, f, w).sinr(k, budget, n_s);
    }

    double sum_rate(const ComplexMatrix &h, const ComplexMatrix &f, const ComplexMatrix &w,
                    const LinkBudget &budget, Index n_s)
    {
        budget.validate();
        return LinkGains::from(h, f, w).sum_rate(budget, n_s);
    }

    PerSubcarrierBeams to_beams(const HybridBeamformer &bf)
    {
        PerSubcarrierBeams beams;
        const Index m_count = bf.n_subcarriers();
        beams.f.resize(static_cast<std::size_t>(m_count));
        beams.w.resize(static_cast<std::size_t>(m_count));
        for (Index m = 0; m < m_count; ++m)
        {
            beams.f[static_cast<std::size_t>(m)] = bf.precoder(m);
            beams.w[static_cast<std::size_t>(m)] = bf.combiner(m);
        }
        return beams;
    }

    std::vector<LinkGains> link_gains(const ComplexTensor3 &h, const PerSubcarrierBeams &beams)
    {
        const Index m_count = h.dim3();
        if (beams.f.size() != static_cast<std::size_t>(m_count) || beams.w.size() != beams.f.size())
            throw ArgumentError("link_gains: one precoder/combiner pair per subcarrier required");

        std::vector<LinkGains> out(static_cast<std::size_t>(m_count));
        detail::parallel_for(m_count, [&](Index m)
                             {
            const auto s = static_cast<std::size_t>(m);
            out[s] = LinkGains::from(h.slice(m), beams.f[s], beams.w[s]); });
        return out;
    }

    RateResult evaluate_rates(const std::vector<LinkGains> &links, const LinkBudget &budget, Index n_s)
    {
        budget.validate();
        RateResult r;
        r.per_subcarrier.reserve(links.size());
        double acc = 0.0;
        for (const LinkGains &l : links)
        {
            r.per_subcarrier.push_back(l.sum_rate(budget, n_s));
            acc += r.per_subcarrier.back();
        }
        r.average = links.empty() ? 0.0 : acc / static_cast<double>(links.size());
        return r;
    }

    RateResult evaluate_rates(const ComplexTensor3 &h, const PerSubcarrierBeams &beams, const LinkBudget &budget, Index n_s)
    {
        return evaluate_rates(link_gains(h, beams), budget, n_s);
    }

    RateResult evaluate_rates(const ComplexTensor3 &h, const HybridBeamformer &bf, const LinkBudget &budget, Index n_s)
    {
        return evaluate_rates(h, to_beams(bf), budget, n_s);
    }

    PerSubcarrierBeams optimal_digital_design(const ComplexTensor3 &h, Index n_s)
    {
        if (n_s < 1 || n_s > std::min(h.dim1(), h.dim2()))
            throw ArgumentError("optimal_digital: stream count " + std::to_string(n_s) + " exceeds min(Nt, Nr)");

        const Index m_count = h.dim3();
        PerSubcarrierBeams beams;
        beams.f.resize(static_cast<std::size_t>(m_count));
        beams.w.resize(static_cast<std::size_t>(m_count));

        detail::parallel_for(m_count, [&](Index m)
                             {
            const auto s = static_cast<std::size_t>(m);
            const SvdResult d = svd(h.slice(m));
            // Orthonormal columns: ||F_m||_F^2 = Ns already, i.e. unit power per stream.
            beams.f[s] = d.v.leftCols(n_s);
            beams.w[s] = d.u.leftCols(n_s); });
        return beams;
    }

    RateResult optimal_digital(const ComplexTensor3 &h, Index n_s, const LinkBudget &budget)
    {
        return evaluate_rates(h, optimal_digital_design(h, n_s), budget, n_s);
    }

    HybridBeamformer avg_cov_design(const ComplexTensor3 &h, Index n_s)
    {
        if (n_s < 1 || n_s > std::min(h.dim1(), h.dim2()))
            throw ArgumentError("avg_cov_baseline: stream count " + std::to_string(n_s) + " exceeds min(Nt, Nr)");

        // Hermitian PSD: the left singular vectors are the eigenvectors.
        const SvdResult tx = svd(kernels::mean_transmit_covariance(h));
        const SvdResult rx = svd(kernels::mean_receive_covariance(h));

        AnalogPair analog;
        analog.f_rf = phase_project(ComplexMatrix(tx.u.leftCols(n_s)), 1.0 / std::sqrt(static_cast<double>(h.dim2())));
        analog.w_rf = phase_project(ComplexMatrix(rx.u.leftCols(n_s)), 1.0 / std::sqrt(static_cast<double>(h.dim1())));
        return design_digital(h, analog, n_s);
    }

    BaselineResult avg_cov_baseline(const ComplexTensor3 &h, Index n_s, const LinkBudget &budget)
    {
        BaselineResult out;
        out.beamformer = avg_cov_design(h, n_s);
        out.rates = evaluate_rates(h, out.beamformer, budget, n_s);
        return out;
    }
}
