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

#include "hbf/tucker.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hbf/kernels.hpp"
#include "hbf/linalg.hpp"
#include "parallel.hpp"

namespace hbf
{
    double AlsReport::mean_iterations() const
    {
        if (streams.empty())
            return 0.0;
        double acc = 0.0;
        for (const auto &s : streams)
            acc += s.iterations;
        return acc / static_cast<double>(streams.size());
    }

    double AlsReport::converged_fraction() const
    {
        if (streams.empty())
            return 0.0;
        std::size_t n = 0;
        for (const auto &s : streams)
            n += s.converged ? 1 : 0;
        return static_cast<double>(n) / static_cast<double>(streams.size());
    }

    ComplexMatrix HybridBeamformer::precoder(Index m) const
    {
        return analog.f_rf * f_bb.at(static_cast<std::size_t>(m));
    }

    ComplexMatrix HybridBeamformer::combiner(Index m) const
    {
        return analog.w_rf * w_bb.at(static_cast<std::size_t>(m));
    }

    ComplexVector random_constant_modulus(Index n, Rng &rng)
    {
        std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
        const double amp = 1.0 / std::sqrt(static_cast<double>(n));
        ComplexVector v(n);
        for (Index k = 0; k < n; ++k)
            v[k] = std::polar(amp, phase(rng));
        return v;
    }

    double stream_objective(const ComplexTensor3 &residual, const ComplexVector &w, const ComplexVector &f)
    {
        if (residual.dim3() < 1)
            throw ArgumentError("stream_objective: tensor has no subcarriers");
        return kernels::stream_gain(residual, w, f) / static_cast<double>(residual.dim3());
    }

    namespace
    {
        void check_options(const AlsOptions &options)
        {
            if (!(options.tolerance >= 0.0))
                throw ArgumentError("ALS tolerance must be non-negative");
            if (options.max_iterations < 0)
                throw ArgumentError("ALS iteration cap must be non-negative");
        }
    }

    StreamPair als_stream_pair(const ComplexTensor3 &residual, const AlsOptions &options, Rng &rng)
    {
        ComplexVector w = random_constant_modulus(residual.dim1(), rng);
        ComplexVector f = random_constant_modulus(residual.dim2(), rng);
        return als_stream_pair(residual, options, std::move(w), std::move(f));
    }

    StreamPair als_stream_pair(const ComplexTensor3 &residual, const AlsOptions &options,
                               ComplexVector w, ComplexVector f)
    {
        check_options(options);
        if (w.size() != residual.dim1() || f.size() != residual.dim2())
            throw ArgumentError("als_stream_pair: start vectors do not match the tensor");

        const double w_scale = 1.0 / std::sqrt(static_cast<double>(residual.dim1()));
        const double f_scale = 1.0 / std::sqrt(static_cast<double>(residual.dim2()));

        StreamPair out;
        StreamTrace &trace = out.trace;

        double previous = 0.0;
        double current = stream_objective(residual, w, f);
        trace.objective.push_back(current);

        auto squared_change = [&]
        { return (current - previous) * (current - previous); };

        // The first update always runs: convergence is only judged between two
        // consecutive iterates, never between the random start and the zero sentinel.
        while (trace.iterations < options.max_iterations &&
               (trace.iterations == 0 || squared_change() >= options.tolerance))
        {
            ++trace.iterations;
            w = phase_project(kernels::combiner_power_step(residual, w, f), w_scale);
            f = phase_project(kernels::precoder_power_step(residual, w, f), f_scale);
            previous = current;
            current = stream_objective(residual, w, f);
            trace.objective.push_back(current);
        }
        trace.converged = squared_change() < options.tolerance;

        out.w = std::move(w);
        out.f = std::move(f);
        return out;
    }

    ComplexTensor3 residual_update(const ComplexTensor3 &residual, const ComplexVector &w, const ComplexVector &f)
    {
        ComplexTensor3 out = residual;
        kernels::deflate(out, w, f);
        return out;
    }

    namespace
    {
        void check_streams(const ComplexTensor3 &h, Index n_s)
        {
            if (n_s < 1 || n_s > std::min(h.dim1(), h.dim2()))
                throw ArgumentError("stream count " + std::to_string(n_s) + " must be in [1, min(Nt, Nr)] = [1, " +
                                    std::to_string(std::min(h.dim1(), h.dim2())) + "]");
            if (h.dim3() < 1)
                throw ArgumentError("channel tensor has no subcarriers");
        }
    }

    AnalogDesign design_analog(const ComplexTensor3 &h, Index n_s, const AlsOptions &options, Rng &rng)
    {
        check_streams(h, n_s);

        AnalogDesign out;
        out.analog.f_rf.resize(h.dim2(), n_s);
        out.analog.w_rf.resize(h.dim1(), n_s);

        ComplexTensor3 residual = h;
        for (Index i = 0; i < n_s; ++i)
        {
            StreamPair pair = als_stream_pair(residual, options, rng);
            out.analog.f_rf.col(i) = pair.f;
            out.analog.w_rf.col(i) = pair.w;
            if (i + 1 < n_s)
                kernels::deflate(residual, pair.w, pair.f);
            out.report.streams.push_back(std::move(pair.trace));
        }
        return out;
    }

    HybridBeamformer design_digital(const ComplexTensor3 &h, const AnalogPair &analog, Index n_s)
    {
        check_streams(h, n_s);
        if (analog.f_rf.rows() != h.dim2() || analog.w_rf.rows() != h.dim1() ||
            analog.f_rf.cols() < n_s || analog.w_rf.cols() < n_s)
            throw ArgumentError("design_digital: analog matrices do not match the channel");

        const std::vector<ComplexMatrix> effective = kernels::effective_channels(h, analog.w_rf, analog.f_rf);
        const Index m_count = h.dim3();

        HybridBeamformer out;
        out.analog = analog;
        out.f_bb.resize(static_cast<std::size_t>(m_count));
        out.w_bb.resize(static_cast<std::size_t>(m_count));
        const double target = std::sqrt(static_cast<double>(n_s));

        detail::parallel_for(m_count, [&](Index m)
                             {
            const auto slot = static_cast<std::size_t>(m);
            const SvdResult d = svd(effective[slot]);
            ComplexMatrix f_bb = d.v.leftCols(n_s);
            const double norm = (analog.f_rf * f_bb).norm();
            if (!(norm > 0.0))
                throw NumericError("design_digital: hybrid precoder has zero norm", 0);
            f_bb *= target / norm;
            out.f_bb[slot] = std::move(f_bb);
            out.w_bb[slot] = d.u.leftCols(n_s); });

        return out;
    }

    HybridDesign design_hybrid(const ComplexTensor3 &h, Index n_s, const AlsOptions &options, Rng &rng)
    {
        AnalogDesign analog = design_analog(h, n_s, options, rng);
        HybridDesign out;
        out.beamformer = design_digital(h, analog.analog, n_s);
        out.report = std::move(analog.report);
        return out;
    }
}
