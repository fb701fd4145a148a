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

#include "hbf/rng.hpp"
#include "hbf/tensor.hpp"

// Hybrid beamformer design by constrained Tucker2 decomposition of the
// channel tensor.
//
// Analog stage: the shared precoder/combiner columns are found one stream
// at a time. Each stream runs a projected alternating scheme on the current
// residual tensor: one power-iteration step for the combiner followed by a
// phase projection, then the same for the precoder. The objective tracked is
//
//     delta = (1/M) sum_m |w^H H_res,m f|^2.
//
// Once a pair is found, its subspace is projected out of the residual
// (H_res,m <- (I - w w^H) H_res,m (I - f f^H)) before the next stream.
//
// Digital stage: per subcarrier SVD of W_RF^H H_m F_RF, truncated to N_s
// vectors, with the precoder rescaled so that ||F_RF F_BB,m||_F^2 = N_s.

namespace hbf
{
    struct AlsOptions
    {
        double tolerance = 1.0;  ///< stop once (delta_new - delta_old)^2 < tolerance
        int max_iterations = 10; ///< hard cap on ALS iterations per stream
    };

    struct StreamTrace
    {
        std::vector<double> objective; ///< delta after init, then after each iteration
        int iterations = 0;
        bool converged = false; ///< last squared change fell below the tolerance
    };

    struct AlsReport
    {
        std::vector<StreamTrace> streams;

        double mean_iterations() const;
        double converged_fraction() const;
    };

    struct StreamPair
    {
        ComplexVector w; ///< combiner column, |w_k| = 1/sqrt(Nr)
        ComplexVector f; ///< precoder column, |f_k| = 1/sqrt(Nt)
        StreamTrace trace;
    };

    /// Analog precoder F_RF (Nt x Ns) and combiner W_RF (Nr x Ns), shared by all subcarriers.
    struct AnalogPair
    {
        ComplexMatrix f_rf;
        ComplexMatrix w_rf;
    };

    struct HybridBeamformer
    {
        AnalogPair analog;
        std::vector<ComplexMatrix> f_bb; ///< Ns x Ns per subcarrier
        std::vector<ComplexMatrix> w_bb; ///< Ns x Ns per subcarrier

        Index n_subcarriers() const { return static_cast<Index>(f_bb.size()); }
        ComplexMatrix precoder(Index m) const;
        ComplexMatrix combiner(Index m) const;
    };

    struct AnalogDesign
    {
        AnalogPair analog;
        AlsReport report;
    };

    struct HybridDesign
    {
        HybridBeamformer beamformer;
        AlsReport report;
    };

    /// Random feasible start: i.i.d. uniform phases with modulus 1/sqrt(n).
    ComplexVector random_constant_modulus(Index n, Rng &rng);

    /// One stream pair on the residual tensor, started from a random feasible point.
    StreamPair als_stream_pair(const ComplexTensor3 &residual, const AlsOptions &options, Rng &rng);

    /// Same as above from a given feasible start (w0, f0).
    StreamPair als_stream_pair(const ComplexTensor3 &residual, const AlsOptions &options,
                               ComplexVector w0, ComplexVector f0);

    /// (1/M) sum_m |w^H H_m f|^2
    double stream_objective(const ComplexTensor3 &residual, const ComplexVector &w, const ComplexVector &f);

    /// Projects the (w, f) subspace out of every slice.
    ComplexTensor3 residual_update(const ComplexTensor3 &residual, const ComplexVector &w, const ComplexVector &f);

    AnalogDesign design_analog(const ComplexTensor3 &h, Index n_s, const AlsOptions &options, Rng &rng);

    HybridBeamformer design_digital(const ComplexTensor3 &h, const AnalogPair &analog, Index n_s);

    HybridDesign design_hybrid(const ComplexTensor3 &h, Index n_s, const AlsOptions &options, Rng &rng);
}
