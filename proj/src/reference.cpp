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

// Serial transcriptions of the kernels in terms of explicit unfoldings.
// Slow by construction; used as the reference in tests and benchmarks.

#include "hbf/kernels.hpp"
#include "hbf/linalg.hpp"

namespace hbf::reference
{
    ComplexVector combiner_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        const ComplexMatrix x1 = mode_n_matricize(h, 1);
        const ComplexMatrix ff = f * f.adjoint();
        const ComplexVector xw = x1.adjoint() * w;
        return slice_kron_apply(x1, ff, h.dim3()) * xw;
    }

    ComplexVector precoder_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        // Conjugated mode-2 unfolding: block m is H_m^H, so the product below is
        // sum_m H_m^H w w^H H_m f.
        const ComplexMatrix x2 = mode_n_matricize(h, 2).conjugate();
        const ComplexMatrix ww = w * w.adjoint();
        const ComplexVector xf = x2.adjoint() * f;
        return slice_kron_apply(x2, ww, h.dim3()) * xf;
    }

    double stream_gain(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        // r = w^H X_(1) is 1 x (Nt M); reshaped to Nt x M its column m is (w^H H_m)^T.
        const ComplexMatrix x1 = mode_n_matricize(h, 1);
        const Eigen::RowVectorXcd r = w.adjoint() * x1;
        const Eigen::Map<const ComplexMatrix> z(r.data(), h.dim2(), h.dim3());
        const ComplexVector per_slice = z.transpose() * f;
        double acc = 0.0;
        for (Index m = 0; m < per_slice.size(); ++m)
            acc += std::norm(per_slice[m]);
        return acc;
    }

    ComplexTensor3 deflate(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        const ComplexMatrix pw = ComplexMatrix::Identity(h.dim1(), h.dim1()) - w * w.adjoint();
        const ComplexMatrix pf = ComplexMatrix::Identity(h.dim2(), h.dim2()) - f * f.adjoint();
        const ComplexMatrix x1 = pw * slice_kron_apply(mode_n_matricize(h, 1), pf, h.dim3());
        return fold(x1, 1, h.dim1(), h.dim2(), h.dim3());
    }

    std::vector<ComplexMatrix> effective_channels(const ComplexTensor3 &h, const ComplexMatrix &w, const ComplexMatrix &f)
    {
        std::vector<ComplexMatrix> out;
        for (Index m = 0; m < h.dim3(); ++m)
        {
            ComplexMatrix e = ComplexMatrix::Zero(w.cols(), f.cols());
            for (Index a = 0; a < w.cols(); ++a)
                for (Index b = 0; b < f.cols(); ++b)
                    for (Index i = 0; i < h.dim1(); ++i)
                        for (Index j = 0; j < h.dim2(); ++j)
                            e(a, b) += std::conj(w(i, a)) * h(i, j, m) * f(j, b);
            out.push_back(std::move(e));
        }
        return out;
    }

    ComplexMatrix mean_transmit_covariance(const ComplexTensor3 &h)
    {
        // X_(2) X_(2)^H = sum_m H_m^T conj(H_m); conjugate to get sum_m H_m^H H_m.
        const ComplexMatrix x2 = mode_n_matricize(h, 2);
        return (x2 * x2.adjoint()).conjugate() / static_cast<double>(h.dim3());
    }

    ComplexMatrix mean_receive_covariance(const ComplexTensor3 &h)
    {
        const ComplexMatrix x1 = mode_n_matricize(h, 1);
        return x1 * x1.adjoint() / static_cast<double>(h.dim3());
    }
}
