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

#include "hbf/kernels.hpp"

#include <omp.h>

namespace hbf::kernels
{
    namespace
    {
        void check_pair(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
        {
            if (w.size() != h.dim1() || f.size() != h.dim2())
                throw ArgumentError("kernel: beam vector length does not match the channel tensor");
        }

        Index block_count(Index m)
        {
            return (m + kSubcarrierBlock - 1) / kSubcarrierBlock;
        }

        // Blocked ordered reduction over subcarriers. `zero` fixes the shape of
        // the accumulator; `add(acc, m)` adds the contribution of slice m.
        template <typename Acc, typename AddFn>
        Acc ordered_reduce(Index m, const Acc &zero, AddFn add)
        {
            const Index blocks = block_count(m);
            std::vector<Acc> partial(static_cast<std::size_t>(blocks), zero);

#pragma omp parallel for schedule(static)
            for (Index b = 0; b < blocks; ++b)
            {
                Acc &acc = partial[static_cast<std::size_t>(b)];
                const Index end = std::min(m, (b + 1) * kSubcarrierBlock);
                for (Index s = b * kSubcarrierBlock; s < end; ++s)
                    add(acc, s);
            }

            Acc total = zero;
            for (const Acc &p : partial)
                total += p;
            return total;
        }
    }

    ComplexVector combiner_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        check_pair(h, w, f);
        return ordered_reduce(h.dim3(), ComplexVector::Zero(h.dim1()).eval(),
                              [&](ComplexVector &acc, Index s)
                              {
                                  const ComplexVector hf = h.slice(s) * f;
                                  acc += hf * std::conj(w.dot(hf));
                              });
    }

    ComplexVector precoder_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        check_pair(h, w, f);
        return ordered_reduce(h.dim3(), ComplexVector::Zero(h.dim2()).eval(),
                              [&](ComplexVector &acc, Index s)
                              {
                                  const auto hs = h.slice(s);
                                  // (w^H H_m)^H = H_m^H w
                                  const ComplexVector hw = hs.adjoint() * w;
                                  acc += hw * hw.dot(f);
                              });
    }

    double stream_gain(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        check_pair(h, w, f);
        return ordered_reduce(h.dim3(), 0.0,
                              [&](double &acc, Index s)
                              {
                                  acc += std::norm(w.dot(h.slice(s) * f));
                              });
    }

    void deflate(ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f)
    {
        check_pair(h, w, f);
        const Index m = h.dim3();

#pragma omp parallel for schedule(static)
        for (Index s = 0; s < m; ++s)
        {
            auto hs = h.slice(s);
            const Eigen::RowVectorXcd wh = w.adjoint() * hs;
            hs.noalias() -= w * wh;
            const ComplexVector hf = hs * f;
            hs.noalias() -= hf * f.adjoint();
        }
    }

    std::vector<ComplexMatrix> effective_channels(const ComplexTensor3 &h, const ComplexMatrix &w, const ComplexMatrix &f)
    {
        if (w.rows() != h.dim1() || f.rows() != h.dim2())
            throw ArgumentError("effective_channels: analog matrices do not match the channel tensor");

        const Index m = h.dim3();
        std::vector<ComplexMatrix> out(static_cast<std::size_t>(m));

#pragma omp parallel for schedule(static)
        for (Index s = 0; s < m; ++s)
            out[static_cast<std::size_t>(s)] = w.adjoint() * h.slice(s) * f;
        return out;
    }

    ComplexMatrix mean_transmit_covariance(const ComplexTensor3 &h)
    {
        const Index n = h.dim2();
        ComplexMatrix acc = ordered_reduce(h.dim3(), ComplexMatrix::Zero(n, n).eval(),
                                           [&](ComplexMatrix &a, Index s)
                                           {
                                               const auto hs = h.slice(s);
                                               a.noalias() += hs.adjoint() * hs;
                                           });
        return acc / static_cast<double>(h.dim3());
    }

    ComplexMatrix mean_receive_covariance(const ComplexTensor3 &h)
    {
        const Index n = h.dim1();
        ComplexMatrix acc = ordered_reduce(h.dim3(), ComplexMatrix::Zero(n, n).eval(),
                                           [&](ComplexMatrix &a, Index s)
                                           {
                                               const auto hs = h.slice(s);
                                               a.noalias() += hs * hs.adjoint();
                                           });
        return acc / static_cast<double>(h.dim3());
    }
}
