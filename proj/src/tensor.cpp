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

#include "hbf/tensor.hpp"

#include <string>

namespace hbf
{
    ComplexTensor3::ComplexTensor3(Index dim1, Index dim2, Index dim3)
        : dim1_(dim1), dim2_(dim2), dim3_(dim3)
    {
        if (dim1 < 0 || dim2 < 0 || dim3 < 0)
            throw ArgumentError("ComplexTensor3: dimensions must be non-negative");
        data_.assign(static_cast<std::size_t>(dim1 * dim2 * dim3), Complex(0.0, 0.0));
    }

    Eigen::Map<ComplexMatrix> ComplexTensor3::slice(Index k)
    {
        if (k < 0 || k >= dim3_)
            throw ArgumentError("ComplexTensor3::slice: index " + std::to_string(k) + " out of range");
        return {data_.data() + offset(0, 0, k), dim1_, dim2_};
    }

    Eigen::Map<const ComplexMatrix> ComplexTensor3::slice(Index k) const
    {
        if (k < 0 || k >= dim3_)
            throw ArgumentError("ComplexTensor3::slice: index " + std::to_string(k) + " out of range");
        return {data_.data() + offset(0, 0, k), dim1_, dim2_};
    }

    namespace
    {
        void check_mode(int mode)
        {
            if (mode < 1 || mode > 3)
                throw ArgumentError("mode index must be 1, 2 or 3 (got " + std::to_string(mode) + ")");
        }

        // (row, col) of element (i, j, k) in the mode-n unfolding
        std::pair<Index, Index> unfolded_position(int mode, Index i, Index j, Index k, Index d1, Index d2)
        {
            switch (mode)
            {
            case 1:
                return {i, j + d2 * k};
            case 2:
                return {j, i + d1 * k};
            default:
                return {k, i + d1 * j};
            }
        }
    }

    ComplexMatrix mode_n_matricize(const ComplexTensor3 &t, int mode)
    {
        check_mode(mode);
        const Index d1 = t.dim1(), d2 = t.dim2(), d3 = t.dim3();

        if (mode == 1)
            return Eigen::Map<const ComplexMatrix>(t.data().data(), d1, d2 * d3);

        const Index rows = mode == 2 ? d2 : d3;
        ComplexMatrix out(rows, rows == 0 ? 0 : t.size() / rows);
        for (Index k = 0; k < d3; ++k)
            for (Index j = 0; j < d2; ++j)
                for (Index i = 0; i < d1; ++i)
                {
                    auto [r, c] = unfolded_position(mode, i, j, k, d1, d2);
                    out(r, c) = t(i, j, k);
                }
        return out;
    }

    ComplexTensor3 fold(const ComplexMatrix &unfolded, int mode, Index dim1, Index dim2, Index dim3)
    {
        check_mode(mode);
        const Index rows = mode == 1 ? dim1 : (mode == 2 ? dim2 : dim3);
        if (unfolded.rows() != rows || unfolded.size() != dim1 * dim2 * dim3)
            throw ArgumentError("fold: unfolded matrix shape does not match the target tensor");

        ComplexTensor3 t(dim1, dim2, dim3);
        for (Index k = 0; k < dim3; ++k)
            for (Index j = 0; j < dim2; ++j)
                for (Index i = 0; i < dim1; ++i)
                {
                    auto [r, c] = unfolded_position(mode, i, j, k, dim1, dim2);
                    t(i, j, k) = unfolded(r, c);
                }
        return t;
    }

    double frobenius_norm_sq(const ComplexMatrix &a)
    {
        return a.squaredNorm();
    }

    double frobenius_norm_sq(const ComplexTensor3 &t)
    {
        double acc = 0.0;
        for (const Complex &z : t.data())
            acc += std::norm(z);
        return acc;
    }
}
