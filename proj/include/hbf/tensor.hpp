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

#include <span>
#include <vector>

#include "hbf/types.hpp"

namespace hbf
{
    /// Dense complex 3-way array.
    ///
    /// Storage is column-major in (i, j, k): element (i, j, k) sits at
    /// i + dim1 * (j + dim2 * k). Frontal slice k is therefore a contiguous
    /// dim1 x dim2 column-major block, and the whole buffer read as a
    /// dim1 x (dim2 * dim3) matrix is exactly the mode-1 unfolding.
    ///
    /// For a channel tensor, dim1 = receive antennas, dim2 = transmit antennas,
    /// dim3 = subcarriers.
    class ComplexTensor3
    {
    public:
        ComplexTensor3() = default;
        ComplexTensor3(Index dim1, Index dim2, Index dim3);

        Index dim1() const noexcept { return dim1_; }
        Index dim2() const noexcept { return dim2_; }
        Index dim3() const noexcept { return dim3_; }
        Index size() const noexcept { return dim1_ * dim2_ * dim3_; }

        Complex &operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
        const Complex &operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

        Eigen::Map<ComplexMatrix> slice(Index k);
        Eigen::Map<const ComplexMatrix> slice(Index k) const;

        std::span<Complex> data() noexcept { return data_; }
        std::span<const Complex> data() const noexcept { return data_; }

        bool operator==(const ComplexTensor3 &other) const = default;

    private:
        std::size_t offset(Index i, Index j, Index k) const noexcept
        {
            return static_cast<std::size_t>(i + dim1_ * (j + dim2_ * k));
        }

        Index dim1_ = 0;
        Index dim2_ = 0;
        Index dim3_ = 0;
        std::vector<Complex> data_;
    };

    /// Mode-n unfolding, n in {1, 2, 3}.
    ///
    /// Row index is i_n; the remaining indices form the column index with the
    /// lower mode varying fastest. Mode 1: column i2 + dim2 * i3. Mode 2:
    /// column i1 + dim1 * i3. Mode 3: column i1 + dim1 * i2. Under this ordering
    /// the mode-1 unfolding of a channel tensor is [H_1 H_2 ... H_M], so
    /// right-multiplying by (I_M kron P) acts block-wise per subcarrier.
    ComplexMatrix mode_n_matricize(const ComplexTensor3 &t, int mode);

    /// Inverse of mode_n_matricize for a tensor of the given shape.
    ComplexTensor3 fold(const ComplexMatrix &unfolded, int mode, Index dim1, Index dim2, Index dim3);

    double frobenius_norm_sq(const ComplexMatrix &a);
    double frobenius_norm_sq(const ComplexTensor3 &t);
}
