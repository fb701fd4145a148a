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

#include "hbf/types.hpp"

namespace hbf
{
    /// X * (I_m kron P) computed block by block, without forming the Kronecker product.
    /// X must have m * P.rows() columns and P must be square.
    ComplexMatrix slice_kron_apply(const ComplexMatrix &x, const ComplexMatrix &p, Index m);

    /// Projection onto the constant-modulus set: entry k becomes scale * v_k / |v_k|.
    /// A zero entry maps to scale (its phase is taken as 0).
    ComplexVector phase_project(const ComplexVector &v, double scale);

    /// Column-wise phase projection of a matrix.
    ComplexMatrix phase_project(const ComplexMatrix &a, double scale);

    /// Thin singular value decomposition A = U diag(S) V^H.
    /// S holds min(rows, cols) values sorted descending; U and V have orthonormal columns.
    struct SvdResult
    {
        ComplexMatrix u;
        RealVector s;
        ComplexMatrix v;
    };

    /// Deterministic for a fixed input. Throws ArgumentError on non-finite
    /// input and NumericError if the decomposition does not converge.
    SvdResult svd(const ComplexMatrix &a);

    bool all_finite(const ComplexMatrix &a);
}
