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

#include "hbf/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hbf
{
    ComplexMatrix slice_kron_apply(const ComplexMatrix &x, const ComplexMatrix &p, Index m)
    {
        if (p.rows() != p.cols())
            throw ArgumentError("slice_kron_apply: P must be square");
        if (m < 1 || x.cols() != m * p.rows())
            throw ArgumentError("slice_kron_apply: X must have m * P.rows() columns");

        const Index b = p.rows();
        ComplexMatrix out(x.rows(), x.cols());
        for (Index k = 0; k < m; ++k)
            out.middleCols(k * b, b).noalias() = x.middleCols(k * b, b) * p;
        return out;
    }

    ComplexVector phase_project(const ComplexVector &v, double scale)
    {
        ComplexVector out(v.size());
        for (Index k = 0; k < v.size(); ++k)
        {
            const double mag = std::abs(v[k]);
            out[k] = mag > 0.0 ? scale * (v[k] / mag) : Complex(scale, 0.0);
        }
        return out;
    }

    ComplexMatrix phase_project(const ComplexMatrix &a, double scale)
    {
        ComplexMatrix out(a.rows(), a.cols());
        for (Index c = 0; c < a.cols(); ++c)
            out.col(c) = phase_project(ComplexVector(a.col(c)), scale);
        return out;
    }

    bool all_finite(const ComplexMatrix &a)
    {
        return a.allFinite();
    }

    SvdResult svd(const ComplexMatrix &a)
    {
        if (!a.allFinite())
            throw ArgumentError("svd: input has non-finite entries");

        const Index k = std::min(a.rows(), a.cols());
        if (k == 0)
            return {ComplexMatrix(a.rows(), 0), RealVector(0), ComplexMatrix(a.cols(), 0)};

        // Divide and conquer; blocks below 16 columns fall back to two-sided Jacobi.
        Eigen::BDCSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (solver.info() != Eigen::Success)
            throw NumericError("svd: did not converge", 0);

        // Eigen already orders the values; re-sort stably so ties keep column order.
        const RealVector &sv = solver.singularValues();
        std::vector<Index> order(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), Index{0});
        std::stable_sort(order.begin(), order.end(), [&](Index l, Index r)
                         { return sv[l] > sv[r]; });

        SvdResult out{ComplexMatrix(a.rows(), k), RealVector(k), ComplexMatrix(a.cols(), k)};
        for (Index c = 0; c < k; ++c)
        {
            const Index src = order[static_cast<std::size_t>(c)];
            out.u.col(c) = solver.matrixU().col(src);
            out.s[c] = sv[src];
            out.v.col(c) = solver.matrixV().col(src);
        }

        if (!out.u.allFinite() || !out.v.allFinite() || !out.s.allFinite())
            throw NumericError("svd: non-finite factors", 0);
        return out;
    }
}
