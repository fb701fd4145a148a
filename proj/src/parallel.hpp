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

#include <exception>
#include <vector>

#include "hbf/types.hpp"

namespace hbf::detail
{
    // OpenMP loop over [0, n) that forwards the first exception (lowest index)
    // to the caller instead of terminating inside the parallel region.
    template <typename Fn>
    void parallel_for(Index n, Fn fn)
    {
        std::vector<std::exception_ptr> failures(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(static)
        for (Index i = 0; i < n; ++i)
        {
            try
            {
                fn(i);
            }
            catch (...)
            {
                failures[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }

        for (const auto &e : failures)
            if (e)
                std::rethrow_exception(e);
    }
}
