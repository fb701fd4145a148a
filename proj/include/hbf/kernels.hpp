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

#include "hbf/tensor.hpp"

// Per-subcarrier kernels, OpenMP-parallel over the frontal slices of a
// channel tensor (dims Nr x Nt x M).
//
// Reductions across subcarriers are accumulated in fixed blocks of
// kSubcarrierBlock slices and the block partials are summed in block order,
// so the result is bit-identical for any thread count.
//
// hbf::reference holds slow serial transcriptions of the same maps built on
// explicit unfoldings; it is kept for tests and benchmarks only.

namespace hbf::kernels
{
    inline constexpr Index kSubcarrierBlock = 16;

    /// sum_m H_m f (w^H H_m f)^*  ==  X_(1) (I_M kron f f^H) X_(1)^H w
    ComplexVector combiner_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);

    /// sum_m H_m^H w (w^H H_m f)  ==  power step on sum_m H_m^H w w^H H_m
    ComplexVector precoder_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);

    /// sum_m |w^H H_m f|^2
    double stream_gain(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);

    /// In-place H_m <- (I - w w^H) H_m (I - f f^H) for every slice.
    void deflate(ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);

    /// W^H H_m F for every slice.
    std::vector<ComplexMatrix> effective_channels(const ComplexTensor3 &h, const ComplexMatrix &w, const ComplexMatrix &f);

    /// (1/M) sum_m H_m^H H_m  (transmit side, Nt x Nt)
    ComplexMatrix mean_transmit_covariance(const ComplexTensor3 &h);

    /// (1/M) sum_m H_m H_m^H  (receive side, Nr x Nr)
    ComplexMatrix mean_receive_covariance(const ComplexTensor3 &h);
}

namespace hbf::reference
{
    ComplexVector combiner_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);
    ComplexVector precoder_power_step(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);
    double stream_gain(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);
    ComplexTensor3 deflate(const ComplexTensor3 &h, const ComplexVector &w, const ComplexVector &f);
    std::vector<ComplexMatrix> effective_channels(const ComplexTensor3 &h, const ComplexMatrix &w, const ComplexMatrix &f);
    ComplexMatrix mean_transmit_covariance(const ComplexTensor3 &h);
    ComplexMatrix mean_receive_covariance(const ComplexTensor3 &h);
}
