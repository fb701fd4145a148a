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

#include <gtest/gtest.h>

#include <omp.h>

#include "hbf/kernels.hpp"
#include "test_util.hpp"

using namespace hbf;

namespace
{
    struct Case
    {
        Index nr, nt, m;
    };

    // Includes M below, at and above one reduction block.
    constexpr Case kCases[] = {{4, 4, 1}, {9, 4, 7}, {4, 16, 16}, {16, 16, 33}, {3, 5, 64}};

    double rel(const ComplexMatrix &got, const ComplexMatrix &want)
    {
        return test::max_abs(got - want) / std::max(1.0, test::max_abs(want));
    }

    class ThreadCount
    {
    public:
        explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
        ~ThreadCount() { omp_set_num_threads(saved_); }

    private:
        int saved_;
    };
}

TEST(Kernels, PowerStepsMatchReference)
{
    Rng rng(21);
    for (auto c : kCases)
    {
        auto h = test::random_tensor(c.nr, c.nt, c.m, rng);
        auto w = test::random_vector(c.nr, rng);
        auto f = test::random_vector(c.nt, rng);
        EXPECT_LT(rel(kernels::combiner_power_step(h, w, f), reference::combiner_power_step(h, w, f)), 1e-12);
        EXPECT_LT(rel(kernels::precoder_power_step(h, w, f), reference::precoder_power_step(h, w, f)), 1e-12);
        const double g = reference::stream_gain(h, w, f);
        EXPECT_NEAR(kernels::stream_gain(h, w, f), g, 1e-12 * g);
    }
}

TEST(Kernels, PowerStepsMatchSliceSums)
{
    Rng rng(22);
    auto h = test::random_tensor(4, 9, 5, rng);
    auto w = test::random_vector(4, rng);
    auto f = test::random_vector(9, rng);
    ComplexVector wc = ComplexVector::Zero(4), fc = ComplexVector::Zero(9);
    double gain = 0.0;
    for (Index m = 0; m < 5; ++m)
    {
        const ComplexMatrix hm = h.slice(m);
        const Complex y = (w.adjoint() * hm * f)(0, 0);
        wc += hm * f * std::conj(y);
        fc += hm.adjoint() * w * y;
        gain += std::norm(y);
    }
    EXPECT_LT(rel(kernels::combiner_power_step(h, w, f), wc), 1e-12);
    EXPECT_LT(rel(kernels::precoder_power_step(h, w, f), fc), 1e-12);
    EXPECT_NEAR(kernels::stream_gain(h, w, f), gain, 1e-12 * gain);
}

TEST(Kernels, DeflateMatchesReference)
{
    Rng rng(23);
    for (auto c : kCases)
    {
        auto h = test::random_tensor(c.nr, c.nt, c.m, rng);
        ComplexVector w = test::random_vector(c.nr, rng).normalized();
        ComplexVector f = test::random_vector(c.nt, rng).normalized();
        auto want = reference::deflate(h, w, f);
        kernels::deflate(h, w, f);
        for (Index m = 0; m < c.m; ++m)
            EXPECT_LT(rel(h.slice(m), want.slice(m)), 1e-12);
    }
}

TEST(Kernels, EffectiveChannelsAndCovariancesMatchReference)
{
    Rng rng(24);
    for (auto c : kCases)
    {
        auto h = test::random_tensor(c.nr, c.nt, c.m, rng);
        const Index ns = std::min<Index>(2, std::min(c.nr, c.nt));
        auto w = test::random_matrix(c.nr, ns, rng);
        auto f = test::random_matrix(c.nt, ns, rng);
        auto got = kernels::effective_channels(h, w, f);
        auto want = reference::effective_channels(h, w, f);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t m = 0; m < got.size(); ++m)
            EXPECT_LT(rel(got[m], want[m]), 1e-12);
        EXPECT_LT(rel(kernels::mean_transmit_covariance(h), reference::mean_transmit_covariance(h)), 1e-12);
        EXPECT_LT(rel(kernels::mean_receive_covariance(h), reference::mean_receive_covariance(h)), 1e-12);
    }
}

TEST(Kernels, CovariancesAreHermitian)
{
    Rng rng(25);
    auto h = test::random_tensor(4, 9, 20, rng);
    auto t = kernels::mean_transmit_covariance(h);
    auto r = kernels::mean_receive_covariance(h);
    EXPECT_EQ(t.rows(), 9);
    EXPECT_EQ(r.rows(), 4);
    EXPECT_LT(test::max_abs(t - t.adjoint()), 1e-12 * test::max_abs(t));
    EXPECT_LT(test::max_abs(r - r.adjoint()), 1e-12 * test::max_abs(r));
}

TEST(Kernels, ResultsIndependentOfThreadCount)
{
    Rng rng(26);
    auto h = test::random_tensor(16, 16, 100, rng);
    auto w = test::random_vector(16, rng);
    auto f = test::random_vector(16, rng);

    auto run = [&]
    {
        auto d = h;
        kernels::deflate(d, w.normalized(), f.normalized());
        return std::make_tuple(kernels::combiner_power_step(h, w, f), kernels::precoder_power_step(h, w, f),
                               kernels::stream_gain(h, w, f), kernels::mean_transmit_covariance(h),
                               kernels::mean_receive_covariance(h), d);
    };

    decltype(run()) one, four;
    {
        ThreadCount t(1);
        one = run();
    }
    {
        ThreadCount t(4);
        four = run();
    }
    EXPECT_EQ(std::get<0>(one), std::get<0>(four));
    EXPECT_EQ(std::get<1>(one), std::get<1>(four));
    EXPECT_EQ(std::get<2>(one), std::get<2>(four));
    EXPECT_EQ(std::get<3>(one), std::get<3>(four));
    EXPECT_EQ(std::get<4>(one), std::get<4>(four));
    EXPECT_EQ(std::get<5>(one), std::get<5>(four));
}

TEST(Kernels, LengthMismatchThrows)
{
    ComplexTensor3 h(4, 9, 2);
    EXPECT_THROW(kernels::combiner_power_step(h, ComplexVector::Zero(9), ComplexVector::Zero(9)), ArgumentError);
    EXPECT_THROW(kernels::precoder_power_step(h, ComplexVector::Zero(4), ComplexVector::Zero(4)), ArgumentError);
    EXPECT_THROW(kernels::deflate(h, ComplexVector::Zero(4), ComplexVector::Zero(4)), ArgumentError);
}
