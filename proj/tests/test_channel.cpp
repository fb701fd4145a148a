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

#include <numbers>
#include <sstream>

#include "hbf/channel.hpp"
#include "test_util.hpp"

using namespace hbf;

namespace
{
    ChannelParams small_params(Index n, Index m, Index ncl, Index nray)
    {
        ChannelParams p;
        p.n_tx = n;
        p.n_rx = n;
        p.n_subcarriers = m;
        p.n_clusters = ncl;
        p.n_rays = nray;
        return p;
    }

    // Written from the element formula, independently of uspa_response.
    ComplexVector steering(double phi, double theta, Index n, double d)
    {
        const Index side = static_cast<Index>(std::lround(std::sqrt(static_cast<double>(n))));
        ComplexVector a(n);
        for (Index h = 0; h < side; ++h)
            for (Index v = 0; v < side; ++v)
            {
                const double x = 2.0 * std::numbers::pi * d *
                                 (h * std::sin(phi) * std::sin(theta) + v * std::cos(theta));
                a(h * side + v) = Complex(std::cos(x), std::sin(x)) / std::sqrt(static_cast<double>(n));
            }
        return a;
    }
}

TEST(Uspa, BroadsideIsUniform)
{
    auto a = uspa_response(0.0, std::numbers::pi / 2, 4, 0.5);
    for (Index k = 0; k < 4; ++k)
    {
        EXPECT_NEAR(a(k).real(), 0.5, 1e-15);
        EXPECT_NEAR(a(k).imag(), 0.0, 1e-15);
    }
}

TEST(Uspa, VerticalIndexAlternatesSign)
{
    auto a = uspa_response(0.0, 0.0, 4, 0.5);
    // index h * 2 + v; phase pi * v
    EXPECT_NEAR(std::abs(a(0) - Complex(0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a(1) - Complex(-0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a(2) - Complex(0.5, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a(3) - Complex(-0.5, 0.0)), 0.0, 1e-15);
}

TEST(Uspa, UnitNormAndMatchesElementFormula)
{
    Rng rng(31);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    for (int rep = 0; rep < 200; ++rep)
    {
        const double phi = angle(rng), theta = angle(rng);
        for (Index n : {1, 4, 16, 64})
        {
            auto a = uspa_response(phi, theta, n, 0.5);
            EXPECT_NEAR(a.norm(), 1.0, 1e-12);
            EXPECT_LT(test::max_abs(a - steering(phi, theta, n, 0.5)), 1e-12);
        }
    }
}

TEST(Uspa, NonSquareCountThrows)
{
    EXPECT_THROW(uspa_response(0.0, 0.0, 8, 0.5), ArgumentError);
    EXPECT_THROW(uspa_response(0.0, 0.0, 0, 0.5), ArgumentError);
}

TEST(ChannelParams, Validation)
{
    EXPECT_NO_THROW(ChannelParams{}.validate());
    auto p = small_params(16, 4, 2, 2);
    p.n_tx = 15;
    EXPECT_THROW(p.validate(), ArgumentError);
    p = small_params(16, 0, 2, 2);
    EXPECT_THROW(p.validate(), ArgumentError);
    p = small_params(16, 4, 2, 2);
    p.spacing = 0.0;
    EXPECT_THROW(p.validate(), ArgumentError);
    p = small_params(16, 4, 2, 2);
    p.angular_spread_deg = -1.0;
    EXPECT_THROW(p.validate(), ArgumentError);
}

TEST(SamplePaths, ZeroSpreadCollapsesRaysOnClusterMean)
{
    auto p = small_params(16, 4, 3, 7);
    p.angular_spread_deg = 0.0;
    Rng rng(1);
    auto paths = sample_paths(p, rng);
    ASSERT_EQ(paths.cluster_mean.size(), 3u);
    for (Index i = 0; i < 3; ++i)
        for (Index l = 0; l < 7; ++l)
        {
            const auto &r = paths.ray(i, l);
            const auto &c = paths.cluster_mean[static_cast<std::size_t>(i)];
            EXPECT_EQ(r.aod_azimuth, c.aod_azimuth);
            EXPECT_EQ(r.aod_elevation, c.aod_elevation);
            EXPECT_EQ(r.aoa_azimuth, c.aoa_azimuth);
            EXPECT_EQ(r.aoa_elevation, c.aoa_elevation);
        }
}

TEST(SamplePaths, DeterministicForSeed)
{
    auto p = small_params(16, 4, 5, 10);
    Rng a(77), b(77), c(78);
    auto pa = sample_paths(p, a);
    EXPECT_EQ(pa, sample_paths(p, b));
    EXPECT_NE(pa, sample_paths(p, c));
}

TEST(SamplePaths, MeansUniformOnCircle)
{
    auto p = small_params(4, 1, 2000, 1);
    Rng rng(5);
    auto paths = sample_paths(p, rng);
    for (const auto &c : paths.cluster_mean)
        for (double x : {c.aod_azimuth, c.aod_elevation, c.aoa_azimuth, c.aoa_elevation})
        {
            EXPECT_GE(x, -std::numbers::pi);
            EXPECT_LT(x, std::numbers::pi);
        }
}

TEST(SamplePaths, LaplacianDeviationHasConfiguredSpread)
{
    // 25000 rays x 4 angles = 1e5 deviations.
    auto p = small_params(4, 1, 1, 25000);
    p.angular_spread_deg = 10.0;
    Rng rng(2024);
    auto paths = sample_paths(p, rng);
    const auto &c = paths.cluster_mean[0];
    double sum = 0.0, sum_sq = 0.0;
    std::size_t n = 0;
    for (const auto &r : paths.rays)
        for (double d : {r.aod_azimuth - c.aod_azimuth, r.aod_elevation - c.aod_elevation,
                         r.aoa_azimuth - c.aoa_azimuth, r.aoa_elevation - c.aoa_elevation})
        {
            sum += d;
            sum_sq += d * d;
            ++n;
        }
    ASSERT_EQ(n, 100000u);
    const double mean = sum / n;
    const double sd = std::sqrt((sum_sq - n * mean * mean) / (n - 1));
    const double target = 10.0 * std::numbers::pi / 180.0;
    EXPECT_NEAR(sd, target, 0.02 * target);
}

TEST(SamplePaths, GainsHaveUnitVariance)
{
    auto p = small_params(4, 1, 100, 500);
    Rng rng(9);
    auto paths = sample_paths(p, rng);
    double power = 0.0;
    for (const auto &r : paths.rays)
        power += std::norm(r.gain);
    EXPECT_NEAR(power / paths.rays.size(), 1.0, 0.02);
    for (double s : paths.cluster_power)
        EXPECT_EQ(s, 1.0);
}

TEST(Channel, MatchesDirectPathSum)
{
    auto p = small_params(9, 6, 3, 4);
    p.n_tx = 16;
    Rng rng(41);
    auto paths = sample_paths(p, rng);
    auto h = synthesize_channel(p, paths);
    ASSERT_EQ(h.dim1(), 9);
    ASSERT_EQ(h.dim2(), 16);
    ASSERT_EQ(h.dim3(), 6);
    const double norm = std::sqrt(9.0 * 16.0 / (3 * 4));
    for (Index m = 0; m < 6; ++m)
    {
        ComplexMatrix want = ComplexMatrix::Zero(9, 16);
        for (Index i = 0; i < 3; ++i)
            for (Index l = 0; l < 4; ++l)
            {
                const auto &r = paths.ray(i, l);
                const double ph = -2.0 * std::numbers::pi * i * m / 6.0;
                want += norm * r.gain * Complex(std::cos(ph), std::sin(ph)) *
                        steering(r.aoa_azimuth, r.aoa_elevation, 9, 0.5) *
                        steering(r.aod_azimuth, r.aod_elevation, 16, 0.5).adjoint();
            }
        EXPECT_LT(test::max_abs(h.slice(m) - want), 1e-12 * test::max_abs(want));
    }
}

TEST(Channel, SinglePathIsRankOneAndFlat)
{
    auto p = small_params(16, 8, 1, 1);
    Rng rng(3);
    auto paths = sample_paths(p, rng);
    auto h = synthesize_channel(p, paths);
    const double g2 = std::norm(paths.rays[0].gain);
    for (Index m = 0; m < 8; ++m)
    {
        EXPECT_EQ(ComplexMatrix(h.slice(m)), ComplexMatrix(h.slice(0)));
        auto s = svd(h.slice(m)).s;
        EXPECT_LT(s(1), 1e-12 * s(0));
        EXPECT_NEAR(frobenius_norm_sq(ComplexMatrix(h.slice(m))), 16.0 * 16.0 * g2, 1e-10 * 256.0 * g2);
    }
}

TEST(Channel, SliceRankBoundedByPathCount)
{
    auto p = small_params(16, 5, 2, 3);
    Rng rng(4);
    auto h = generate_channel(p, rng);
    for (Index m = 0; m < 5; ++m)
    {
        auto s = svd(h.slice(m)).s;
        for (Index k = 6; k < s.size(); ++k)
            EXPECT_LT(s(k), 1e-10 * s(0));
    }
}

TEST(Channel, MeanEnergyMatchesArraySize)
{
    auto p = small_params(16, 4, 5, 10);
    Rng rng(55);
    double total = 0.0;
    const int realizations = 1000;
    for (int r = 0; r < realizations; ++r)
    {
        auto h = generate_channel(p, rng);
        for (const Complex &z : h.data())
            ASSERT_TRUE(std::isfinite(z.real()) && std::isfinite(z.imag()));
        total += frobenius_norm_sq(h) / p.n_subcarriers;
    }
    const double mean = total / realizations;
    EXPECT_GE(mean, 0.95 * 256.0);
    EXPECT_LE(mean, 1.05 * 256.0);
}

TEST(Channel, DeterministicForSeed)
{
    auto p = small_params(16, 16, 5, 10);
    Rng a(100), b(100);
    EXPECT_EQ(generate_channel(p, a), generate_channel(p, b));
}

TEST(ChannelDump, RoundTripIsBitExact)
{
    auto p = small_params(4, 3, 2, 2);
    p.n_tx = 9;
    p.angular_spread_deg = 7.25;
    Rng rng(8);
    ChannelDump d{0xDEADBEEFCAFEF00Dull, p, generate_channel(p, rng)};
    std::stringstream buf;
    write_channel_dump(buf, d);
    auto back = read_channel_dump(buf);
    EXPECT_EQ(back, d);
    EXPECT_EQ(back.channel.dim2(), 9);
    EXPECT_EQ(buf.str().size(), 8u + 9 * 8 + 2 * 8 + static_cast<std::size_t>(4 * 9 * 3) * 16);
}

TEST(ChannelDump, RejectsBadMagicAndTruncation)
{
    std::stringstream bad("NOTMAGIC and some more bytes");
    EXPECT_THROW(read_channel_dump(bad), ArgumentError);

    auto p = small_params(4, 2, 1, 1);
    Rng rng(1);
    std::stringstream buf;
    write_channel_dump(buf, ChannelDump{1, p, generate_channel(p, rng)});
    std::string s = buf.str();
    std::stringstream cut(s.substr(0, s.size() - 3));
    EXPECT_THROW(read_channel_dump(cut), ArgumentError);
}
