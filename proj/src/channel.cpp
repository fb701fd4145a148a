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

#include "hbf/channel.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <string>

namespace hbf
{
    bool is_perfect_square(Index n) noexcept
    {
        if (n < 1)
            return false;
        auto r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
        return r * r == n;
    }

    void ChannelParams::validate() const
    {
        if (!is_perfect_square(n_tx))
            throw ArgumentError("n_tx must be a positive perfect square (got " + std::to_string(n_tx) + ")");
        if (!is_perfect_square(n_rx))
            throw ArgumentError("n_rx must be a positive perfect square (got " + std::to_string(n_rx) + ")");
        if (n_subcarriers < 1 || n_clusters < 1 || n_rays < 1)
            throw ArgumentError("subcarrier, cluster and ray counts must be >= 1");
        if (!(angular_spread_deg >= 0.0) || !std::isfinite(angular_spread_deg))
            throw ArgumentError("angular spread must be finite and non-negative");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw ArgumentError("element spacing must be finite and positive");
    }

    ComplexVector uspa_response(double phi, double theta, Index n, double spacing)
    {
        if (!is_perfect_square(n))
            throw ArgumentError("uspa_response: antenna count " + std::to_string(n) + " is not a perfect square");

        const auto side = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
        const double k = 2.0 * std::numbers::pi * spacing;
        const double horizontal = std::sin(phi) * std::sin(theta);
        const double vertical = std::cos(theta);
        const double amp = 1.0 / std::sqrt(static_cast<double>(n));

        ComplexVector a(n);
        for (Index h = 0; h < side; ++h)
            for (Index v = 0; v < side; ++v)
                a[h * side + v] = std::polar(amp, k * (static_cast<double>(h) * horizontal + static_cast<double>(v) * vertical));
        return a;
    }

    double laplacian_scale(double spread_deg) noexcept
    {
        return spread_deg * (std::numbers::pi / 180.0) / std::numbers::sqrt2;
    }

    PathSet sample_paths(const ChannelParams &params, Rng &rng)
    {
        params.validate();

        std::uniform_real_distribution<double> mean_angle(-std::numbers::pi, std::numbers::pi);
        std::exponential_distribution<double> expo(1.0);
        std::normal_distribution<double> gauss(0.0, 1.0);

        const double b = laplacian_scale(params.angular_spread_deg);
        // Difference of two unit exponentials is a unit Laplacian.
        auto laplace = [&]
        {
            const double e1 = expo(rng);
            const double e2 = expo(rng);
            return b * (e1 - e2);
        };

        PathSet paths;
        paths.n_clusters = params.n_clusters;
        paths.n_rays = params.n_rays;
        paths.cluster_power.assign(static_cast<std::size_t>(params.n_clusters), 1.0);
        paths.rays.reserve(static_cast<std::size_t>(params.n_clusters * params.n_rays));

        for (Index i = 0; i < params.n_clusters; ++i)
        {
            ClusterAngles mean;
            mean.aod_azimuth = mean_angle(rng);
            mean.aod_elevation = mean_angle(rng);
            mean.aoa_azimuth = mean_angle(rng);
            mean.aoa_elevation = mean_angle(rng);
            paths.cluster_mean.push_back(mean);
            const double gain_std = std::sqrt(paths.cluster_power[static_cast<std::size_t>(i)] / 2.0);

            for (Index l = 0; l < params.n_rays; ++l)
            {
                Ray r;
                r.aod_azimuth = mean.aod_azimuth + laplace();
                r.aod_elevation = mean.aod_elevation + laplace();
                r.aoa_azimuth = mean.aoa_azimuth + laplace();
                r.aoa_elevation = mean.aoa_elevation + laplace();
                const double re = gauss(rng);
                const double im = gauss(rng);
                r.gain = Complex(gain_std * re, gain_std * im);
                paths.rays.push_back(r);
            }
        }
        return paths;
    }

    ComplexTensor3 synthesize_channel(const ChannelParams &params, const PathSet &paths)
    {
        params.validate();
        if (paths.n_clusters != params.n_clusters || paths.n_rays != params.n_rays ||
            paths.rays.size() != static_cast<std::size_t>(params.n_clusters * params.n_rays))
            throw ArgumentError("synthesize_channel: path set does not match the parameters");

        const Index nr = params.n_rx, nt = params.n_tx, m_count = params.n_subcarriers;
        const double norm = std::sqrt(static_cast<double>(nr * nt) /
                                      static_cast<double>(params.n_clusters * params.n_rays));

        // Per-tap matrices C_i = norm * sum_l alpha_il a_r a_t^H; each slice is
        // then a phase-weighted sum of the N_cl taps.
        std::vector<ComplexMatrix> taps;
        taps.reserve(static_cast<std::size_t>(params.n_clusters));
        for (Index i = 0; i < params.n_clusters; ++i)
        {
            ComplexMatrix c = ComplexMatrix::Zero(nr, nt);
            for (Index l = 0; l < params.n_rays; ++l)
            {
                const Ray &r = paths.ray(i, l);
                const ComplexVector ar = uspa_response(r.aoa_azimuth, r.aoa_elevation, nr, params.spacing);
                const ComplexVector at = uspa_response(r.aod_azimuth, r.aod_elevation, nt, params.spacing);
                c.noalias() += (r.gain * ar) * at.adjoint();
            }
            taps.push_back(norm * c);
        }

        ComplexTensor3 h(nr, nt, m_count);

#pragma omp parallel for schedule(static)
        for (Index m = 0; m < m_count; ++m)
        {
            auto slice = h.slice(m);
            for (Index i = 0; i < params.n_clusters; ++i)
            {
                const double angle = -2.0 * std::numbers::pi * static_cast<double>(i * m) / static_cast<double>(m_count);
                slice += std::polar(1.0, angle) * taps[static_cast<std::size_t>(i)];
            }
        }
        return h;
    }

    ComplexTensor3 generate_channel(const ChannelParams &params, Rng &rng)
    {
        return synthesize_channel(params, sample_paths(params, rng));
    }

    // ---------- dump ----------

    namespace
    {
        constexpr std::array<char, 8> kMagic = {'H', 'B', 'F', 'C', 'H', 'A', 'N', '1'};

        static_assert(std::endian::native == std::endian::little, "channel dump assumes a little-endian host");

        void put_u64(std::ostream &out, std::uint64_t v)
        {
            out.write(reinterpret_cast<const char *>(&v), sizeof v);
        }

        void put_f64(std::ostream &out, double v)
        {
            put_u64(out, std::bit_cast<std::uint64_t>(v));
        }

        std::uint64_t get_u64(std::istream &in)
        {
            std::uint64_t v = 0;
            in.read(reinterpret_cast<char *>(&v), sizeof v);
            if (!in)
                throw ArgumentError("channel dump: truncated input");
            return v;
        }

        double get_f64(std::istream &in)
        {
            return std::bit_cast<double>(get_u64(in));
        }
    }

    void write_channel_dump(std::ostream &out, const ChannelDump &dump)
    {
        const auto &t = dump.channel;
        const auto &p = dump.params;
        out.write(kMagic.data(), kMagic.size());
        for (auto v : {t.dim1(), t.dim2(), t.dim3()})
            put_u64(out, static_cast<std::uint64_t>(v));
        put_u64(out, dump.seed);
        for (auto v : {p.n_tx, p.n_rx, p.n_subcarriers, p.n_clusters, p.n_rays})
            put_u64(out, static_cast<std::uint64_t>(v));
        put_f64(out, p.angular_spread_deg);
        put_f64(out, p.spacing);
        for (const Complex &z : t.data())
        {
            put_f64(out, z.real());
            put_f64(out, z.imag());
        }
        if (!out)
            throw ArgumentError("channel dump: write failed");
    }

    ChannelDump read_channel_dump(std::istream &in)
    {
        std::array<char, 8> magic{};
        in.read(magic.data(), magic.size());
        if (!in || magic != kMagic)
            throw ArgumentError("channel dump: bad magic");

        const auto d1 = static_cast<Index>(get_u64(in));
        const auto d2 = static_cast<Index>(get_u64(in));
        const auto d3 = static_cast<Index>(get_u64(in));

        ChannelDump dump;
        dump.seed = get_u64(in);
        dump.params.n_tx = static_cast<Index>(get_u64(in));
        dump.params.n_rx = static_cast<Index>(get_u64(in));
        dump.params.n_subcarriers = static_cast<Index>(get_u64(in));
        dump.params.n_clusters = static_cast<Index>(get_u64(in));
        dump.params.n_rays = static_cast<Index>(get_u64(in));
        dump.params.angular_spread_deg = get_f64(in);
        dump.params.spacing = get_f64(in);

        dump.channel = ComplexTensor3(d1, d2, d3);
        for (Complex &z : dump.channel.data())
        {
            const double re = get_f64(in);
            const double im = get_f64(in);
            z = Complex(re, im);
        }
        return dump;
    }
}
