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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hbf/rng.hpp"
#include "hbf/tensor.hpp"

namespace hbf
{
    /// Clustered (extended Saleh-Valenzuela) wideband channel with uniform
    /// square planar arrays at both ends.
    struct ChannelParams
    {
        Index n_tx = 64;         ///< transmit antennas, perfect square
        Index n_rx = 64;         ///< receive antennas, perfect square
        Index n_subcarriers = 1024;
        Index n_clusters = 5;
        Index n_rays = 10;
        double angular_spread_deg = 10.0; ///< std. dev. of all four per-ray angle offsets
        double spacing = 0.5;             ///< element spacing over wavelength

        /// Throws ArgumentError on a violated invariant.
        void validate() const;

        bool operator==(const ChannelParams &) const = default;
    };

    /// One propagation path. Angles in radians.
    struct Ray
    {
        Complex gain;
        double aod_azimuth = 0.0;
        double aod_elevation = 0.0;
        double aoa_azimuth = 0.0;
        double aoa_elevation = 0.0;

        bool operator==(const Ray &) const = default;
    };

    /// Cluster mean angles, radians.
    struct ClusterAngles
    {
        double aod_azimuth = 0.0;
        double aod_elevation = 0.0;
        double aoa_azimuth = 0.0;
        double aoa_elevation = 0.0;

        bool operator==(const ClusterAngles &) const = default;
    };

    struct PathSet
    {
        Index n_clusters = 0;
        Index n_rays = 0;
        std::vector<double> cluster_power; ///< sigma^2_alpha per cluster
        std::vector<ClusterAngles> cluster_mean;
        std::vector<Ray> rays;             ///< cluster-major: rays[i * n_rays + l]

        const Ray &ray(Index cluster, Index r) const
        {
            return rays[static_cast<std::size_t>(cluster * n_rays + r)];
        }

        bool operator==(const PathSet &) const = default;
    };

    bool is_perfect_square(Index n) noexcept;

    /// USPA response. Element (h, v) of the sqrt(n) x sqrt(n) grid is stored at
    /// index h * sqrt(n) + v and equals
    /// exp(j 2 pi spacing (h sin(phi) sin(theta) + v cos(theta))) / sqrt(n).
    ComplexVector uspa_response(double phi, double theta, Index n, double spacing);

    /// Scale b of the Laplacian whose standard deviation (b * sqrt(2)) equals the spread.
    double laplacian_scale(double spread_deg) noexcept;

    /// Cluster mean angles uniform on [-pi, pi); ray angles = mean + Laplacian
    /// offset; gains CN(0, 1) per ray (equal unit cluster powers, so that
    /// E[||H_m||_F^2] = n_rx * n_tx).
    PathSet sample_paths(const ChannelParams &params, Rng &rng);

    /// Builds the Nr x Nt x M frequency-domain tensor from a path set. Cluster i
    /// is the delay tap i: slice m carries the phase exp(-j 2 pi i m / M), m zero-based.
    ComplexTensor3 synthesize_channel(const ChannelParams &params, const PathSet &paths);

    /// sample_paths followed by synthesize_channel.
    ComplexTensor3 generate_channel(const ChannelParams &params, Rng &rng);

    // ---------- channel dump ----------
    //
    // Binary, little-endian:
    //   magic "HBFCHAN1" (8 bytes)
    //   u64 dim1, dim2, dim3, seed
    //   u64 n_tx, n_rx, n_subcarriers, n_clusters, n_rays
    //   f64 angular_spread_deg, spacing
    //   dim1*dim2*dim3 pairs of f64 (re, im), in tensor storage order
    // Values are copied bit for bit, so a write/read cycle is exact.

    struct ChannelDump
    {
        std::uint64_t seed = 0;
        ChannelParams params;
        ComplexTensor3 channel;

        bool operator==(const ChannelDump &) const = default;
    };

    void write_channel_dump(std::ostream &out, const ChannelDump &dump);
    ChannelDump read_channel_dump(std::istream &in);
}
