// SPDX-License-Identifier: Apache-2.0
//
// circulant-lab  Monte Carlo laboratory for circulant LTI channels under
// random phases and delocalisation of weighted circle sums
// Copyright (C) 2026 The circulant-lab authors
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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace lab::rng {

/// Philox 4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Counter-based generation is what makes the Monte Carlo kernels
/// reproducible under parallel execution: a stream is a pure function of
/// (key, stream id), so trial i can be generated by any thread, in any
/// order, and always yields the same values.
class Philox4x32 {
  public:
    Philox4x32() = default;

    Philox4x32(std::uint64_t key, std::uint64_t stream) {
        key_ = {static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)};
        ctr_ = {0u, 0u, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    }

    /// One 10-round Philox block: 4x32 bits from (counter, key).
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> c,
                                              std::array<std::uint32_t, 2> k) {
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ULL * c[0];
            const std::uint64_t p1 = 0xCD9E8D57ULL * c[2];
            c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0],
                 static_cast<std::uint32_t>(p1),
                 static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1],
                 static_cast<std::uint32_t>(p0)};
            k[0] += 0x9E3779B9u;
            k[1] += 0xBB67AE85u;
        }
        return c;
    }

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = block(ctr_, key_);
            pos_ = 0;
            if (++ctr_[0] == 0) ++ctr_[1];  // 2^64 blocks per stream
        }
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    /// Uniform on [0,1) with 53-bit resolution.
    double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform angle in [0, 2*pi); the upper bound is excluded by construction.
    double angle() { return 2.0 * std::numbers::pi * u01(); }

    /// Uniform point on the unit circle.
    std::complex<double> unit_circle() {
        const double t = angle();
        return {std::cos(t), std::sin(t)};
    }

    /// Circularly symmetric complex Gaussian, E|z|^2 = 1
    /// (variance 1/2 per real coordinate).
    std::complex<double> cgaussian() {
        const double r = std::sqrt(-std::log(1.0 - u01()));
        const double t = angle();
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Standard real Gaussian N(0,1). Consumes two uniforms per call.
    double gaussian() {
        const double r = std::sqrt(-2.0 * std::log(1.0 - u01()));
        return r * std::cos(angle());
    }

  private:
    std::array<std::uint32_t, 2> key_{};
    std::array<std::uint32_t, 4> ctr_{};
    std::array<std::uint32_t, 4> buf_{};
    unsigned pos_ = 4;
};

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

/// A family of independent substreams derived from (master seed, label).
/// Substream i is a pure function of (seed, label, i); this is the seeding
/// contract that keeps results identical across parallel schedules.
class StreamFamily {
  public:
    StreamFamily(std::uint64_t seed, std::string_view label)
        : key_(splitmix64(seed ^ splitmix64(fnv1a64(label)))) {}

    Philox4x32 at(std::uint64_t index) const { return Philox4x32(key_, index); }

    StreamFamily sub(std::string_view suffix) const {
        StreamFamily out = *this;
        out.key_ = splitmix64(key_ ^ splitmix64(fnv1a64(suffix)));
        return out;
    }

  private:
    std::uint64_t key_;
};

inline Philox4x32 substream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    return StreamFamily(seed, label).at(index);
}

}  // namespace lab::rng
