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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace lab::fft {

using cd = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Forward DFT plan with the e^{-2 pi i k m / n} kernel.
///
/// Power-of-two sizes use an iterative radix-2 transform; other sizes go
/// through Bluestein's chirp-z algorithm on a padded radix-2 transform.
/// Plans are immutable after construction and safe to share across threads.
class Fft {
  public:
    explicit Fft(std::size_t n);

    std::size_t size() const { return n_; }

    /// In-place forward transform; requires a power-of-two size.
    void forward_inplace(std::span<cd> x) const;

    /// Forward transform of any size.
    std::vector<cd> forward(std::span<const cd> x) const;

  private:
    void radix2(std::span<cd> x, bool inverse) const;

    std::size_t n_ = 0;
    // radix-2 state (n power of two)
    std::vector<cd> twiddle_;            // e^{-2 pi i j / n}, j < n/2
    std::vector<std::uint32_t> bitrev_;  // bit-reversal permutation
    // Bluestein state (general n)
    std::size_t m_ = 0;       // padded power-of-two convolution length
    std::vector<cd> chirp_;   // e^{-i pi m^2 / n}
    std::vector<cd> bhat_;    // transform of the chirp filter
    std::unique_ptr<Fft> sub_;
};

/// O(n^2) direct evaluation of the same transform. This is the serial
/// reference used by the tests and the benchmark; keep it independent of
/// the fast path.
std::vector<cd> forward_direct(std::span<const cd> x);

}  // namespace lab::fft
