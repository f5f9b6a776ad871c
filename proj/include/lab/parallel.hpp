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

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lab::par {

/// Execution backend for the Monte Carlo kernels. `serial` is the reference
/// implementation; `openmp` must produce bit-identical results.
enum class Exec { serial, openmp };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

/// Items per deterministic chunk. Each chunk is accumulated serially in
/// index order and chunk partials are combined in chunk order, so floating
/// point results do not depend on the thread count or schedule.
inline constexpr std::uint64_t kChunk = 4096;

/// Deterministic reduction of k accumulators over items [0, n).
///
/// `make_ws` builds a per-thread workspace (scratch buffers); `f(i, ws, acc)`
/// must be a pure function of i apart from overwriting its workspace.
template <class MakeWs, class F>
std::vector<double> chunked_sum_ws(std::uint64_t n, std::size_t k, Exec exec, MakeWs&& make_ws,
                                   F&& f) {
    const std::uint64_t nchunks = (n + kChunk - 1) / kChunk;
    std::vector<double> partials(static_cast<std::size_t>(nchunks) * k, 0.0);

    auto run_chunk = [&](std::uint64_t c, auto& ws) {
        double* acc = partials.data() + static_cast<std::size_t>(c) * k;
        const std::uint64_t lo = c * kChunk;
        const std::uint64_t hi = std::min(n, lo + kChunk);
        for (std::uint64_t i = lo; i < hi; ++i) f(i, ws, acc);
    };

#ifdef _OPENMP
    if (exec == Exec::openmp) {
#pragma omp parallel
        {
            auto ws = make_ws();
#pragma omp for schedule(dynamic)
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c)
                run_chunk(static_cast<std::uint64_t>(c), ws);
        }
    } else
#else
    (void)exec;
#endif
    {
        auto ws = make_ws();
        for (std::uint64_t c = 0; c < nchunks; ++c) run_chunk(c, ws);
    }

    std::vector<double> out(k, 0.0);
    for (std::uint64_t c = 0; c < nchunks; ++c)
        for (std::size_t j = 0; j < k; ++j) out[j] += partials[static_cast<std::size_t>(c) * k + j];
    return out;
}

/// Deterministic reduction without per-thread workspace.
template <class F>  // void f(std::uint64_t i, double* acc)
std::vector<double> chunked_sum(std::uint64_t n, std::size_t k, Exec exec, F&& f) {
    return chunked_sum_ws(
        n, k, exec, [] { return 0; }, [&](std::uint64_t i, int&, double* acc) { f(i, acc); });
}

/// out[i] = f(i). Deterministic by construction (no reduction).
template <class T, class F>
void fill(std::span<T> out, Exec exec, F&& f) {
#ifdef _OPENMP
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(out.size()); ++i)
            out[static_cast<std::size_t>(i)] = f(static_cast<std::uint64_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::uint64_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(i)] = f(i);
}

/// Integer count accumulation over items [0, n): f(i, counts) increments
/// entries of a k-sized array. Per-thread partial counts are merged by
/// integer addition, which is exact and order-independent.
template <class F>
void counts(std::uint64_t n, std::size_t k, Exec exec, std::uint64_t* out, F&& f) {
#ifdef _OPENMP
    if (exec == Exec::openmp) {
#pragma omp parallel
        {
            std::vector<std::uint64_t> local(k, 0);
#pragma omp for schedule(static) nowait
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
                f(static_cast<std::uint64_t>(i), local.data());
#pragma omp critical(lab_par_counts_merge)
            {
                for (std::size_t j = 0; j < k; ++j) out[j] += local[j];
            }
        }
        return;
    }
#else
    (void)exec;
#endif
    for (std::uint64_t i = 0; i < n; ++i) f(i, out);
}

}  // namespace lab::par
