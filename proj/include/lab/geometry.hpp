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
#include <cstddef>

#include "lab/errors.hpp"

namespace lab {

/// Point in the plane (identified with the complex plane where convenient).
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }
    double norm_sq() const { return x * x + y * y; }
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

/// Dense symmetric matrix for dimensions 1..3; used for covariance targets.
struct MatrixD {
    int dim = 0;
    std::array<double, 9> m{};  // row-major, dim x dim

    MatrixD() = default;
    explicit MatrixD(int d) : dim(d) {
        if (d < 1 || d > 3) throw DimensionError("MatrixD supports dimensions 1..3");
    }

    static MatrixD identity(int d, double scale = 1.0) {
        MatrixD out(d);
        for (int i = 0; i < d; ++i) out(i, i) = scale;
        return out;
    }

    double& operator()(int i, int j) { return m[static_cast<std::size_t>(i * dim + j)]; }
    double operator()(int i, int j) const { return m[static_cast<std::size_t>(i * dim + j)]; }

    MatrixD scaled(double s) const {
        MatrixD out = *this;
        for (auto& v : out.m) v *= s;
        return out;
    }

    MatrixD& operator+=(const MatrixD& other) {
        if (other.dim != dim) throw DimensionError("matrix dimension mismatch");
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += other.m[i];
        return *this;
    }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < dim; ++i) t += (*this)(i, i);
        return t;
    }

    double det() const {
        const auto& a = *this;
        switch (dim) {
            case 1:
                return a(0, 0);
            case 2:
                return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
            case 3:
                return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                       a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                       a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
            default:
                throw DimensionError("MatrixD::det: unsupported dimension");
        }
    }

    MatrixD inverse() const {
        const double d = det();
        if (!(std::abs(d) > 0.0)) throw DomainError("MatrixD::inverse: singular matrix");
        MatrixD out(dim);
        const auto& a = *this;
        switch (dim) {
            case 1:
                out(0, 0) = 1.0 / d;
                break;
            case 2:
                out(0, 0) = a(1, 1) / d;
                out(0, 1) = -a(0, 1) / d;
                out(1, 0) = -a(1, 0) / d;
                out(1, 1) = a(0, 0) / d;
                break;
            case 3: {
                out(0, 0) = (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) / d;
                out(0, 1) = (a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2)) / d;
                out(0, 2) = (a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1)) / d;
                out(1, 0) = (a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2)) / d;
                out(1, 1) = (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) / d;
                out(1, 2) = (a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2)) / d;
                out(2, 0) = (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)) / d;
                out(2, 1) = (a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1)) / d;
                out(2, 2) = (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) / d;
                break;
            }
            default:
                throw DimensionError("MatrixD::inverse: unsupported dimension");
        }
        return out;
    }
};

}  // namespace lab
