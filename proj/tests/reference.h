// Copyright 2026 The pvqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference constructions shared by the test binaries. Nothing
// here calls into the library's own builders.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "pvqa/linalg.h"

namespace pvqa::testing {

using Mat = std::vector<std::vector<Complex>>;

inline Mat zeros(std::size_t r, std::size_t c) {
    return Mat(r, std::vector<Complex>(c, 0.0));
}

inline Mat eye(std::size_t n) {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Mat mul(const Mat &a, const Mat &b) {
    Mat out = zeros(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t k = 0; k < b.size(); k++) {
            for (std::size_t j = 0; j < b[0].size(); j++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline Mat add(const Mat &a, const Mat &b, Complex s = 1.0) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < a[0].size(); j++) {
            out[i][j] += s * b[i][j];
        }
    }
    return out;
}

inline Mat kron_ref(const Mat &a, const Mat &b) {
    Mat out = zeros(a.size() * b.size(), a[0].size() * b[0].size());
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = 0; j < a[0].size(); j++)
            for (std::size_t k = 0; k < b.size(); k++)
                for (std::size_t l = 0; l < b[0].size(); l++) out[i * b.size() + k][j * b[0].size() + l] = a[i][j] * b[k][l];
    return out;
}

inline Mat dagger(const Mat &a) {
    Mat out = zeros(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); i++)
        for (std::size_t j = 0; j < a[0].size(); j++) out[j][i] = std::conj(a[i][j]);
    return out;
}

inline double diff(const DenseMatrix &m, const Mat &ref) {
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.size(); i++)
        for (std::size_t j = 0; j < ref[0].size(); j++) worst = std::max(worst, std::abs(m(i, j) - ref[i][j]));
    if (m.rows() != ref.size() || m.cols() != ref[0].size()) {
        return INFINITY;
    }
    return worst;
}

// F[j][k] = omega^{jk} / sqrt(n), omega = exp(2 pi i / n).
inline Mat dft_ref(std::size_t n) {
    Mat f = zeros(n, n);
    for (std::size_t j = 0; j < n; j++)
        for (std::size_t k = 0; k < n; k++)
            f[j][k] = std::polar(1.0 / std::sqrt(double(n)), 2.0 * std::numbers::pi * double(j * k % n) / double(n));
    return f;
}

// L|j> = |j + p mod n>.
inline Mat shift_ref(std::size_t n, long p) {
    Mat m = zeros(n, n);
    const long nn = static_cast<long>(n);
    for (long j = 0; j < nn; j++) {
        m[((j + p) % nn + nn) % nn][j] = 1.0;
    }
    return m;
}

// tridiag(-1, 2, -1) with the corner entries lowered by c and d.
inline Mat poisson_ref(std::size_t n, double c = 0.0, double d = 0.0) {
    Mat m = zeros(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m[i][i] = 2.0;
        if (i > 0) m[i][i - 1] = -1.0;
        if (i + 1 < n) m[i][i + 1] = -1.0;
    }
    m[0][0] -= c;
    m[n - 1][n - 1] -= d;
    return m;
}

// sum_s I (x) .. (x) A1 (x) .. (x) I with site 0 leftmost.
inline Mat poisson_dd_ref(std::size_t n, unsigned dim) {
    std::size_t total = 1;
    for (unsigned s = 0; s < dim; s++) total *= n;
    Mat out = zeros(total, total);
    for (unsigned s = 0; s < dim; s++) {
        Mat term = {{1.0}};
        for (unsigned t = 0; t < dim; t++) term = kron_ref(term, t == s ? poisson_ref(n) : eye(n));
        out = add(out, term);
    }
    return out;
}

inline std::vector<Complex> random_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    double norm = 0.0;
    for (auto &z : v) {
        z = {g(rng), g(rng)};
        norm += std::norm(z);
    }
    for (auto &z : v) z /= std::sqrt(norm);
    return v;
}

inline std::vector<Complex> random_real_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    double norm = 0.0;
    for (auto &z : v) {
        z = g(rng);
        norm += std::norm(z);
    }
    for (auto &z : v) z /= std::sqrt(norm);
    return v;
}

inline Complex bracket_ref(const std::vector<Complex> &l, const Mat &m, const std::vector<Complex> &r) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < m.size(); i++)
        for (std::size_t j = 0; j < m[0].size(); j++) acc += std::conj(l[i]) * m[i][j] * r[j];
    return acc;
}

inline std::vector<Complex> apply_ref(const Mat &m, const std::vector<Complex> &v) {
    std::vector<Complex> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); i++)
        for (std::size_t j = 0; j < v.size(); j++) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace pvqa::testing
