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

#include "pvqa/toeplitz.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "pvqa/error.h"

namespace pvqa {

unsigned polylog_band_limit(std::size_t n) {
    const unsigned q = log2_exact(n);
    return 2 * q * q;
}

ToeplitzSpec ToeplitzSpec::with_band(std::size_t n, unsigned band, const std::map<int, Complex> &coeffs,
                                     Guard guard) {
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::kInvalidArgument, "Toeplitz size must be a power of two");
    }
    if (band >= n && !(n == 1 && band == 0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "band " + std::to_string(band) + " must be smaller than n = " + std::to_string(n));
    }
    if (guard == Guard::kEnforce && band > polylog_band_limit(n)) {
        throw Error(ErrorCode::kBandLimit, "band " + std::to_string(band) + " exceeds the polylog guard " +
                                               std::to_string(polylog_band_limit(n)) + " for n = " +
                                               std::to_string(n));
    }
    ToeplitzSpec spec;
    spec.n_ = n;
    spec.band_ = band;
    spec.coeffs_.assign(2 * band + 1, Complex{0.0, 0.0});
    for (const auto &[offset, value] : coeffs) {
        if (static_cast<unsigned>(std::abs(offset)) > band) {
            if (value != Complex{0.0, 0.0}) {
                throw Error(ErrorCode::kNotBanded, "offset " + std::to_string(offset) + " lies outside the band");
            }
            continue;
        }
        spec.coeffs_[static_cast<std::size_t>(offset + static_cast<int>(band))] = value;
    }
    return spec;
}

ToeplitzSpec::ToeplitzSpec(std::size_t n, const std::map<int, Complex> &coeffs) {
    unsigned band = 0;
    for (const auto &[offset, value] : coeffs) {
        if (value != Complex{0.0, 0.0}) {
            band = std::max(band, static_cast<unsigned>(std::abs(offset)));
        }
    }
    *this = with_band(n, band, coeffs);
}

Complex ToeplitzSpec::coefficient(int offset) const {
    if (static_cast<unsigned>(std::abs(offset)) > band_) {
        return {0.0, 0.0};
    }
    return coeffs_[static_cast<std::size_t>(offset + static_cast<int>(band_))];
}

std::vector<int> ToeplitzSpec::nonzero_offsets() const {
    std::vector<int> out;
    for (int l = -static_cast<int>(band_); l <= static_cast<int>(band_); l++) {
        if (coefficient(l) != Complex{0.0, 0.0}) {
            out.push_back(l);
        }
    }
    return out;
}

bool ToeplitzSpec::is_hermitian() const {
    for (int l = 0; l <= static_cast<int>(band_); l++) {
        if (std::abs(coefficient(l) - std::conj(coefficient(-l))) > 1e-15) {
            return false;
        }
    }
    return true;
}

ToeplitzSpec ToeplitzSpec::scaled(Complex s) const {
    ToeplitzSpec out = *this;
    for (auto &c : out.coeffs_) {
        c *= s;
    }
    return out;
}

DenseMatrix CirculantSpec::to_dense() const {
    if (first_column.size() != n) {
        throw Error(ErrorCode::kLengthMismatch, "circulant first column length differs from n");
    }
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            m(i, j) = first_column[(i + n - j) % n];
        }
    }
    return m;
}

std::vector<Complex> CirculantSpec::spectrum() const {
    std::vector<Complex> lambda(n, Complex{0.0, 0.0});
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = 0; k < n; k++) {
            const double angle =
                2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
            lambda[j] += first_column[k] * std::polar(1.0, angle);
        }
    }
    return lambda;
}

DenseMatrix PhaseSpectrum::to_dense() const {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        double angle = 0.0;
        for (std::size_t j = 0; j < phases.size(); j++) {
            if ((i >> j) & 1) {
                angle += phases[j];
            }
        }
        m(i, i) = std::polar(1.0, angle);
    }
    return m;
}

DenseMatrix toeplitz_to_dense(const ToeplitzSpec &spec) {
    const std::size_t n = spec.size();
    DenseMatrix m(n, n);
    const long band = spec.band();
    for (std::size_t i = 0; i < n; i++) {
        for (long l = -band; l <= band; l++) {
            const long k = static_cast<long>(i) - l;
            if (k >= 0 && k < static_cast<long>(n)) {
                m(i, static_cast<std::size_t>(k)) = spec.coefficient(static_cast<int>(l));
            }
        }
    }
    return m;
}

CirculantSpec embed_in_circulant(const ToeplitzSpec &spec) {
    const std::size_t n = spec.size();
    CirculantSpec c{2 * n, std::vector<Complex>(2 * n, Complex{0.0, 0.0})};
    for (std::size_t m = 0; m < n; m++) {
        c.first_column[m] = spec.coefficient(static_cast<int>(m));
    }
    for (std::size_t m = 1; m < n; m++) {
        c.first_column[2 * n - m] = spec.coefficient(-static_cast<int>(m));
    }
    return c;
}

std::vector<CirculantTerm> circulant_expectation_terms(const CirculantSpec &spec) {
    const std::size_t m = spec.n;
    if (spec.first_column.size() != m || m == 0) {
        throw Error(ErrorCode::kLengthMismatch, "circulant first column length differs from n");
    }
    if (m > 1 && m % 2 == 0 && spec.first_column[m / 2] != Complex{0.0, 0.0}) {
        throw Error(ErrorCode::kNotBanded, "circulant has a non-zero coefficient at offset n/2");
    }
    std::vector<CirculantTerm> terms;
    // Emit in the order 0, +1, -1, +2, -2, ... so paired offsets sit together.
    if (spec.first_column[0] != Complex{0.0, 0.0}) {
        terms.push_back({spec.first_column[0], 0});
    }
    for (std::size_t l = 1; 2 * l < m; l++) {
        if (spec.first_column[l] != Complex{0.0, 0.0}) {
            terms.push_back({spec.first_column[l], static_cast<int>(l)});
        }
        if (spec.first_column[m - l] != Complex{0.0, 0.0}) {
            terms.push_back({spec.first_column[m - l], -static_cast<int>(l)});
        }
    }
    return terms;
}

PhaseSpectrum phase_spectrum(std::size_t n, long power) {
    const unsigned q = log2_exact(n);
    PhaseSpectrum s{n, power, std::vector<double>(q, 0.0)};
    const long long reduced = ((static_cast<long long>(power) % static_cast<long long>(n)) + n) % n;
    for (unsigned j = 0; j < q; j++) {
        // l * theta_j = 2 pi (l 2^j mod n) / n, computed exactly in integers.
        const unsigned long long e = (static_cast<unsigned long long>(reduced) << j) % n;
        s.phases[j] = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
    }
    return s;
}

std::vector<Complex> classical_toeplitz_matvec(const ToeplitzSpec &spec, std::span<const Complex> v) {
    const std::size_t n = spec.size();
    if (v.size() != n) {
        throw Error(ErrorCode::kDimensionMismatch, "vector length does not match Toeplitz size");
    }
    std::vector<Complex> out(n, Complex{0.0, 0.0});
    const long band = spec.band();
    for (std::size_t i = 0; i < n; i++) {
        for (long l = -band; l <= band; l++) {
            const long k = static_cast<long>(i) - l;
            if (k >= 0 && k < static_cast<long>(n)) {
                out[i] += spec.coefficient(static_cast<int>(l)) * v[static_cast<std::size_t>(k)];
            }
        }
    }
    return out;
}

ToeplitzSpec gram_band(const ToeplitzSpec &spec) {
    const int band = static_cast<int>(spec.band());
    std::map<int, Complex> g;
    for (int m = -2 * band; m <= 2 * band; m++) {
        Complex acc{0.0, 0.0};
        for (int p = -band; p <= band; p++) {
            acc += std::conj(spec.coefficient(p)) * spec.coefficient(p + m);
        }
        if (acc != Complex{0.0, 0.0}) {
            g[m] = acc;
        }
    }
    const unsigned out_band = std::min<unsigned>(2 * spec.band(), spec.size() > 0 ? spec.size() - 1 : 0);
    // Offsets at or beyond n never appear in an n x n matrix.
    std::map<int, Complex> clipped;
    for (const auto &[m, v] : g) {
        if (static_cast<unsigned>(std::abs(m)) <= out_band) {
            clipped[m] = v;
        }
    }
    return ToeplitzSpec::with_band(spec.size(), out_band, clipped, ToeplitzSpec::Guard::kSkip);
}

std::vector<SparseEntry> gram_boundary_corrections(const ToeplitzSpec &spec) {
    const long n = static_cast<long>(spec.size());
    const long band = spec.band();
    std::vector<SparseEntry> out;
    // Entry (i, j) of toeplitz(g) sums over every p in [-K, K]; the true Gram only
    // over rows k = p + i inside [0, n). The difference is the missing rows.
    auto correction = [&](long i, long j) {
        Complex acc{0.0, 0.0};
        for (long p = -band; p <= band; p++) {
            const long k = p + i;
            if (k < 0 || k >= n) {
                acc += std::conj(spec.coefficient(static_cast<int>(p))) *
                       spec.coefficient(static_cast<int>(p + i - j));
            }
        }
        return acc;
    };
    std::vector<long> rows;
    for (long i = 0; i < std::min(band, n); i++) {
        rows.push_back(i);
    }
    for (long i = std::max(n - band, band); i < n; i++) {
        rows.push_back(i);
    }
    for (long i : rows) {
        for (long j : rows) {
            if (std::abs(i - j) > 2 * band) {
                continue;
            }
            const Complex v = correction(i, j);
            if (v != Complex{0.0, 0.0}) {
                out.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), v});
            }
        }
    }
    return out;
}

}  // namespace pvqa
