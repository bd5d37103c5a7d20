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

#include <map>
#include <span>
#include <vector>

#include "pvqa/linalg.h"

namespace pvqa {

/// Banded Toeplitz matrix T with entry (i, k) = t_{i-k} and t_l = 0 for |l| > K.
class ToeplitzSpec {
   public:
    ToeplitzSpec() = default;

    /// `coeffs` maps offsets l to t_l. K is the largest |l| present. Requires n a
    /// power of two, K < n, and the polylog guard K <= 2 (log2 n)^2.
    ToeplitzSpec(std::size_t n, const std::map<int, Complex> &coeffs);

    enum class Guard { kEnforce, kSkip };

    /// Same, but with an explicit band K (coefficients beyond K must be absent).
    /// kSkip is for derived bands such as the Gram band 2K.
    static ToeplitzSpec with_band(std::size_t n, unsigned band, const std::map<int, Complex> &coeffs,
                                  Guard guard = Guard::kEnforce);

    std::size_t size() const noexcept {
        return n_;
    }
    unsigned band() const noexcept {
        return band_;
    }
    /// t_l, zero outside [-K, K].
    Complex coefficient(int offset) const;
    /// Offsets whose coefficient is non-zero, ascending.
    std::vector<int> nonzero_offsets() const;

    bool is_hermitian() const;
    ToeplitzSpec scaled(Complex s) const;

    bool operator==(const ToeplitzSpec &) const = default;

   private:
    std::size_t n_ = 0;
    unsigned band_ = 0;
    std::vector<Complex> coeffs_;  // index l + K
};

/// Largest band accepted for size n: the stand-in for K in O(polylog n).
unsigned polylog_band_limit(std::size_t n);

/// Circulant C with entry (i, j) = c_{(i-j) mod n}.
struct CirculantSpec {
    std::size_t n = 0;
    std::vector<Complex> first_column;

    DenseMatrix to_dense() const;
    /// Eigenvalues lambda_j = sum_k c_k omega^{jk} = sqrt(n) (F c)_j, so that
    /// to_dense() == F^{-1} diag(lambda) F.
    std::vector<Complex> spectrum() const;
};

/// One summand c_l L^l of a banded circulant; power is in (-n/2, n/2).
struct CirculantTerm {
    Complex coefficient;
    int power = 0;

    bool operator==(const CirculantTerm &) const = default;
};

/// Per-qubit phases of D^l = diag(omega^{il}) = (x)_j P(l theta_j), theta_j = 2 pi 2^j / n.
struct PhaseSpectrum {
    std::size_t n = 0;
    long power = 0;
    /// phases[j] acts on qubit j (qubit 0 least significant), reduced to [0, 2 pi).
    std::vector<double> phases;

    DenseMatrix to_dense() const;
};

DenseMatrix toeplitz_to_dense(const ToeplitzSpec &spec);

/// Places T as the top-left block of a 2n x 2n circulant.
CirculantSpec embed_in_circulant(const ToeplitzSpec &spec);

/// Decomposes a banded circulant into shifts. Throws kNotBanded when the
/// coefficient at offset n/2 is non-zero (no symmetric window fits).
std::vector<CirculantTerm> circulant_expectation_terms(const CirculantSpec &spec);

PhaseSpectrum phase_spectrum(std::size_t n, long power);

std::vector<Complex> classical_toeplitz_matvec(const ToeplitzSpec &spec, std::span<const Complex> v);

/// Band of the Toeplitz part of T^dagger T: g_m = sum_p conj(t_p) t_{p+m}, band 2K.
/// For Hermitian T this is the self-convolution giving the interior of T^2.
ToeplitzSpec gram_band(const ToeplitzSpec &spec);

/// A single matrix entry.
struct SparseEntry {
    std::size_t row = 0;
    std::size_t col = 0;
    Complex value;
};

/// Entries E with T^dagger T = toeplitz(gram_band(T)) - E. Only the leading and
/// trailing K x K blocks are populated. For A' this is |0><0| + |n-1><n-1|.
std::vector<SparseEntry> gram_boundary_corrections(const ToeplitzSpec &spec);

}  // namespace pvqa
