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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pvqa {

using Complex = std::complex<double>;

/// Largest row/column count any dense oracle object may reach (12 qubits).
inline constexpr std::size_t kMaxDenseDim = 4096;

/// Pivot magnitudes below this are treated as singular by dense_solve.
inline constexpr double kPivotTolerance = 1e-12;

/// Row-major complex matrix. This is the brute-force reference every circuit
/// and decomposition is checked against, so it favours clarity over speed.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    std::span<const Complex> entries() const noexcept {
        return data_;
    }

    DenseMatrix adjoint() const;
    DenseMatrix transpose() const;

    /// Matrix-vector product.
    std::vector<Complex> apply(std::span<const Complex> v) const;

    DenseMatrix &operator+=(const DenseMatrix &other);
    DenseMatrix &operator-=(const DenseMatrix &other);
    DenseMatrix &operator*=(Complex scale);

    bool operator==(const DenseMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b);
DenseMatrix operator*(Complex s, DenseMatrix a);
// Skips zero entries of the left operand, which keeps products of the sparse
// Poisson operators cheap at the 4096 cap.
DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);

/// Largest |a(i,j) - b(i,j)|. Throws kDimensionMismatch on shape mismatch.
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);
bool is_unitary(const DenseMatrix &u, double tol = 1e-12);
bool is_hermitian(const DenseMatrix &a, double tol = 1e-12);

/// Integer power of a square matrix; negative powers are not supported.
DenseMatrix matrix_power(const DenseMatrix &a, unsigned power);

/// Normalised (or normalisable) amplitude vector over num_qubits qubits.
/// Qubit 0 is the least significant bit of the basis index.
class StateVector {
   public:
    /// |0...0> on num_qubits qubits.
    explicit StateVector(unsigned num_qubits = 0);

    /// Wraps raw amplitudes; the length must be a power of two. No rescaling.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);
    static StateVector basis(unsigned num_qubits, std::size_t index);
    /// H^{\otimes n}|0...0>.
    static StateVector uniform(unsigned num_qubits);

    unsigned num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dimension() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    std::span<Complex> mutable_amplitudes() noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }
    Complex &operator[](std::size_t i) {
        return amplitudes_[i];
    }

    double norm() const;
    /// <this|other>.
    Complex inner(const StateVector &other) const;

    /// |0> (x) this: the same amplitudes on one extra most-significant qubit.
    StateVector embedded_with_zero_msb() const;

   private:
    unsigned num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// Gaussian elimination with partial pivoting.
std::vector<Complex> dense_solve(const DenseMatrix &a, std::span<const Complex> b);

/// Unitary DFT, F[j,k] = omega^{jk} / sqrt(n) with omega = exp(+2 pi i / n).
/// With this sign F^{-1} diag(omega^0..omega^{n-1}) F is the down-shift L,
/// and C = F^{-1} diag(sqrt(n) F c) F for any circulant with first column c.
DenseMatrix dft_matrix(std::size_t n);

enum class ShiftDirection { kDown, kUp };

/// kDown: L|j> = |j+1 mod n>. kUp: R = L^T = L^{-1}.
DenseMatrix build_unit_circulant(std::size_t n, ShiftDirection direction);

/// |<u|v>|.
double fidelity(const StateVector &u, const StateVector &v);

std::vector<Complex> normalized(std::span<const Complex> v);
/// Unit-norm state in the direction of v; length must be a power of two.
StateVector normalize(std::span<const Complex> v);

std::vector<Complex> to_complex(std::span<const double> v);

bool is_power_of_two(std::size_t n) noexcept;
/// log2(n) for a power of two; throws kInvalidArgument otherwise.
unsigned log2_exact(std::size_t n);

}  // namespace pvqa
