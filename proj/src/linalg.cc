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

#include "pvqa/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pvqa/error.h"

namespace pvqa {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return "InvalidArgument";
        case ErrorCode::kDimensionOverflow:
            return "DimensionOverflow";
        case ErrorCode::kDimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::kSingularMatrix:
            return "SingularMatrix";
        case ErrorCode::kZeroVector:
            return "ZeroVector";
        case ErrorCode::kWrongKind:
            return "WrongKind";
        case ErrorCode::kUnsupportedProblem:
            return "UnsupportedProblem";
        case ErrorCode::kNotBanded:
            return "NotBanded";
        case ErrorCode::kBandLimit:
            return "BandLimit";
        case ErrorCode::kNonUnitaryBlock:
            return "NonUnitaryBlock";
        case ErrorCode::kShotCountZero:
            return "ShotCountZero";
        case ErrorCode::kUnsupportedPattern:
            return "UnsupportedPattern";
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kZeroImage:
            return "ZeroImage";
    }
    return "Unknown";
}

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows > kMaxDenseDim || cols > kMaxDenseDim) {
        throw Error(ErrorCode::kDimensionOverflow,
                    "dense matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds the " + std::to_string(kMaxDenseDim) + " cap");
    }
}

void check_same_shape(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::kDimensionMismatch, "matrix shapes differ");
    }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    data_.assign(rows * cols, Complex{0.0, 0.0});
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_dims(rows, cols);
    if (data_.size() != rows * cols) {
        throw Error(ErrorCode::kDimensionMismatch, "entry count does not match rows x cols");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> diag) {
    DenseMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "vector length does not match matrix columns");
    }
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        Complex acc{0.0, 0.0};
        const Complex *row = &data_[r * cols_];
        for (std::size_t c = 0; c < cols_; c++) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &other) {
    check_same_shape(*this, other);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &other) {
    check_same_shape(*this, other);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(Complex scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
    a += b;
    return a;
}

DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) {
    a -= b;
    return a;
}

DenseMatrix operator*(Complex s, DenseMatrix a) {
    a *= s;
    return a;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ in matrix product");
    }
    DenseMatrix out(a.rows(), b.cols());
    const std::size_t m = b.cols();
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < m; j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    check_same_shape(a, b);
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

bool is_unitary(const DenseMatrix &u, double tol) {
    if (!u.is_square()) {
        return false;
    }
    return max_abs_diff(u.adjoint() * u, DenseMatrix::identity(u.rows())) <= tol;
}

bool is_hermitian(const DenseMatrix &a, double tol) {
    return a.is_square() && max_abs_diff(a, a.adjoint()) <= tol;
}

DenseMatrix matrix_power(const DenseMatrix &a, unsigned power) {
    if (!a.is_square()) {
        throw Error(ErrorCode::kDimensionMismatch, "matrix_power needs a square matrix");
    }
    DenseMatrix result = DenseMatrix::identity(a.rows());
    for (unsigned k = 0; k < power; k++) {
        result = result * a;
    }
    return result;
}

bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

unsigned log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) {
        throw Error(ErrorCode::kInvalidArgument, std::to_string(n) + " is not a power of two");
    }
    unsigned q = 0;
    while ((std::size_t{1} << q) < n) {
        q++;
    }
    return q;
}

StateVector::StateVector(unsigned num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits, Complex{0.0, 0.0}) {
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    StateVector s;
    s.num_qubits_ = log2_exact(amplitudes.size());
    s.amplitudes_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::basis(unsigned num_qubits, std::size_t index) {
    StateVector s(num_qubits);
    if (index >= s.dimension()) {
        throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
    }
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

StateVector StateVector::uniform(unsigned num_qubits) {
    StateVector s(num_qubits);
    const double a = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
    std::fill(s.amplitudes_.begin(), s.amplitudes_.end(), Complex{a, 0.0});
    return s;
}

double StateVector::norm() const {
    double acc = 0.0;
    for (const auto &a : amplitudes_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.dimension() != dimension()) {
        throw Error(ErrorCode::kDimensionMismatch, "inner product of states with different sizes");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amplitudes_.size(); i++) {
        acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    }
    return acc;
}

StateVector StateVector::embedded_with_zero_msb() const {
    std::vector<Complex> amps(2 * dimension(), Complex{0.0, 0.0});
    std::copy(amplitudes_.begin(), amplitudes_.end(), amps.begin());
    return from_amplitudes(std::move(amps));
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    check_dims(rows, cols);
    DenseMatrix out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); i++) {
        for (std::size_t j = 0; j < a.cols(); j++) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); k++) {
                for (std::size_t l = 0; l < b.cols(); l++) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

std::vector<Complex> dense_solve(const DenseMatrix &a, std::span<const Complex> b) {
    if (!a.is_square() || a.rows() != b.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "dense_solve needs square A and matching b");
    }
    const std::size_t n = a.rows();
    std::vector<Complex> m(a.entries().begin(), a.entries().end());
    std::vector<Complex> x(b.begin(), b.end());
    auto at = [&](std::size_t r, std::size_t c) -> Complex & { return m[r * n + c]; };

    for (std::size_t col = 0; col < n; col++) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; r++) {
            if (std::abs(at(r, col)) > std::abs(at(pivot, col))) {
                pivot = r;
            }
        }
        if (std::abs(at(pivot, col)) < kPivotTolerance) {
            throw Error(ErrorCode::kSingularMatrix,
                        "pivot below tolerance in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; c++) {
                std::swap(at(pivot, c), at(col, c));
            }
            std::swap(x[pivot], x[col]);
        }
        const Complex inv = 1.0 / at(col, col);
        for (std::size_t r = col + 1; r < n; r++) {
            const Complex factor = at(r, col) * inv;
            if (factor == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = col; c < n; c++) {
                at(r, c) -= factor * at(col, c);
            }
            x[r] -= factor * x[col];
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        Complex acc = x[k];
        for (std::size_t c = k + 1; c < n; c++) {
            acc -= at(k, c) * x[c];
        }
        x[k] = acc / at(k, k);
    }
    return x;
}

DenseMatrix dft_matrix(std::size_t n) {
    if (n == 0) {
        throw Error(ErrorCode::kInvalidArgument, "dft_matrix needs n >= 1");
    }
    DenseMatrix f(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; j++) {
        for (std::size_t k = 0; k < n; k++) {
            // Reduce the exponent first so large n keeps full phase accuracy.
            const std::size_t e = (j * k) % n;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
            f(j, k) = std::polar(scale, angle);
        }
    }
    return f;
}

DenseMatrix build_unit_circulant(std::size_t n, ShiftDirection direction) {
    if (n < 2) {
        throw Error(ErrorCode::kInvalidArgument, "unit circulant needs n >= 2");
    }
    DenseMatrix m(n, n);
    for (std::size_t j = 0; j < n; j++) {
        const std::size_t shifted = (j + 1) % n;
        if (direction == ShiftDirection::kDown) {
            m(shifted, j) = 1.0;
        } else {
            m(j, shifted) = 1.0;
        }
    }
    return m;
}

double fidelity(const StateVector &u, const StateVector &v) {
    if (u.num_qubits() != v.num_qubits()) {
        throw Error(ErrorCode::kDimensionMismatch, "fidelity of states with different qubit counts");
    }
    return std::min(1.0, std::abs(u.inner(v)));
}

std::vector<Complex> normalized(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    const double nrm = std::sqrt(acc);
    if (nrm <= 1e-14) {
        throw Error(ErrorCode::kZeroVector, "cannot normalize a vector with norm <= 1e-14");
    }
    std::vector<Complex> out(v.begin(), v.end());
    for (auto &x : out) {
        x /= nrm;
    }
    return out;
}

StateVector normalize(std::span<const Complex> v) {
    return StateVector::from_amplitudes(normalized(v));
}

std::vector<Complex> to_complex(std::span<const double> v) {
    return std::vector<Complex>(v.begin(), v.end());
}

}  // namespace pvqa
