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

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pvqa/linalg.h"
#include "pvqa/toeplitz.h"

namespace pvqa {

/// Per-site operators appearing in the d-dimensional decompositions. X~ is the
/// anti-diagonal permutation, Z~ = diag(-1, 1, ..., 1, -1). Composite letters are
/// operator products read left to right (LX~Z~ = L * X~ * Z~).
enum class Letter {
    kI,
    kL,
    kLinv,
    kL2,
    kLinv2,
    kX,
    kZ,
    kZ2,
    kXZ,
    kLX,
    kXL,
    kLinvX,
    kXLinv,
    kLXZ,
    kXZL,
    kLinvXZ,
    kXZLinv,
};

std::string_view letter_name(Letter letter);
Letter letter_from_name(std::string_view name);
/// The letter whose matrix is the adjoint. Uses X~Z~X~ = Z~, hence Z~X~ = X~Z~.
Letter adjoint_letter(Letter letter);

/// Primitive factors a letter is built from.
struct LetterFactor {
    enum class Kind { kShift, kFlip, kEdgeSign };
    Kind kind;
    int power = 0;  // shift power for kShift
};

/// Factors in operator order (leftmost first); the rightmost acts first on a ket.
std::vector<LetterFactor> letter_factors(Letter letter);
DenseMatrix letter_matrix(Letter letter, std::size_t n);

/// Toeplitz band evaluated through its circulant embedding.
struct ToeplitzBand {
    ToeplitzSpec spec;
};

enum class PairKind {
    kDiagonal,       // |i><i| + |j><j|, or |i><i| alone when i == j
    kSymmetric,      // |i><j| + |j><i|
    kAntisymmetric,  // i|i><j| - i|j><i|
};

/// Sparse Hermitian matrix supported on (at most) two basis states.
struct ProjectorPair {
    std::size_t first = 0;
    std::size_t second = 0;
    PairKind kind = PairKind::kDiagonal;

    std::vector<SparseEntry> entries() const;
    bool operator==(const ProjectorPair &) const = default;
};

/// Tensor product over the d grid axes; sites[0] is the most significant register.
struct TensorWord {
    std::vector<Letter> sites;

    bool is_identity() const;
    bool operator==(const TensorWord &) const = default;
};

using OperatorDescriptor = std::variant<ToeplitzBand, ProjectorPair, TensorWord>;

/// One summand. When paired_with_adjoint is set the term is c (W + W^dagger), which
/// needs only the single bracket <W> (the other is its complex conjugate).
struct DecompositionTerm {
    Complex coefficient;
    OperatorDescriptor op;
    bool paired_with_adjoint = false;
    std::string label;
};

/// <b|A|psi> style lists (transition) versus <psi|A^2|psi> style (expectation).
/// The identity costs a circuit in the former (<b|psi>) and nothing in the latter.
enum class BracketKind { kTransition, kExpectation };

struct TermList {
    BracketKind kind = BracketKind::kTransition;
    std::size_t n = 0;       // grid points per axis
    unsigned dimension = 1;  // number of axes
    std::string target;
    std::vector<DecompositionTerm> terms;

    std::size_t total_size() const;
};

struct OperatorDecomposition {
    TermList a;
    TermList a_squared;
};

/// A' = T^1 and A'^2 = T^2 - (|0><0| + |n-1><n-1|).
OperatorDecomposition decompose_dirichlet_1d(std::size_t n);

/// A~ = T^1 - c|0><0| - d|n-1><n-1| and
/// A~^2 = T^2 - (4c+1-c^2)|0><0| - (4d+1-d^2)|n-1><n-1| + c(|0><1|+|1><0|)
///        + d(|n-2><n-1|+|n-1><n-2|).
/// Zero-coefficient terms are dropped.
OperatorDecomposition decompose_unified_1d(std::size_t n, double c, double d);

/// 2d I + sum over sites of (-L - L^{-1} + X~/2 - X~Z~/2): 4d + 1 terms.
TermList decompose_dirichlet_dd(unsigned dimension, std::size_t n);

/// (4d^2 + 9d/4) I, the twelve same-site brackets per site, and for every pair of
/// sites the 24 words U1 (x) U2 with U1, U2 drawn from {2I, -L, -L^{-1}, X~/2,
/// -X~Z~/2} and at most one identity. 12 d^2 brackets in total.
TermList decompose_dirichlet_dd_squared(unsigned dimension, std::size_t n);

/// Single-band transition list for a banded Toeplitz T.
TermList decompose_toeplitz(const ToeplitzSpec &spec);

/// T^dagger T as the Gram band minus its boundary corrections (expectation list).
TermList decompose_toeplitz_gram(const ToeplitzSpec &spec);

/// Dense operator of one descriptor on a total space of n^dimension.
DenseMatrix descriptor_to_dense(const OperatorDescriptor &op, std::size_t n, unsigned dimension);

/// Sum of coefficient * operator over the list.
DenseMatrix reconstruct_dense(const TermList &list);

/// Bracket evaluations the list implies (see BracketKind for the identity rule;
/// Toeplitz bands expand to one bracket per offset, with +l/-l sharing one bracket
/// in expectation lists when t_{-l} = conj(t_l)).
std::size_t count_terms(const TermList &list);

/// Number of matrix summands, ignoring a pure identity in expectation lists.
std::size_t count_matrix_terms(const TermList &list);

/// Lowest qubit index of the register holding `site` (site 0 is most significant).
unsigned site_qubit_offset(unsigned site, unsigned dimension, unsigned qubits_per_axis);

}  // namespace pvqa
