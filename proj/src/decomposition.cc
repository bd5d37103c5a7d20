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

#include "pvqa/decomposition.h"

#include <array>
#include <functional>
#include <string>

#include "pvqa/error.h"

namespace pvqa {

namespace {

struct LetterInfo {
    Letter letter;
    std::string_view name;
    Letter adjoint;
};

constexpr std::array<LetterInfo, 17> kLetters{{
    {Letter::kI, "I", Letter::kI},
    {Letter::kL, "L", Letter::kLinv},
    {Letter::kLinv, "L^-1", Letter::kL},
    {Letter::kL2, "L^2", Letter::kLinv2},
    {Letter::kLinv2, "L^-2", Letter::kL2},
    {Letter::kX, "X~", Letter::kX},
    {Letter::kZ, "Z~", Letter::kZ},
    {Letter::kZ2, "Z~^2", Letter::kZ2},
    {Letter::kXZ, "X~Z~", Letter::kXZ},
    {Letter::kLX, "LX~", Letter::kXLinv},
    {Letter::kXL, "X~L", Letter::kLinvX},
    {Letter::kLinvX, "L^-1X~", Letter::kXL},
    {Letter::kXLinv, "X~L^-1", Letter::kLX},
    {Letter::kLXZ, "LX~Z~", Letter::kXZLinv},
    {Letter::kXZL, "X~Z~L", Letter::kLinvXZ},
    {Letter::kLinvXZ, "L^-1X~Z~", Letter::kXZL},
    {Letter::kXZLinv, "X~Z~L^-1", Letter::kLXZ},
}};

const LetterInfo &info(Letter letter) {
    for (const auto &entry : kLetters) {
        if (entry.letter == letter) {
            return entry;
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown letter");
}

using Kind = LetterFactor::Kind;

LetterFactor shift(int p) {
    return {Kind::kShift, p};
}
constexpr LetterFactor kFlip{Kind::kFlip, 0};
constexpr LetterFactor kEdge{Kind::kEdgeSign, 0};

// Sparse (row, col, value) triples of an n x n matrix.
std::vector<SparseEntry> nonzeros(const DenseMatrix &m) {
    std::vector<SparseEntry> out;
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            if (m(r, c) != Complex{0.0, 0.0}) {
                out.push_back({r, c, m(r, c)});
            }
        }
    }
    return out;
}

// Calls emit(row, col, value) for every non-zero of the tensor word.
void for_each_word_entry(const TensorWord &word, std::size_t n,
                         const std::function<void(std::size_t, std::size_t, Complex)> &emit) {
    std::vector<std::vector<SparseEntry>> per_site;
    per_site.reserve(word.sites.size());
    for (Letter l : word.sites) {
        per_site.push_back(nonzeros(letter_matrix(l, n)));
    }
    std::function<void(std::size_t, std::size_t, std::size_t, Complex)> rec =
        [&](std::size_t site, std::size_t row, std::size_t col, Complex value) {
            if (site == per_site.size()) {
                emit(row, col, value);
                return;
            }
            for (const auto &e : per_site[site]) {
                rec(site + 1, row * n + e.row, col * n + e.col, value * e.value);
            }
        };
    rec(0, 0, 0, Complex{1.0, 0.0});
}

std::size_t power_of(std::size_t n, unsigned d) {
    std::size_t total = 1;
    for (unsigned k = 0; k < d; k++) {
        if (total > kMaxDenseDim) {
            break;
        }
        total *= n;
    }
    return total;
}

void for_each_entry(const OperatorDescriptor &op, std::size_t n, unsigned dimension,
                    const std::function<void(std::size_t, std::size_t, Complex)> &emit) {
    if (const auto *band = std::get_if<ToeplitzBand>(&op)) {
        if (dimension != 1 || band->spec.size() != n) {
            throw Error(ErrorCode::kDimensionMismatch, "Toeplitz band terms are one-dimensional");
        }
        const DenseMatrix t = toeplitz_to_dense(band->spec);
        for (const auto &e : nonzeros(t)) {
            emit(e.row, e.col, e.value);
        }
    } else if (const auto *pair = std::get_if<ProjectorPair>(&op)) {
        for (const auto &e : pair->entries()) {
            emit(e.row, e.col, e.value);
        }
    } else {
        const auto &word = std::get<TensorWord>(op);
        if (word.sites.size() != dimension) {
            throw Error(ErrorCode::kDimensionMismatch, "tensor word length differs from dimension");
        }
        for_each_word_entry(word, n, emit);
    }
}

TensorWord identity_word(unsigned dimension) {
    return TensorWord{std::vector<Letter>(dimension, Letter::kI)};
}

TensorWord single_site_word(unsigned dimension, unsigned site, Letter letter) {
    TensorWord w = identity_word(dimension);
    w.sites[site] = letter;
    return w;
}

DecompositionTerm band_term(const ToeplitzSpec &spec, std::string label) {
    return {Complex{1.0, 0.0}, ToeplitzBand{spec}, false, std::move(label)};
}

ToeplitzSpec tridiagonal_band(std::size_t n) {
    return ToeplitzSpec(n, {{-1, -1.0}, {0, 2.0}, {1, -1.0}});
}

ToeplitzSpec pentadiagonal_band(std::size_t n) {
    return ToeplitzSpec(n, {{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}});
}

void check_grid(std::size_t n, std::size_t minimum) {
    if (!is_power_of_two(n) || n < minimum) {
        throw Error(ErrorCode::kInvalidArgument,
                    "grid size must be a power of two >= " + std::to_string(minimum));
    }
}

struct WeightedLetter {
    double weight;
    Letter letter;
};

// Non-identity part of  2I - L - L^{-1} + X~/2 - X~Z~/2.
constexpr std::array<WeightedLetter, 4> kSiteLetters{{
    {-1.0, Letter::kL},
    {-1.0, Letter::kLinv},
    {0.5, Letter::kX},
    {-0.5, Letter::kXZ},
}};

}  // namespace

std::string_view letter_name(Letter letter) {
    return info(letter).name;
}

Letter letter_from_name(std::string_view name) {
    for (const auto &entry : kLetters) {
        if (entry.name == name) {
            return entry.letter;
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown letter '" + std::string(name) + "'");
}

Letter adjoint_letter(Letter letter) {
    return info(letter).adjoint;
}

std::vector<LetterFactor> letter_factors(Letter letter) {
    switch (letter) {
        case Letter::kI:
            return {};
        case Letter::kL:
            return {shift(1)};
        case Letter::kLinv:
            return {shift(-1)};
        case Letter::kL2:
            return {shift(2)};
        case Letter::kLinv2:
            return {shift(-2)};
        case Letter::kX:
            return {kFlip};
        case Letter::kZ:
            return {kEdge};
        case Letter::kZ2:
            return {kEdge, kEdge};
        case Letter::kXZ:
            return {kFlip, kEdge};
        case Letter::kLX:
            return {shift(1), kFlip};
        case Letter::kXL:
            return {kFlip, shift(1)};
        case Letter::kLinvX:
            return {shift(-1), kFlip};
        case Letter::kXLinv:
            return {kFlip, shift(-1)};
        case Letter::kLXZ:
            return {shift(1), kFlip, kEdge};
        case Letter::kXZL:
            return {kFlip, kEdge, shift(1)};
        case Letter::kLinvXZ:
            return {shift(-1), kFlip, kEdge};
        case Letter::kXZLinv:
            return {kFlip, kEdge, shift(-1)};
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown letter");
}

DenseMatrix letter_matrix(Letter letter, std::size_t n) {
    check_grid(n, 2);
    DenseMatrix out = DenseMatrix::identity(n);
    for (const auto &f : letter_factors(letter)) {
        DenseMatrix factor(n, n);
        switch (f.kind) {
            case Kind::kShift: {
                const long shift_by = ((f.power % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
                for (std::size_t j = 0; j < n; j++) {
                    factor((j + static_cast<std::size_t>(shift_by)) % n, j) = 1.0;
                }
                break;
            }
            case Kind::kFlip:
                for (std::size_t j = 0; j < n; j++) {
                    factor(n - 1 - j, j) = 1.0;
                }
                break;
            case Kind::kEdgeSign:
                for (std::size_t j = 0; j < n; j++) {
                    factor(j, j) = (j == 0 || j == n - 1) ? -1.0 : 1.0;
                }
                break;
        }
        out = out * factor;
    }
    return out;
}

std::vector<SparseEntry> ProjectorPair::entries() const {
    switch (kind) {
        case PairKind::kDiagonal:
            if (first == second) {
                return {{first, first, 1.0}};
            }
            return {{first, first, 1.0}, {second, second, 1.0}};
        case PairKind::kSymmetric:
            return {{first, second, 1.0}, {second, first, 1.0}};
        case PairKind::kAntisymmetric:
            return {{first, second, Complex{0.0, 1.0}}, {second, first, Complex{0.0, -1.0}}};
    }
    return {};
}

bool TensorWord::is_identity() const {
    for (Letter l : sites) {
        if (l != Letter::kI) {
            return false;
        }
    }
    return true;
}

std::size_t TermList::total_size() const {
    return power_of(n, dimension);
}

OperatorDecomposition decompose_dirichlet_1d(std::size_t n) {
    check_grid(n, 4);
    OperatorDecomposition out;
    out.a = {BracketKind::kTransition, n, 1, "A' (Dirichlet, 1-D)", {band_term(tridiagonal_band(n), "T^1")}};
    out.a_squared = {BracketKind::kExpectation, n, 1, "A'^2 (Dirichlet, 1-D)",
                     {band_term(pentadiagonal_band(n), "T^2"),
                      {-1.0, ProjectorPair{0, n - 1, PairKind::kDiagonal}, false, "corner projectors"}}};
    return out;
}

OperatorDecomposition decompose_unified_1d(std::size_t n, double c, double d) {
    check_grid(n, 4);
    if (!(c >= 0.0 && c < 1.0 && d >= 0.0 && d < 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "corner coefficients must lie in [0, 1)");
    }
    OperatorDecomposition out;
    out.a = {BracketKind::kTransition, n, 1, "A~ (unified, 1-D)", {band_term(tridiagonal_band(n), "T^1")}};
    auto push = [](TermList &list, double coeff, ProjectorPair pair, std::string label) {
        if (coeff != 0.0) {
            list.terms.push_back({coeff, pair, false, std::move(label)});
        }
    };
    push(out.a, -c, {0, 0, PairKind::kDiagonal}, "top corner");
    push(out.a, -d, {n - 1, n - 1, PairKind::kDiagonal}, "bottom corner");

    out.a_squared = {BracketKind::kExpectation, n, 1, "A~^2 (unified, 1-D)",
                     {band_term(pentadiagonal_band(n), "T^2")}};
    push(out.a_squared, -(4 * c + 1 - c * c), {0, 0, PairKind::kDiagonal}, "top corner");
    push(out.a_squared, -(4 * d + 1 - d * d), {n - 1, n - 1, PairKind::kDiagonal}, "bottom corner");
    push(out.a_squared, c, {0, 1, PairKind::kSymmetric}, "top edge pair");
    push(out.a_squared, d, {n - 2, n - 1, PairKind::kSymmetric}, "bottom edge pair");
    return out;
}

TermList decompose_dirichlet_dd(unsigned dimension, std::size_t n) {
    check_grid(n, 2);
    if (dimension < 1) {
        throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
    }
    TermList list{BracketKind::kTransition, n, dimension,
                  "A^(" + std::to_string(dimension) + ") (Dirichlet)", {}};
    list.terms.push_back({2.0 * dimension, identity_word(dimension), false, "constant"});
    for (unsigned s = 0; s < dimension; s++) {
        for (const auto &[w, letter] : kSiteLetters) {
            list.terms.push_back({w, single_site_word(dimension, s, letter), false,
                                  "site " + std::to_string(s) + " " + std::string(letter_name(letter))});
        }
    }
    return list;
}

TermList decompose_dirichlet_dd_squared(unsigned dimension, std::size_t n) {
    check_grid(n, 2);
    if (dimension < 1) {
        throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
    }
    const double d = dimension;
    TermList list{BracketKind::kExpectation, n, dimension,
                  "(A^(" + std::to_string(dimension) + "))^2 (Dirichlet)", {}};
    list.terms.push_back({4.0 * d * d + 2.25 * d, identity_word(dimension), false, "constant"});

    // Same-site square of 2I - L - L^{-1} + X~/2 - X~Z~/2, identity part 25/4 removed.
    struct SameSite {
        double weight;
        Letter letter;
        bool paired;
    };
    constexpr std::array<SameSite, 12> kSquare{{
        {-4.0, Letter::kL, true},
        {1.0, Letter::kL2, true},
        {-0.5, Letter::kLX, true},
        {-0.5, Letter::kLinvX, true},
        {2.0, Letter::kX, false},
        {-0.5, Letter::kZ, false},
        {0.25, Letter::kZ2, false},
        {-2.0, Letter::kXZ, false},
        {0.5, Letter::kLXZ, false},
        {0.5, Letter::kXZLinv, false},
        {0.5, Letter::kLinvXZ, false},
        {0.5, Letter::kXZL, false},
    }};
    for (unsigned s = 0; s < dimension; s++) {
        for (const auto &t : kSquare) {
            list.terms.push_back({t.weight, single_site_word(dimension, s, t.letter), t.paired,
                                  "site " + std::to_string(s) + " " + std::string(letter_name(t.letter))});
        }
    }

    // Cross sites: 2 (2I + S_u)(2I + S_v) with the 4I (x) 4I part in the constant.
    std::vector<WeightedLetter> with_identity{{2.0, Letter::kI}};
    with_identity.insert(with_identity.end(), kSiteLetters.begin(), kSiteLetters.end());
    for (unsigned u = 0; u < dimension; u++) {
        for (unsigned v = u + 1; v < dimension; v++) {
            for (const auto &a : with_identity) {
                for (const auto &b : with_identity) {
                    if (a.letter == Letter::kI && b.letter == Letter::kI) {
                        continue;
                    }
                    TensorWord w = identity_word(dimension);
                    w.sites[u] = a.letter;
                    w.sites[v] = b.letter;
                    list.terms.push_back({2.0 * a.weight * b.weight, std::move(w), false,
                                          "sites " + std::to_string(u) + "," + std::to_string(v) + " " +
                                              std::string(letter_name(a.letter)) + "(x)" +
                                              std::string(letter_name(b.letter))});
                }
            }
        }
    }
    return list;
}

TermList decompose_toeplitz(const ToeplitzSpec &spec) {
    return {BracketKind::kTransition, spec.size(), 1, "T (banded Toeplitz)", {band_term(spec, "T")}};
}

TermList decompose_toeplitz_gram(const ToeplitzSpec &spec) {
    TermList list{BracketKind::kExpectation, spec.size(), 1, "T^dagger T (banded Toeplitz)",
                  {band_term(gram_band(spec), "Gram band")}};
    for (const auto &e : gram_boundary_corrections(spec)) {
        if (e.row == e.col) {
            list.terms.push_back({-e.value.real(), ProjectorPair{e.row, e.row, PairKind::kDiagonal}, false,
                                  "boundary diagonal " + std::to_string(e.row)});
        } else if (e.row < e.col) {
            const std::string where = std::to_string(e.row) + "," + std::to_string(e.col);
            if (e.value.real() != 0.0) {
                list.terms.push_back({-e.value.real(), ProjectorPair{e.row, e.col, PairKind::kSymmetric}, false,
                                      "boundary pair " + where});
            }
            if (e.value.imag() != 0.0) {
                list.terms.push_back({-e.value.imag(), ProjectorPair{e.row, e.col, PairKind::kAntisymmetric},
                                      false, "boundary pair (imag) " + where});
            }
        }
    }
    return list;
}

DenseMatrix descriptor_to_dense(const OperatorDescriptor &op, std::size_t n, unsigned dimension) {
    const std::size_t size = power_of(n, dimension);
    if (size > kMaxDenseDim) {
        throw Error(ErrorCode::kDimensionOverflow, "n^d exceeds the dense oracle cap");
    }
    DenseMatrix out(size, size);
    for_each_entry(op, n, dimension, [&](std::size_t r, std::size_t c, Complex v) { out(r, c) += v; });
    return out;
}

DenseMatrix reconstruct_dense(const TermList &list) {
    const std::size_t size = list.total_size();
    if (size > kMaxDenseDim) {
        throw Error(ErrorCode::kDimensionOverflow, "n^d exceeds the dense oracle cap");
    }
    DenseMatrix out(size, size);
    for (const auto &term : list.terms) {
        const Complex coeff = term.coefficient;
        const bool paired = term.paired_with_adjoint;
        for_each_entry(term.op, list.n, list.dimension, [&](std::size_t r, std::size_t c, Complex v) {
            if (r >= size || c >= size) {
                throw Error(ErrorCode::kDimensionMismatch, "term entry outside the operator");
            }
            out(r, c) += coeff * v;
            if (paired) {
                out(c, r) += coeff * std::conj(v);
            }
        });
    }
    return out;
}

std::size_t count_terms(const TermList &list) {
    const bool transition = list.kind == BracketKind::kTransition;
    std::size_t total = 0;
    for (const auto &term : list.terms) {
        if (const auto *band = std::get_if<ToeplitzBand>(&term.op)) {
            const auto &spec = band->spec;
            if (transition) {
                total += spec.nonzero_offsets().size();
                continue;
            }
            for (int l = 1; l <= static_cast<int>(spec.band()); l++) {
                const Complex up = spec.coefficient(l);
                const Complex down = spec.coefficient(-l);
                const bool has_up = up != Complex{0.0, 0.0};
                const bool has_down = down != Complex{0.0, 0.0};
                if (has_up && has_down && std::abs(down - std::conj(up)) <= 1e-15) {
                    total += 1;
                } else {
                    total += static_cast<std::size_t>(has_up) + static_cast<std::size_t>(has_down);
                }
            }
        } else if (const auto *word = std::get_if<TensorWord>(&term.op)) {
            total += (word->is_identity() && !transition) ? 0 : 1;
        } else {
            total += 1;
        }
    }
    return total;
}

std::size_t count_matrix_terms(const TermList &list) {
    std::size_t total = 0;
    for (const auto &term : list.terms) {
        const auto *word = std::get_if<TensorWord>(&term.op);
        if (word && word->is_identity() && list.kind == BracketKind::kExpectation) {
            continue;
        }
        total++;
    }
    return total;
}

unsigned site_qubit_offset(unsigned site, unsigned dimension, unsigned qubits_per_axis) {
    if (site >= dimension) {
        throw Error(ErrorCode::kInvalidArgument, "site index out of range");
    }
    return (dimension - 1 - site) * qubits_per_axis;
}

}  // namespace pvqa
