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

#include "pvqa/estimator.h"

#include <algorithm>
#include <map>

#include "pvqa/error.h"

namespace pvqa {

namespace {

// Copies `c` onto a `width`-qubit register, sending qubit k to mapping[k].
Circuit remapped(const Circuit &c, const std::vector<unsigned> &mapping, unsigned width) {
    Circuit out(width);
    for (Gate g : c.gates()) {
        for (auto &q : g.qubits) {
            q = mapping.at(q);
        }
        for (auto &q : g.controls) {
            q = mapping.at(q);
        }
        out.add(std::move(g));
    }
    return out;
}

// I - 2|s><s| for s the all-zeros or all-ones string. The all-ones case is a
// bare multi-controlled Z; X on every qubit moves it to the all-zeros string.
void add_string_reflection(Circuit &c, unsigned q, bool all_ones, int control = -1) {
    auto flip_all = [&] {
        for (unsigned k = 0; k < q; k++) {
            Gate x = Gate::x(k);
            if (control >= 0) {
                x.controls.push_back(static_cast<unsigned>(control));
            }
            c.add(std::move(x));
        }
    };
    if (!all_ones) {
        flip_all();
    }
    Gate z = Gate::z(0);
    for (unsigned k = 1; k < q; k++) {
        z.controls.push_back(k);
    }
    if (control >= 0) {
        z.controls.push_back(static_cast<unsigned>(control));
    }
    c.add(std::move(z));
    if (!all_ones) {
        flip_all();
    }
}

Circuit letter_circuit_impl(Letter letter, std::size_t n, bool controlled) {
    const unsigned q = log2_exact(n);
    const int control = controlled ? static_cast<int>(q) : -1;
    Circuit c(controlled ? q + 1 : q);
    const auto factors = letter_factors(letter);
    // Factors are listed left to right as operators; the rightmost acts first.
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        switch (it->kind) {
            case LetterFactor::Kind::kShift:
                c.append(controlled ? controlled_Ll_circuit(n, it->power) : shift_circuit(n, it->power));
                break;
            case LetterFactor::Kind::kFlip:
                for (unsigned k = 0; k < q; k++) {
                    Gate x = Gate::x(k);
                    if (controlled) {
                        x.controls.push_back(q);
                    }
                    c.add(std::move(x));
                }
                break;
            case LetterFactor::Kind::kEdgeSign:
                add_string_reflection(c, q, false, control);
                add_string_reflection(c, q, true, control);
                break;
        }
    }
    return c;
}

bool is_zero(Complex z) {
    return z == Complex{0.0, 0.0};
}

struct Context {
    const TermList &list;
    unsigned qubits;
    EstimationMode mode;
    std::uint64_t stream = 0;

    EstimationMode next() {
        return derive_mode(mode, stream++);
    }
};

// <left|T|right> through the circulant embedding on one extra qubit.
Complex band_transition(Context &ctx, const ToeplitzSpec &spec, const Circuit &left, const Circuit &right,
                        std::size_t &circuits) {
    const std::size_t n = spec.size();
    const unsigned q = log2_exact(n);
    const Circuit wl = left.widened(q + 1);
    const Circuit wr = right.widened(q + 1);
    Complex total{0.0, 0.0};
    for (int l : spec.nonzero_offsets()) {
        const Complex w = hadamard_bracket(q + 1, controlled_Ll_circuit(2 * n, l), wl, wr, ctx.next());
        circuits += 2;
        total += spec.coefficient(l) * w;
    }
    return total;
}

// <psi|T|psi>: offset 0 is free, +-l share one complex bracket.
Complex band_expectation(Context &ctx, const ToeplitzSpec &spec, const Circuit &psi, std::size_t &circuits) {
    const std::size_t n = spec.size();
    const unsigned q = log2_exact(n);
    const Circuit wp = psi.widened(q + 1);
    const auto terms = circulant_expectation_terms(embed_in_circulant(spec));
    Complex total{0.0, 0.0};
    for (unsigned l = 1; l <= spec.band(); l++) {
        const Complex up = spec.coefficient(static_cast<int>(l));
        const Complex down = spec.coefficient(-static_cast<int>(l));
        if (is_zero(up) && is_zero(down)) {
            continue;
        }
        const Complex w = hadamard_bracket(q + 1, controlled_Ll_circuit(2 * n, l), wp, wp, ctx.next());
        circuits += 2;
        total += up * w + down * std::conj(w);
    }
    if (!terms.empty() && terms.front().power == 0) {
        total += terms.front().coefficient;
    }
    return total;
}

Complex pair_transition(Context &ctx, const ProjectorPair &pair, const Circuit &left, const Circuit &right,
                        std::size_t &circuits) {
    const unsigned q = ctx.qubits;
    const Circuit empty(q + 1);
    const Complex overlap = hadamard_bracket(q, empty, left, right, ctx.next());
    circuits += 2;
    Complex total{0.0, 0.0};
    // <l|phi><phi|r> = (<l|r> - <l|R_phi|r>) / 2 with R_phi = I - 2|phi><phi|.
    for (const auto &[prep, sign] : bell_pair_circuits(pair, q)) {
        const Circuit reflect = reflection_circuit(prep).controlled(q);
        const Complex w = hadamard_bracket(q, reflect, left, right, ctx.next());
        circuits += 2;
        total += static_cast<double>(sign) * 0.5 * (overlap - w);
    }
    return total;
}

}  // namespace

Circuit letter_circuit(Letter letter, std::size_t n) {
    return letter_circuit_impl(letter, n, false);
}

Circuit controlled_letter_circuit(Letter letter, std::size_t n) {
    return letter_circuit_impl(letter, n, true);
}

Circuit controlled_word_circuit(const TensorWord &word, std::size_t n, unsigned dimension) {
    if (word.sites.size() != dimension) {
        throw Error(ErrorCode::kLengthMismatch, "tensor word has the wrong number of sites");
    }
    const unsigned q = log2_exact(n);
    const unsigned width = dimension * q + 1;
    const unsigned ancilla = dimension * q;
    Circuit out(width);
    for (unsigned s = 0; s < dimension; s++) {
        if (word.sites[s] == Letter::kI) {
            continue;
        }
        std::vector<unsigned> mapping(q + 1);
        const unsigned offset = site_qubit_offset(s, dimension, q);
        for (unsigned k = 0; k < q; k++) {
            mapping[k] = offset + k;
        }
        mapping[q] = ancilla;
        out.append(remapped(controlled_letter_circuit(word.sites[s], n), mapping, width));
    }
    return out;
}

unsigned term_list_qubits(const TermList &list) {
    return list.dimension * log2_exact(list.n);
}

ListEstimate estimate_transition(const TermList &list, const Circuit &left_prep, const Circuit &right_prep,
                                 const EstimationMode &mode) {
    Context ctx{list, term_list_qubits(list), mode};
    const unsigned q = ctx.qubits;
    if (left_prep.num_qubits() != q || right_prep.num_qubits() != q) {
        throw Error(ErrorCode::kDimensionMismatch, "preparation width differs from the term register");
    }
    ListEstimate out;
    for (const auto &term : list.terms) {
        TermEstimate est{term.label, term.coefficient, {}, {}, 0};
        if (const auto *band = std::get_if<ToeplitzBand>(&term.op)) {
            est.bracket = band_transition(ctx, band->spec, left_prep, right_prep, est.circuits);
            if (term.paired_with_adjoint) {
                const std::size_t n = band->spec.size();
                std::map<int, Complex> adj;
                for (int l : band->spec.nonzero_offsets()) {
                    adj[-l] = std::conj(band->spec.coefficient(l));
                }
                const auto spec = ToeplitzSpec::with_band(n, band->spec.band(), adj, ToeplitzSpec::Guard::kSkip);
                est.contribution = term.coefficient * (est.bracket + band_transition(ctx, spec, left_prep,
                                                                                     right_prep, est.circuits));
            } else {
                est.contribution = term.coefficient * est.bracket;
            }
        } else if (const auto *pair = std::get_if<ProjectorPair>(&term.op)) {
            if (list.dimension != 1 && pair->first >= (std::size_t{1} << q)) {
                throw Error(ErrorCode::kUnsupportedPattern, "pair index outside the register");
            }
            // Pair operators are Hermitian, so the adjoint partner repeats the bracket.
            est.bracket = pair_transition(ctx, *pair, left_prep, right_prep, est.circuits);
            est.contribution = term.coefficient * est.bracket * (term.paired_with_adjoint ? 2.0 : 1.0);
        } else {
            const auto &word = std::get<TensorWord>(term.op);
            est.bracket = hadamard_bracket(q, controlled_word_circuit(word, list.n, list.dimension), left_prep,
                                           right_prep, ctx.next());
            est.circuits += 2;
            est.contribution = term.coefficient * est.bracket;
            if (term.paired_with_adjoint) {
                TensorWord adj = word;
                for (auto &l : adj.sites) {
                    l = adjoint_letter(l);
                }
                const Complex w = hadamard_bracket(q, controlled_word_circuit(adj, list.n, list.dimension),
                                                   left_prep, right_prep, ctx.next());
                est.circuits += 2;
                est.contribution += term.coefficient * w;
            }
        }
        out.value += est.contribution;
        out.circuits += est.circuits;
        out.terms.push_back(std::move(est));
    }
    return out;
}

ListEstimate estimate_expectation(const TermList &list, const Circuit &psi_prep, const EstimationMode &mode) {
    Context ctx{list, term_list_qubits(list), mode};
    const unsigned q = ctx.qubits;
    if (psi_prep.num_qubits() != q) {
        throw Error(ErrorCode::kDimensionMismatch, "preparation width differs from the term register");
    }
    ListEstimate out;
    for (const auto &term : list.terms) {
        TermEstimate est{term.label, term.coefficient, {}, {}, 0};
        // <psi|O^dagger|psi> = conj(<psi|O|psi>), so pairing never costs a circuit.
        const auto with_partner = [&](Complex w) {
            return term.paired_with_adjoint ? term.coefficient * (w + std::conj(w)) : term.coefficient * w;
        };
        if (const auto *band = std::get_if<ToeplitzBand>(&term.op)) {
            est.bracket = band_expectation(ctx, band->spec, psi_prep, est.circuits);
        } else if (const auto *pair = std::get_if<ProjectorPair>(&term.op)) {
            est.bracket = bell_expectation(*pair, q, psi_prep, ctx.next());
            est.circuits += bell_pair_circuits(*pair, q).size();
        } else {
            const auto &word = std::get<TensorWord>(term.op);
            if (word.is_identity()) {
                est.bracket = 1.0;
            } else {
                est.bracket = hadamard_bracket(q, controlled_word_circuit(word, list.n, list.dimension), psi_prep,
                                               psi_prep, ctx.next());
                est.circuits += 2;
            }
        }
        est.contribution = with_partner(est.bracket);
        out.value += est.contribution;
        out.circuits += est.circuits;
        out.terms.push_back(std::move(est));
    }
    return out;
}

ListEstimate estimate_term_list(const TermList &list, const Circuit &left_prep, const Circuit &right_prep,
                                const EstimationMode &mode) {
    if (list.kind == BracketKind::kTransition) {
        return estimate_transition(list, left_prep, right_prep, mode);
    }
    return estimate_expectation(list, right_prep, mode);
}

}  // namespace pvqa
