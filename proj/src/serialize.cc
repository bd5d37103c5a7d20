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

#include "pvqa/serialize.h"

#include <cmath>

#include "pvqa/error.h"

namespace pvqa {

namespace {

[[noreturn]] void bad(const std::string &what) {
    throw Error(ErrorCode::kInvalidArgument, what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

template <typename T>
T get_or(const Json &j, const char *key, T fallback) {
    if (!j.is_object() || !j.contains(key)) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception &) {
        bad(std::string("field '") + key + "' has the wrong type");
    }
}

unsigned positive_uint(const Json &j, const char *key) {
    const Json &v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 1) {
        bad(std::string("field '") + key + "' must be a positive integer");
    }
    return v.get<unsigned>();
}

std::string_view pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::kDiagonal:
            return "diagonal";
        case PairKind::kSymmetric:
            return "symmetric";
        case PairKind::kAntisymmetric:
            return "antisymmetric";
    }
    return "?";
}

PairKind pair_kind_from_name(const std::string &s) {
    if (s == "diagonal") {
        return PairKind::kDiagonal;
    }
    if (s == "symmetric") {
        return PairKind::kSymmetric;
    }
    if (s == "antisymmetric") {
        return PairKind::kAntisymmetric;
    }
    bad("unknown pair kind '" + s + "'");
}

}  // namespace

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json &j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    bad("expected a number or [re, im]");
}

Json descriptor_to_json(const OperatorDescriptor &op) {
    if (const auto *band = std::get_if<ToeplitzBand>(&op)) {
        Json j = toeplitz_to_json(band->spec);
        j["type"] = "toeplitz";
        return j;
    }
    if (const auto *pair = std::get_if<ProjectorPair>(&op)) {
        return {{"type", "pair"}, {"first", pair->first}, {"second", pair->second},
                {"kind", pair_kind_name(pair->kind)}};
    }
    Json sites = Json::array();
    for (Letter l : std::get<TensorWord>(op).sites) {
        sites.push_back(letter_name(l));
    }
    return {{"type", "word"}, {"sites", sites}};
}

OperatorDescriptor descriptor_from_json(const Json &j) {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "toeplitz") {
        return ToeplitzBand{toeplitz_from_json(j)};
    }
    if (type == "pair") {
        return ProjectorPair{field(j, "first").get<std::size_t>(), field(j, "second").get<std::size_t>(),
                             pair_kind_from_name(field(j, "kind").get<std::string>())};
    }
    if (type == "word") {
        TensorWord w;
        for (const auto &s : field(j, "sites")) {
            w.sites.push_back(letter_from_name(s.get<std::string>()));
        }
        return w;
    }
    bad("unknown operator type '" + type + "'");
}

Json term_list_to_json(const TermList &list) {
    Json out = Json::array();
    for (const auto &t : list.terms) {
        out.push_back({{"coeff", complex_to_json(t.coefficient)},
                       {"op", descriptor_to_json(t.op)},
                       {"paired", t.paired_with_adjoint},
                       {"label", t.label}});
    }
    return out;
}

TermList term_list_from_json(const Json &terms, const TermList &shape) {
    if (!terms.is_array()) {
        bad("term list must be an array");
    }
    TermList out{shape.kind, shape.n, shape.dimension, shape.target, {}};
    for (const auto &t : terms) {
        out.terms.push_back({complex_from_json(field(t, "coeff")), descriptor_from_json(field(t, "op")),
                             get_or<bool>(t, "paired", false), get_or<std::string>(t, "label", "")});
    }
    return out;
}

Json circuit_to_json(const Circuit &circuit) {
    Json out = Json::array();
    for (const auto &g : circuit.gates()) {
        Json j{{"gate", g.name()}, {"qubits", g.qubits}};
        if (!g.controls.empty()) {
            j["controls"] = g.controls;
        }
        if (g.kind == GateKind::kRy || g.kind == GateKind::kRz || g.kind == GateKind::kPhase) {
            j["angle"] = g.angle;
        }
        out.push_back(std::move(j));
    }
    return out;
}

PoissonProblem problem_from_json(const Json &j) {
    if (!j.is_object()) {
        bad("problem must be a JSON object");
    }
    PoissonProblem p;
    p.dimension = positive_uint(j, "dimension");
    p.qubits_per_axis = positive_uint(j, "qubits_per_axis");
    if (j.contains("boundary")) {
        const Json &b = j.at("boundary");
        const std::string kind = get_or<std::string>(b, "kind", "dirichlet");
        if (kind == "dirichlet") {
            p.boundary = BoundaryCondition::dirichlet();
        } else if (kind == "unified") {
            p.boundary = BoundaryCondition::unified(field(b, "alpha1").get<double>(), field(b, "alpha2").get<double>(),
                                                    field(b, "beta1").get<double>(), field(b, "beta2").get<double>());
        } else {
            bad("unknown boundary kind '" + kind + "'");
        }
    }
    if (j.contains("rhs")) {
        const Json &r = j.at("rhs");
        if (r.is_string()) {
            if (r.get<std::string>() != "uniform") {
                bad("rhs must be \"uniform\" or a list of numbers");
            }
        } else if (r.is_array()) {
            for (const auto &x : r) {
                if (!x.is_number()) {
                    bad("rhs entries must be numbers");
                }
                p.rhs.push_back(x.get<double>());
            }
        } else {
            bad("rhs must be \"uniform\" or a list of numbers");
        }
    }
    p.validate();
    return p;
}

Json problem_to_json(const PoissonProblem &p) {
    Json boundary{{"kind", p.boundary.kind == BoundaryKind::kDirichlet ? "dirichlet" : "unified"}};
    if (p.boundary.kind == BoundaryKind::kUnified) {
        boundary["alpha1"] = p.boundary.alpha1;
        boundary["alpha2"] = p.boundary.alpha2;
        boundary["beta1"] = p.boundary.beta1;
        boundary["beta2"] = p.boundary.beta2;
    }
    Json j{{"dimension", p.dimension}, {"qubits_per_axis", p.qubits_per_axis}, {"boundary", boundary}};
    if (p.uniform_rhs()) {
        j["rhs"] = "uniform";
    } else {
        j["rhs"] = p.rhs;
    }
    return j;
}

ToeplitzSpec toeplitz_from_json(const Json &j) {
    const Json &nj = field(j, "n");
    if (!nj.is_number_integer() || nj.get<long long>() < 1) {
        bad("toeplitz size n must be a positive integer");
    }
    const auto n = nj.get<std::size_t>();
    const Json &cj = field(j, "coeffs");
    if (!cj.is_object()) {
        bad("coeffs must map offsets to values");
    }
    std::map<int, Complex> coeffs;
    for (const auto &[key, value] : cj.items()) {
        std::size_t used = 0;
        int offset = 0;
        try {
            offset = std::stoi(key, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != key.size() || key.empty()) {
            bad("coefficient key '" + key + "' is not an integer offset");
        }
        coeffs[offset] = complex_from_json(value);
    }
    if (j.contains("band")) {
        return ToeplitzSpec::with_band(n, field(j, "band").get<unsigned>(), coeffs);
    }
    return ToeplitzSpec(n, coeffs);
}

Json toeplitz_to_json(const ToeplitzSpec &spec) {
    Json coeffs = Json::object();
    for (int l : spec.nonzero_offsets()) {
        coeffs[std::to_string(l)] = complex_to_json(spec.coefficient(l));
    }
    return {{"n", spec.size()}, {"band", spec.band()}, {"coeffs", coeffs}};
}

StateVector state_from_json(const Json &j, unsigned num_qubits) {
    if (j.is_string() && j.get<std::string>() == "uniform") {
        return StateVector::uniform(num_qubits);
    }
    if (!j.is_array()) {
        bad("state must be \"uniform\" or a list of amplitudes");
    }
    std::vector<Complex> amps;
    for (const auto &x : j) {
        amps.push_back(complex_from_json(x));
    }
    if (amps.size() != (std::size_t{1} << num_qubits)) {
        throw Error(ErrorCode::kLengthMismatch, "state has " + std::to_string(amps.size()) + " amplitudes, expected " +
                                                    std::to_string(std::size_t{1} << num_qubits));
    }
    return normalize(amps);
}

AnsatzSpec ansatz_from_json(const Json &j, unsigned num_qubits) {
    AnsatzSpec a;
    a.num_qubits = num_qubits;
    a.depth = get_or<unsigned>(j, "depth", 2);
    a.rotation = rotation_from_name(get_or<std::string>(j, "rotation", "ry-only"));
    a.entangler = entangler_from_name(get_or<std::string>(j, "entangler", "cnot-chain"));
    a.validate();
    return a;
}

OptimizerConfig optimizer_from_json(const Json &j) {
    OptimizerConfig c;
    c.method = method_from_name(get_or<std::string>(j, "method", "nelder-mead"));
    c.max_iters = get_or<unsigned>(j, "max_iters", c.max_iters);
    c.restarts = get_or<unsigned>(j, "restarts", c.restarts);
    c.tolerance = get_or<double>(j, "tolerance", c.tolerance);
    c.patience = get_or<unsigned>(j, "patience", c.patience);
    c.step = get_or<double>(j, "step", c.step);
    c.spsa_gain = get_or<double>(j, "spsa_gain", c.spsa_gain);
    c.validate();
    return c;
}

EstimationMode mode_from_string(const std::string &text, std::uint64_t seed) {
    if (text == "exact") {
        return ExactMode{};
    }
    std::size_t used = 0;
    unsigned long long shots = 0;
    try {
        shots = std::stoull(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text[0] == '-') {
        bad("--shots must be 'exact' or a positive integer");
    }
    if (shots == 0) {
        throw Error(ErrorCode::kShotCountZero, "--shots must be positive");
    }
    return ShotMode{shots, seed};
}

std::string mode_to_string(const EstimationMode &mode) {
    if (const auto *s = std::get_if<ShotMode>(&mode)) {
        return std::to_string(s->shots);
    }
    return "exact";
}

}  // namespace pvqa
