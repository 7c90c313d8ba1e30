// Copyright 2026 The qfb Authors
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

#include "qfb/circuit.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qfb {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "x";
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::Ry:
            return "ry";
        case GateKind::CNOT:
            return "cx";
        case GateKind::CRy:
            return "cry";
    }
    return "?";
}

std::vector<uint32_t> Gate::qubits() const {
    if (is_two_qubit(kind)) {
        return {control, target};
    }
    return {target};
}

Circuit::Circuit(uint32_t width, std::string label) : width_(width), label_(std::move(label)) {}

void Circuit::append(const Gate &gate) {
    if (gate.target >= width_) {
        throw std::invalid_argument("gate target " + std::to_string(gate.target) + " out of range for width " +
                                    std::to_string(width_));
    }
    if (is_two_qubit(gate.kind)) {
        if (gate.control >= width_) {
            throw std::invalid_argument("gate control " + std::to_string(gate.control) +
                                        " out of range for width " + std::to_string(width_));
        }
        if (gate.control == gate.target) {
            throw std::invalid_argument("two-qubit gate with control == target");
        }
    }
    if (!std::isfinite(gate.theta)) {
        throw std::invalid_argument("gate angle must be finite");
    }
    gates_.push_back(gate);
}

void Circuit::append(const Circuit &other) {
    if (other.width_ > width_) {
        throw std::invalid_argument("cannot append a wider circuit");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
}

void Circuit::truncate(size_t count) {
    if (count > gates_.size()) {
        throw std::invalid_argument("truncate past start of circuit");
    }
    gates_.resize(gates_.size() - count);
}

char basis_char(MeasurementBasis b) {
    switch (b) {
        case MeasurementBasis::X:
            return 'X';
        case MeasurementBasis::Y:
            return 'Y';
        case MeasurementBasis::Z:
            return 'Z';
    }
    return '?';
}

MeasurementBasis parse_basis(std::string_view text) {
    if (text == "X" || text == "x") return MeasurementBasis::X;
    if (text == "Y" || text == "y") return MeasurementBasis::Y;
    if (text == "Z" || text == "z") return MeasurementBasis::Z;
    throw std::invalid_argument("unknown measurement basis '" + std::string(text) + "'");
}

size_t cnot_count(const Circuit &c) {
    size_t n = 0;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::CNOT) {
            n += 1;
        } else if (g.kind == GateKind::CRy) {
            n += 2;
        }
    }
    return n;
}

size_t depth(const Circuit &c) {
    std::vector<size_t> busy_until(c.width(), 0);
    size_t result = 0;
    for (const auto &g : c.gates()) {
        size_t layer = busy_until[g.target];
        if (is_two_qubit(g.kind)) {
            layer = std::max(layer, busy_until[g.control]);
        }
        layer += 1;
        busy_until[g.target] = layer;
        if (is_two_qubit(g.kind)) {
            busy_until[g.control] = layer;
        }
        result = std::max(result, layer);
    }
    return result;
}

Circuit decompose_cry(const Circuit &c) {
    Circuit out(c.width(), c.label());
    for (const auto &g : c.gates()) {
        if (g.kind != GateKind::CRy) {
            out.append(g);
            continue;
        }
        out.append(Gate::ry(g.target, g.theta / 2));
        out.append(Gate::cnot(g.control, g.target));
        out.append(Gate::ry(g.target, -g.theta / 2));
        out.append(Gate::cnot(g.control, g.target));
    }
    return out;
}

std::string to_qasm(const Circuit &c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(c.width()) + "];\n";
    char buf[64];
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::CRy:
                throw std::invalid_argument("to_qasm: circuit contains CRy; call decompose_cry first");
            case GateKind::CNOT:
                std::snprintf(buf, sizeof(buf), "cx q[%u],q[%u];\n", g.control, g.target);
                break;
            case GateKind::Ry:
                std::snprintf(buf, sizeof(buf), "ry(%.17g) q[%u];\n", g.theta, g.target);
                break;
            default:
                std::snprintf(buf, sizeof(buf), "%s q[%u];\n", gate_name(g.kind).data(), g.target);
                break;
        }
        out += buf;
    }
    return out;
}

}  // namespace qfb
