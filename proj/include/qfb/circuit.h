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

#ifndef QFB_CIRCUIT_H
#define QFB_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qfb {

enum class GateKind : uint8_t { X, H, S, Sdg, Ry, CNOT, CRy };

std::string_view gate_name(GateKind kind);

constexpr bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CNOT || kind == GateKind::CRy;
}

/// A single gate. Two-qubit kinds act on `control` -> `target`; single-qubit
/// kinds only use `target`. Rotation kinds store the full angle, so
/// Ry(theta) = exp(-i theta Y / 2).
struct Gate {
    GateKind kind;
    uint32_t target;
    uint32_t control = 0;
    double theta = 0.0;

    static Gate x(uint32_t q) { return {GateKind::X, q}; }
    static Gate h(uint32_t q) { return {GateKind::H, q}; }
    static Gate s(uint32_t q) { return {GateKind::S, q}; }
    static Gate sdg(uint32_t q) { return {GateKind::Sdg, q}; }
    static Gate ry(uint32_t q, double theta) { return {GateKind::Ry, q, 0, theta}; }
    static Gate cnot(uint32_t c, uint32_t t) { return {GateKind::CNOT, t, c}; }
    static Gate cry(uint32_t c, uint32_t t, double theta) { return {GateKind::CRy, t, c, theta}; }

    /// Touched qubits; [control, target] for two-qubit kinds.
    std::vector<uint32_t> qubits() const;

    bool operator==(const Gate &other) const = default;
};

/// Ordered gate list over a fixed-width register. Gates are validated on
/// append, so a Circuit always satisfies its width invariant.
class Circuit {
   public:
    explicit Circuit(uint32_t width, std::string label = {});

    uint32_t width() const { return width_; }
    const std::string &label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }
    const std::vector<Gate> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }
    size_t size() const { return gates_.size(); }

    /// Throws std::invalid_argument on out-of-range or repeated qubits, or a
    /// non-finite angle.
    void append(const Gate &gate);
    void append(const Circuit &other);

    /// Removes the last `count` gates.
    void truncate(size_t count);

    bool operator==(const Circuit &other) const = default;

   private:
    uint32_t width_;
    std::string label_;
    std::vector<Gate> gates_;
};

enum class MeasurementBasis : uint8_t { X, Y, Z };

char basis_char(MeasurementBasis b);
MeasurementBasis parse_basis(std::string_view text);

/// Number of CNOTs, with every undecomposed CRy counted as two.
size_t cnot_count(const Circuit &c);

/// Number of layers under as-soon-as-possible scheduling; 0 for an empty
/// circuit.
size_t depth(const Circuit &c);

/// Replaces every CRy(theta) with Ry(theta/2), CNOT, Ry(-theta/2), CNOT.
Circuit decompose_cry(const Circuit &c);

/// OpenQASM 2.0 text without measurements. Throws std::invalid_argument if a
/// CRy gate is present.
std::string to_qasm(const Circuit &c);

}  // namespace qfb

#endif
