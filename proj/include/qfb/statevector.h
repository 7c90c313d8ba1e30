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

#ifndef QFB_STATEVECTOR_H
#define QFB_STATEVECTOR_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qfb/circuit.h"

namespace qfb {

using Complex = std::complex<double>;

/// Largest register the statevector engine will allocate.
inline constexpr uint32_t kMaxStatevectorWidth = 26;

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// In-place kernels over a raw amplitude array of length 2^width. Bit q of an
/// amplitude index is the value of qubit q.
void apply_gate(std::span<Complex> amps, const Gate &g);
void apply_pauli(std::span<Complex> amps, uint32_t qubit, Pauli p);

/// Dense pure state, 2^width amplitudes.
class StateVector {
   public:
    /// |0...0>. Throws std::invalid_argument above kMaxStatevectorWidth.
    explicit StateVector(uint32_t width);
    StateVector(uint32_t width, std::vector<Complex> amplitudes);

    uint32_t width() const { return width_; }
    size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    const Complex &operator[](uint64_t index) const { return amps_[index]; }

    void apply(const Gate &g) { apply_gate(amps_, g); }
    void apply(const Circuit &c);
    void apply_pauli(uint32_t qubit, Pauli p) { qfb::apply_pauli(amps_, qubit, p); }

    double norm_squared() const;
    Complex inner(const StateVector &other) const;  // <this|other>
    /// |<this|other>|^2.
    double fidelity(const StateVector &other) const;

   private:
    uint32_t width_;
    std::vector<Complex> amps_;
};

/// Bit string for a basis index, qubit width-1 first (so the last character
/// is qubit 0).
std::string to_bitstring(uint64_t outcome, uint32_t width);
uint64_t parse_bitstring(std::string_view bits);

struct NoiseSpec {
    /// Depolarizing strength after each single-qubit gate.
    double p1 = 1e-4;
    /// Depolarizing strength after each two-qubit gate.
    double p2 = 2e-3;

    static NoiseSpec none() { return {0.0, 0.0}; }
    bool is_noiseless() const { return p1 == 0.0 && p2 == 0.0; }
    /// Throws std::invalid_argument unless both probabilities are in [0, 1].
    void validate() const;
};

struct ShotTable {
    MeasurementBasis basis = MeasurementBasis::Z;
    uint32_t width = 0;
    std::vector<uint64_t> outcomes;
    uint64_t seed = 0;
    std::string circuit_label;

    size_t size() const { return outcomes.size(); }
};

/// Applies c to |0...0>.
StateVector run(const Circuit &c);

/// Appends the basis change that maps sigma_basis eigenvalue +1 to bit 0.
Circuit rotate_to_basis(const Circuit &c, MeasurementBasis b);
void rotate_state_to_basis(StateVector &sv, MeasurementBasis b);

/// Precomputed inverse CDF over |amplitude|^2 for repeated sampling.
class OutcomeSampler {
   public:
    explicit OutcomeSampler(const StateVector &sv);
    /// Outcome for a uniform variate u in [0, 1).
    uint64_t draw(double u) const;

   private:
    std::vector<double> cdf_;
};

/// Shot i uses counter i of the stream keyed by `seed`, so every shot is
/// reproducible on its own.
ShotTable sample(const StateVector &sv, size_t shots, uint64_t seed, MeasurementBasis basis = MeasurementBasis::Z,
                 std::string label = {});

/// A Pauli inserted after gate `gate_index`. For two-qubit gates `code`
/// encodes (control Pauli) + 4 * (target Pauli); zero means identity.
struct PauliEvent {
    size_t gate_index;
    uint8_t code;
};

/// Draws the depolarizing events for one trajectory. After each gate, with
/// probability p (p1 or p2 by arity) a Pauli is drawn uniformly from all 4^k
/// strings on the touched qubits, which realizes (1-p) rho + p * twirl.
std::vector<PauliEvent> draw_pauli_events(const Circuit &c, const NoiseSpec &noise, uint64_t seed);

/// Runs c from |0...0> inserting the given events.
StateVector run_with_events(const Circuit &c, std::span<const PauliEvent> events);

/// One Monte Carlo unraveling of the depolarized circuit.
StateVector run_trajectory(const Circuit &c, const NoiseSpec &noise, uint64_t seed);

}  // namespace qfb

#endif
