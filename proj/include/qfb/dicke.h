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

#ifndef QFB_DICKE_H
#define QFB_DICKE_H

#include <cstdint>
#include <span>
#include <vector>

#include "qfb/circuit.h"
#include "qfb/statevector.h"

namespace qfb {

struct DickeSpec {
    uint32_t n;
    uint32_t k;

    /// Throws std::invalid_argument unless 1 <= n and k <= n.
    void validate() const;
};

/// Input-weight range of a Dicke unitary: maps |0^{n-l} 1^l> to D(n, l) for
/// every k_lo <= l <= k_hi. The unary input sets qubits 0..l-1.
struct UnitaryRange {
    uint32_t n;
    uint32_t k_lo;
    uint32_t k_hi;

    void validate() const;
};

/// Exact binomial coefficient; 64-bit exact for the widths used here.
uint64_t binomial(uint32_t n, uint32_t k);

/// Equal superposition of all weight-k basis states.
StateVector dicke_state_vector(const DickeSpec &spec);

/// One rotation of the weight distributor. The probability of continuing to
/// the next unary level is numerator/denominator, realised by
/// theta = 2 acos(sqrt(numerator / denominator)).
struct WeightRotation {
    uint64_t numerator;
    uint64_t denominator;
    double theta;
};

/// Rotations preparing sum_l sqrt(C(n2, K-l) C(n1, l)) |unary(l)> on an
/// n1-qubit register, in the order they are applied. The first entry is the
/// unconditional rotation with ratio term(0)/total; entry j >= 1 is
/// conditioned on unary level j and has ratio suffix(j+1)/suffix(j).
std::vector<WeightRotation> weight_distribution_angles(uint32_t n1, uint32_t n2, uint32_t k);

/// Linear-nearest-neighbour Dicke unitary for the given input range. Never
/// emits CRy.
Circuit build_dicke_unitary(const UnitaryRange &r);

/// Appends a Dicke unitary acting on `qubits` (qubits[j] is unary position
/// j) to `out`.
void append_dicke_unitary(Circuit &out, std::span<const uint32_t> qubits, uint32_t k_lo, uint32_t k_hi);

/// CNOT budget 5 C(n-1,2) + 2(n-1) - 3 C(n-k_hi-1,2) - 5 C(k_lo,2), floored
/// at zero for degenerate ranges.
int64_t dicke_unitary_cnot_budget(const UnitaryRange &r);

/// Divide-and-conquer preparation of D(n, k) from |0...0>.
Circuit build_dicke_circuit(const DickeSpec &spec);

/// 5K(N-K) - 3(N+K) + 5. Requires 1 <= K <= floor(N/2).
int64_t expected_dicke_cnots(const DickeSpec &spec);

}  // namespace qfb

#endif
