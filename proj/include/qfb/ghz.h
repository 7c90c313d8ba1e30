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

#ifndef QFB_GHZ_H
#define QFB_GHZ_H

#include <cstdint>
#include <string_view>

#include "qfb/circuit.h"
#include "qfb/statevector.h"

namespace qfb {

enum class GhzLayout : uint8_t { Linear, Logarithmic };

std::string_view layout_name(GhzLayout layout);
GhzLayout parse_layout(std::string_view text);

struct GhzSpec {
    uint32_t n;
    GhzLayout layout = GhzLayout::Linear;

    void validate() const;
};

/// (|0...0> + |1...1>) / sqrt(2).
StateVector ghz_state_vector(uint32_t n);

/// H on qubit 0 followed by n-1 CNOTs. Linear chains CNOT(i, i+1); the
/// logarithmic layout doubles the entangled block every layer.
Circuit build_ghz(const GhzSpec &spec);

}  // namespace qfb

#endif
