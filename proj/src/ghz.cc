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

#include "qfb/ghz.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qfb {

std::string_view layout_name(GhzLayout layout) {
    return layout == GhzLayout::Linear ? "linear" : "logarithmic";
}

GhzLayout parse_layout(std::string_view text) {
    if (text == "linear" || text == "lin") return GhzLayout::Linear;
    if (text == "logarithmic" || text == "log") return GhzLayout::Logarithmic;
    throw std::invalid_argument("unknown GHZ layout '" + std::string(text) + "'");
}

void GhzSpec::validate() const {
    if (n < 1) throw std::invalid_argument("GHZ state needs n >= 1");
}

StateVector ghz_state_vector(uint32_t n) {
    GhzSpec{n}.validate();
    StateVector sv(n);
    auto amps = sv.amplitudes();
    amps[0] = M_SQRT1_2;
    amps[amps.size() - 1] += M_SQRT1_2;
    return sv;
}

Circuit build_ghz(const GhzSpec &spec) {
    spec.validate();
    const uint32_t n = spec.n;
    Circuit c(n, "GHZ-" + std::to_string(n) + (spec.layout == GhzLayout::Linear ? "-lin" : "-log"));
    c.append(Gate::h(0));
    if (spec.layout == GhzLayout::Linear) {
        for (uint32_t i = 0; i + 1 < n; ++i) c.append(Gate::cnot(i, i + 1));
        return c;
    }
    for (uint32_t reached = 1; reached < n; reached *= 2) {
        for (uint32_t i = 0; i < reached && i + reached < n; ++i) {
            c.append(Gate::cnot(i, i + reached));
        }
    }
    return c;
}

}  // namespace qfb
