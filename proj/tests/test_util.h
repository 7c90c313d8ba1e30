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

#ifndef QFB_TEST_UTIL_H
#define QFB_TEST_UTIL_H

#include <cmath>
#include <vector>

#include "qfb/circuit.h"
#include "qfb/statevector.h"

namespace qfb_test {

/// Column j is the circuit applied to basis state |j>.
inline std::vector<std::vector<qfb::Complex>> unitary_columns(const qfb::Circuit &c) {
    const size_t dim = size_t{1} << c.width();
    std::vector<std::vector<qfb::Complex>> cols;
    for (size_t j = 0; j < dim; ++j) {
        std::vector<qfb::Complex> amps(dim, 0.0);
        amps[j] = 1.0;
        qfb::StateVector sv(c.width(), amps);
        sv.apply(c);
        cols.emplace_back(sv.amplitudes().begin(), sv.amplitudes().end());
    }
    return cols;
}

inline double max_entry_distance(const std::vector<std::vector<qfb::Complex>> &a,
                                 const std::vector<std::vector<qfb::Complex>> &b) {
    double worst = 0;
    for (size_t j = 0; j < a.size(); ++j) {
        for (size_t i = 0; i < a[j].size(); ++i) worst = std::max(worst, std::abs(a[j][i] - b[j][i]));
    }
    return worst;
}

inline qfb::StateVector basis_state(uint32_t width, uint64_t index) {
    std::vector<qfb::Complex> amps(size_t{1} << width, 0.0);
    amps[index] = 1.0;
    return qfb::StateVector(width, amps);
}

}  // namespace qfb_test

#endif
