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

#ifndef QFB_DENSITY_H
#define QFB_DENSITY_H

#include <Eigen/Dense>
#include <cstdint>

#include "qfb/circuit.h"
#include "qfb/statevector.h"

namespace qfb {

inline constexpr uint32_t kMaxDensityWidth = 8;

/// Dense 2^N x 2^N density matrix, N <= kMaxDensityWidth. Row/column index
/// bit q is qubit q, as in StateVector.
class DensityMatrix {
   public:
    /// |0...0><0...0|.
    explicit DensityMatrix(uint32_t width);
    DensityMatrix(uint32_t width, Eigen::MatrixXcd rho);

    static DensityMatrix pure(const StateVector &psi);
    static DensityMatrix maximally_mixed(uint32_t width);

    uint32_t width() const { return width_; }
    size_t dim() const { return static_cast<size_t>(rho_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return rho_; }

    /// rho -> U rho U^dagger.
    void apply(const Gate &g);
    void apply_pauli(uint32_t qubit, Pauli p);
    /// (1-p) rho + p * (average of P rho P over all 4^k Pauli strings on the
    /// given one or two qubits).
    void depolarize(std::span<const uint32_t> qubits, double p);

    Complex trace() const { return rho_.trace(); }
    double hermiticity_error() const;
    double min_eigenvalue() const;

   private:
    template <typename Fn>
    void conjugate(Fn &&column_op);

    uint32_t width_;
    Eigen::MatrixXcd rho_;
};

/// Exact depolarized evolution of c from |0...0>. Throws above width 8.
DensityMatrix density_oracle(const Circuit &c, const NoiseSpec &noise);

/// <psi|rho|psi>.
double exact_fidelity(const DensityMatrix &rho, const StateVector &target);

/// Z-basis probability mass on the target's support, |<x|psi>| > 1e-12.
double exact_msp(const DensityMatrix &rho, const StateVector &target);

}  // namespace qfb

#endif
