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

#ifndef QFB_BOUNDS_H
#define QFB_BOUNDS_H

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qfb/density.h"
#include "qfb/dicke.h"
#include "qfb/ghz.h"
#include "qfb/stats.h"
#include "qfb/statevector.h"

namespace qfb {

/// j = N and j_z = N - 2K for the Dicke target D(N, K).
struct DickeQuantumNumbers {
    int j;
    int jz;

    static DickeQuantumNumbers of(const DickeSpec &spec);
};

// Per-shot values. Outcomes use the StateVector bit order (bit q = qubit q),
// and a 0 bit is eigenvalue +1.

/// 1 if the outcome has Hamming weight k.
double sjz_per_shot(uint64_t outcome, uint32_t k);
/// 1 - (m - jz)^2 / 4 with m = N - 2 wt(outcome).
double somma_sjz_per_shot(uint64_t outcome, uint32_t n, uint32_t k);
/// s^2 where s = sum_i (-1)^{bit i}.
double jsq_per_shot(uint64_t outcome, uint32_t n);
/// +1 for even parity, -1 for odd.
double parity_per_shot(uint64_t outcome);
/// sum_{i<N-1} (+1 if bits i, i+1 agree else -1). Throws for n < 2.
double zz_sum_per_shot(uint64_t outcome, uint32_t n);
/// 1 for the all-zeros or all-ones outcome.
double ghz_support_per_shot(uint64_t outcome, uint32_t n);

/// Point estimate with its interval.
struct Estimate {
    double value = 0;
    Interval ci;
};

/// Everything reported for one prepared state. Fields that do not apply to
/// the state family are NaN.
struct BoundReport {
    Estimate lower_bound;
    Estimate msp;
    /// Dicke: <S_J^2>. NaN for GHZ.
    Estimate sj2;
    /// Dicke only; the lower bound built from 1 - (J_z - j_z)^2 / 4.
    Estimate somma_lower_bound;
    /// GHZ only.
    Estimate sgx;
    Estimate sgz;
    size_t shots_per_setting = 0;
};

enum class CiMethod : uint8_t { Bootstrap, Normal };

struct CiOptions {
    CiMethod method = CiMethod::Bootstrap;
    BootstrapOptions bootstrap;
};

/// Feature layout per setting: Z -> [sjz, somma, jsq], X -> [jsq], Y -> [jsq].
struct DickeFeatures {
    uint32_t n;
    uint32_t k;
    FeatureTable z{3}, x{1}, y{1};

    /// Tables in setting order Z, X, Y.
    std::vector<FeatureTable> settings() const { return {z, x, y}; }
    static Combiner lower_bound(uint32_t n);
    static Combiner somma_lower_bound(uint32_t n);
    static Combiner sj2(uint32_t n);
    static Combiner msp();
};

/// Feature layout per setting: X -> [parity], Z -> [zz_sum, in_support].
struct GhzFeatures {
    uint32_t n;
    FeatureTable x{1}, z{2};

    /// Tables in setting order X, Z.
    std::vector<FeatureTable> settings() const { return {x, z}; }
    static Combiner lower_bound(uint32_t n);
    static Combiner msp();
    static Combiner sgx();
    static Combiner sgz();
};

/// Throws unless exactly one table per X, Y, Z basis is given, all nonempty
/// and of width spec.n.
DickeFeatures dicke_features(std::span<const ShotTable> tables, const DickeSpec &spec);
/// Needs X and Z tables; n >= 2.
GhzFeatures ghz_features(std::span<const ShotTable> tables, uint32_t n);

BoundReport dicke_lower_bound(std::span<const ShotTable> tables, const DickeSpec &spec, const CiOptions &ci = {});
BoundReport ghz_lower_bound(std::span<const ShotTable> tables, uint32_t n, const CiOptions &ci = {});

/// Mean global X parity of X-basis shots.
double ghz_sgx(const ShotTable &x_shots);
/// Sum of mean adjacent ZZ correlators of Z-basis shots.
double ghz_sgz(const ShotTable &z_shots);

// Explicit operators on N <= 8 qubits, in the Pauli-sum normalisation
// J_tau = sum_i sigma_tau^i.
struct AngularMomentum {
    Eigen::MatrixXcd jx, jy, jz, j2;
};
AngularMomentum angular_momentum(uint32_t n);

/// prod_{jz' != jz} (J_z - jz') / (jz - jz') over jz' in {-N, -N+2, ..., N}.
Eigen::MatrixXcd sjz_operator(uint32_t n, uint32_t k);
/// 1 - (J_z - jz)^2 / 4.
Eigen::MatrixXcd somma_sjz_operator(uint32_t n, uint32_t k);
/// (J^2 - N(N+2)) / (4N).
Eigen::MatrixXcd sj2_operator(uint32_t n);
/// X^{(x)N}.
Eigen::MatrixXcd sgx_operator(uint32_t n);
/// sum_i Z_i Z_{i+1}.
Eigen::MatrixXcd sgz_operator(uint32_t n);
/// (S_Gx + S_Gz - (N-2)) / 2.
Eigen::MatrixXcd ghz_witness_operator(uint32_t n);
/// Diagonal projector onto the target's Z-basis support.
Eigen::MatrixXcd support_projector(const StateVector &target);

/// Exact expectations of every reported quantity; intervals collapse to the
/// point value.
BoundReport exact_operator_expectations(const DensityMatrix &rho, const DickeSpec &spec);
BoundReport exact_operator_expectations(const DensityMatrix &rho, const GhzSpec &spec);

}  // namespace qfb

#endif
