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

#include "qfb/bounds.h"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qfb/rng.h"

namespace qfb {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int weight(uint64_t outcome) { return std::popcount(outcome); }

const ShotTable &find_table(std::span<const ShotTable> tables, MeasurementBasis b, uint32_t n) {
    const ShotTable *found = nullptr;
    for (const auto &t : tables) {
        if (t.basis != b) continue;
        if (found) throw std::invalid_argument(std::string("duplicate ") + basis_char(b) + "-basis shot table");
        found = &t;
    }
    if (!found) throw std::invalid_argument(std::string("missing ") + basis_char(b) + "-basis shot table");
    if (found->outcomes.empty()) throw std::invalid_argument(std::string("empty ") + basis_char(b) + "-basis shot table");
    if (found->width != n) throw std::invalid_argument("shot table width does not match the target state");
    return *found;
}

Estimate estimate(std::span<const FeatureTable> settings, const Combiner &f, const CiOptions &ci,
                  std::string_view tag) {
    Estimate e;
    e.value = combine(settings, f);
    if (ci.method == CiMethod::Normal) {
        e.ci = normal_ci(settings, f, ci.bootstrap.level);
    } else {
        BootstrapOptions opt = ci.bootstrap;
        opt.seed = derive_key(opt.seed, tag);
        e.ci = bootstrap_ci(settings, f, opt);
    }
    return e;
}

Estimate exact(double v) { return {v, {v, v}}; }
Estimate missing() { return {kNaN, {kNaN, kNaN}}; }

void check_operator_width(uint32_t n) {
    if (n < 1 || n > kMaxDensityWidth) {
        throw std::invalid_argument("explicit operators need 1 <= N <= " + std::to_string(kMaxDensityWidth));
    }
}

Eigen::MatrixXcd embed(const Eigen::Matrix2cd &op, uint32_t q, uint32_t n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    const Eigen::Index bit = Eigen::Index{1} << q;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (int b = 0; b < 2; ++b) {
            const Eigen::Index j = b ? (i | bit) : (i & ~bit);
            m(i, j) = op((i & bit) ? 1 : 0, b);
        }
    }
    return m;
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, Complex(0, -1), Complex(0, 1), 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

Eigen::MatrixXcd identity(uint32_t n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    return Eigen::MatrixXcd::Identity(d, d);
}

double expect(const DensityMatrix &rho, const Eigen::MatrixXcd &op) { return (op * rho.matrix()).trace().real(); }

}  // namespace

DickeQuantumNumbers DickeQuantumNumbers::of(const DickeSpec &spec) {
    spec.validate();
    return {static_cast<int>(spec.n), static_cast<int>(spec.n) - 2 * static_cast<int>(spec.k)};
}

double sjz_per_shot(uint64_t outcome, uint32_t k) { return weight(outcome) == static_cast<int>(k) ? 1.0 : 0.0; }

double somma_sjz_per_shot(uint64_t outcome, uint32_t n, uint32_t k) {
    const double m = static_cast<double>(n) - 2.0 * weight(outcome);
    const double jz = static_cast<double>(n) - 2.0 * k;
    return 1.0 - (m - jz) * (m - jz) / 4.0;
}

double jsq_per_shot(uint64_t outcome, uint32_t n) {
    const double s = static_cast<double>(n) - 2.0 * weight(outcome);
    return s * s;
}

double parity_per_shot(uint64_t outcome) { return weight(outcome) % 2 ? -1.0 : 1.0; }

double zz_sum_per_shot(uint64_t outcome, uint32_t n) {
    if (n < 2) throw std::invalid_argument("ZZ correlators need n >= 2");
    const uint64_t mask = (uint64_t{1} << (n - 1)) - 1;
    const int disagree = std::popcount((outcome ^ (outcome >> 1)) & mask);
    return static_cast<double>(n - 1) - 2.0 * disagree;
}

double ghz_support_per_shot(uint64_t outcome, uint32_t n) {
    const uint64_t ones = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    return outcome == 0 || outcome == ones ? 1.0 : 0.0;
}

Combiner DickeFeatures::lower_bound(uint32_t n) {
    const double nn = n;
    return [nn](const std::vector<std::vector<double>> &m) {
        return m[0][0] + (m[1][0] + m[2][0] + m[0][2] - nn * (nn + 2)) / (4 * nn);
    };
}

Combiner DickeFeatures::somma_lower_bound(uint32_t n) {
    const double nn = n;
    return [nn](const std::vector<std::vector<double>> &m) {
        return m[0][1] + (m[1][0] + m[2][0] + m[0][2] - nn * (nn + 2)) / (4 * nn);
    };
}

Combiner DickeFeatures::sj2(uint32_t n) {
    const double nn = n;
    return [nn](const std::vector<std::vector<double>> &m) {
        return (m[1][0] + m[2][0] + m[0][2] - nn * (nn + 2)) / (4 * nn);
    };
}

Combiner DickeFeatures::msp() {
    return [](const std::vector<std::vector<double>> &m) { return m[0][0]; };
}

Combiner GhzFeatures::lower_bound(uint32_t n) {
    const double nn = n;
    return [nn](const std::vector<std::vector<double>> &m) { return 0.5 * (m[0][0] + m[1][0] - (nn - 2)); };
}

Combiner GhzFeatures::msp() {
    return [](const std::vector<std::vector<double>> &m) { return m[1][1]; };
}

Combiner GhzFeatures::sgx() {
    return [](const std::vector<std::vector<double>> &m) { return m[0][0]; };
}

Combiner GhzFeatures::sgz() {
    return [](const std::vector<std::vector<double>> &m) { return m[1][0]; };
}

DickeFeatures dicke_features(std::span<const ShotTable> tables, const DickeSpec &spec) {
    spec.validate();
    const uint32_t n = spec.n, k = spec.k;
    const auto &z = find_table(tables, MeasurementBasis::Z, n);
    const auto &x = find_table(tables, MeasurementBasis::X, n);
    const auto &y = find_table(tables, MeasurementBasis::Y, n);
    DickeFeatures f{n, k};
    for (uint64_t o : z.outcomes) {
        const double row[3] = {sjz_per_shot(o, k), somma_sjz_per_shot(o, n, k), jsq_per_shot(o, n)};
        f.z.push_row(row);
    }
    for (uint64_t o : x.outcomes) {
        const double row[1] = {jsq_per_shot(o, n)};
        f.x.push_row(row);
    }
    for (uint64_t o : y.outcomes) {
        const double row[1] = {jsq_per_shot(o, n)};
        f.y.push_row(row);
    }
    return f;
}

GhzFeatures ghz_features(std::span<const ShotTable> tables, uint32_t n) {
    if (n < 2) throw std::invalid_argument("GHZ bound needs n >= 2");
    const auto &x = find_table(tables, MeasurementBasis::X, n);
    const auto &z = find_table(tables, MeasurementBasis::Z, n);
    GhzFeatures f{n};
    for (uint64_t o : x.outcomes) {
        const double row[1] = {parity_per_shot(o)};
        f.x.push_row(row);
    }
    for (uint64_t o : z.outcomes) {
        const double row[2] = {zz_sum_per_shot(o, n), ghz_support_per_shot(o, n)};
        f.z.push_row(row);
    }
    return f;
}

BoundReport dicke_lower_bound(std::span<const ShotTable> tables, const DickeSpec &spec, const CiOptions &ci) {
    auto f = dicke_features(tables, spec);
    auto settings = f.settings();
    BoundReport r;
    r.lower_bound = estimate(settings, DickeFeatures::lower_bound(spec.n), ci, "lb");
    r.somma_lower_bound = estimate(settings, DickeFeatures::somma_lower_bound(spec.n), ci, "somma");
    r.sj2 = estimate(settings, DickeFeatures::sj2(spec.n), ci, "sj2");
    r.msp = estimate(settings, DickeFeatures::msp(), ci, "msp");
    r.sgx = missing();
    r.sgz = missing();
    r.shots_per_setting = f.z.rows();
    return r;
}

BoundReport ghz_lower_bound(std::span<const ShotTable> tables, uint32_t n, const CiOptions &ci) {
    auto f = ghz_features(tables, n);
    auto settings = f.settings();
    BoundReport r;
    r.lower_bound = estimate(settings, GhzFeatures::lower_bound(n), ci, "lb");
    r.msp = estimate(settings, GhzFeatures::msp(), ci, "msp");
    r.sgx = estimate(settings, GhzFeatures::sgx(), ci, "sgx");
    r.sgz = estimate(settings, GhzFeatures::sgz(), ci, "sgz");
    r.sj2 = missing();
    r.somma_lower_bound = missing();
    r.shots_per_setting = f.z.rows();
    return r;
}

double ghz_sgx(const ShotTable &x_shots) {
    if (x_shots.outcomes.empty()) throw std::invalid_argument("empty X-basis shot table");
    double total = 0;
    for (uint64_t o : x_shots.outcomes) total += parity_per_shot(o);
    return total / static_cast<double>(x_shots.size());
}

double ghz_sgz(const ShotTable &z_shots) {
    if (z_shots.outcomes.empty()) throw std::invalid_argument("empty Z-basis shot table");
    double total = 0;
    for (uint64_t o : z_shots.outcomes) total += zz_sum_per_shot(o, z_shots.width);
    return total / static_cast<double>(z_shots.size());
}

AngularMomentum angular_momentum(uint32_t n) {
    check_operator_width(n);
    const Eigen::Index d = Eigen::Index{1} << n;
    AngularMomentum j{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d), {}};
    for (uint32_t q = 0; q < n; ++q) {
        j.jx += embed(pauli_matrix(Pauli::X), q, n);
        j.jy += embed(pauli_matrix(Pauli::Y), q, n);
        j.jz += embed(pauli_matrix(Pauli::Z), q, n);
    }
    j.j2 = j.jx * j.jx + j.jy * j.jy + j.jz * j.jz;
    return j;
}

Eigen::MatrixXcd sjz_operator(uint32_t n, uint32_t k) {
    DickeSpec{n, k}.validate();
    const Eigen::MatrixXcd jz = angular_momentum(n).jz;
    const int target = static_cast<int>(n) - 2 * static_cast<int>(k);
    Eigen::MatrixXcd out = identity(n);
    for (int other = -static_cast<int>(n); other <= static_cast<int>(n); other += 2) {
        if (other == target) continue;
        out = out * (jz - other * identity(n)) / static_cast<double>(target - other);
    }
    return out;
}

Eigen::MatrixXcd somma_sjz_operator(uint32_t n, uint32_t k) {
    DickeSpec{n, k}.validate();
    const Eigen::MatrixXcd jz = angular_momentum(n).jz;
    const double target = static_cast<double>(n) - 2.0 * k;
    const Eigen::MatrixXcd shifted = jz - target * identity(n);
    return identity(n) - shifted * shifted / 4.0;
}

Eigen::MatrixXcd sj2_operator(uint32_t n) {
    const double nn = n;
    return (angular_momentum(n).j2 - nn * (nn + 2) * identity(n)) / (4 * nn);
}

Eigen::MatrixXcd sgx_operator(uint32_t n) {
    check_operator_width(n);
    Eigen::MatrixXcd out = identity(n);
    for (uint32_t q = 0; q < n; ++q) out = out * embed(pauli_matrix(Pauli::X), q, n);
    return out;
}

Eigen::MatrixXcd sgz_operator(uint32_t n) {
    check_operator_width(n);
    if (n < 2) throw std::invalid_argument("ZZ correlators need n >= 2");
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (uint32_t q = 0; q + 1 < n; ++q) {
        out += embed(pauli_matrix(Pauli::Z), q, n) * embed(pauli_matrix(Pauli::Z), q + 1, n);
    }
    return out;
}

Eigen::MatrixXcd ghz_witness_operator(uint32_t n) {
    return 0.5 * (sgx_operator(n) + sgz_operator(n) - (static_cast<double>(n) - 2) * identity(n));
}

Eigen::MatrixXcd support_projector(const StateVector &target) {
    check_operator_width(target.width());
    const Eigen::Index d = static_cast<Eigen::Index>(target.dim());
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index x = 0; x < d; ++x) {
        if (std::abs(target[x]) > 1e-12) p(x, x) = 1.0;
    }
    return p;
}

BoundReport exact_operator_expectations(const DensityMatrix &rho, const DickeSpec &spec) {
    spec.validate();
    if (rho.width() != spec.n) throw std::invalid_argument("density matrix width does not match the target");
    const double sjz = expect(rho, sjz_operator(spec.n, spec.k));
    const double somma = expect(rho, somma_sjz_operator(spec.n, spec.k));
    const double sj2 = expect(rho, sj2_operator(spec.n));
    BoundReport r;
    r.lower_bound = exact(sjz + sj2);
    r.somma_lower_bound = exact(somma + sj2);
    r.sj2 = exact(sj2);
    r.msp = exact(expect(rho, support_projector(dicke_state_vector(spec))));
    r.sgx = missing();
    r.sgz = missing();
    return r;
}

BoundReport exact_operator_expectations(const DensityMatrix &rho, const GhzSpec &spec) {
    spec.validate();
    if (rho.width() != spec.n) throw std::invalid_argument("density matrix width does not match the target");
    const double sgx = expect(rho, sgx_operator(spec.n));
    const double sgz = expect(rho, sgz_operator(spec.n));
    BoundReport r;
    r.sgx = exact(sgx);
    r.sgz = exact(sgz);
    r.lower_bound = exact(0.5 * (sgx + sgz - (static_cast<double>(spec.n) - 2)));
    r.msp = exact(expect(rho, support_projector(ghz_state_vector(spec.n))));
    r.sj2 = missing();
    r.somma_lower_bound = missing();
    return r;
}

}  // namespace qfb
