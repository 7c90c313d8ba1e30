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

#include "qfb/density.h"

#include <stdexcept>
#include <string>

namespace qfb {
namespace {

void check_width(uint32_t width) {
    if (width > kMaxDensityWidth) {
        throw std::invalid_argument("density matrix width " + std::to_string(width) + " exceeds limit " +
                                    std::to_string(kMaxDensityWidth));
    }
}

std::span<Complex> column(Eigen::MatrixXcd &m, Eigen::Index j) {
    return {m.col(j).data(), static_cast<size_t>(m.rows())};
}

}  // namespace

DensityMatrix::DensityMatrix(uint32_t width) : width_(width) {
    check_width(width);
    const Eigen::Index d = Eigen::Index{1} << width;
    rho_ = Eigen::MatrixXcd::Zero(d, d);
    rho_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(uint32_t width, Eigen::MatrixXcd rho) : width_(width), rho_(std::move(rho)) {
    check_width(width);
    const Eigen::Index d = Eigen::Index{1} << width;
    if (rho_.rows() != d || rho_.cols() != d) {
        throw std::invalid_argument("density matrix shape does not match 2^width");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    check_width(psi.width());
    auto amps = psi.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
    return DensityMatrix(psi.width(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(uint32_t width) {
    check_width(width);
    const Eigen::Index d = Eigen::Index{1} << width;
    return DensityMatrix(width, Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

// Applies column_op to every column (U rho), then again to the columns of the
// adjoint, giving U rho U^dagger.
template <typename Fn>
void DensityMatrix::conjugate(Fn &&column_op) {
    for (Eigen::Index j = 0; j < rho_.cols(); ++j) column_op(column(rho_, j));
    rho_.adjointInPlace();
    for (Eigen::Index j = 0; j < rho_.cols(); ++j) column_op(column(rho_, j));
    rho_.adjointInPlace();
}

void DensityMatrix::apply(const Gate &g) {
    if (g.target >= width_ || (is_two_qubit(g.kind) && g.control >= width_)) {
        throw std::invalid_argument("gate out of range for density matrix");
    }
    conjugate([&](std::span<Complex> col) { apply_gate(col, g); });
}

void DensityMatrix::apply_pauli(uint32_t qubit, Pauli p) {
    if (p == Pauli::I) return;
    conjugate([&](std::span<Complex> col) { qfb::apply_pauli(col, qubit, p); });
}

void DensityMatrix::depolarize(std::span<const uint32_t> qubits, double p) {
    if (p < 0 || p > 1) throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    if (qubits.empty() || qubits.size() > 2) throw std::invalid_argument("depolarize acts on one or two qubits");
    if (p == 0) return;
    const uint32_t strings = qubits.size() == 1 ? 4 : 16;
    Eigen::MatrixXcd twirl = Eigen::MatrixXcd::Zero(rho_.rows(), rho_.cols());
    for (uint32_t code = 0; code < strings; ++code) {
        DensityMatrix term = *this;
        term.apply_pauli(qubits[0], static_cast<Pauli>(code & 3));
        if (qubits.size() == 2) term.apply_pauli(qubits[1], static_cast<Pauli>(code >> 2));
        twirl += term.rho_;
    }
    rho_ = (1 - p) * rho_ + (p / strings) * twirl;
}

double DensityMatrix::hermiticity_error() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }

double DensityMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd h = (rho_ + rho_.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

DensityMatrix density_oracle(const Circuit &c, const NoiseSpec &noise) {
    check_width(c.width());
    noise.validate();
    DensityMatrix rho(c.width());
    for (const auto &g : c.gates()) {
        rho.apply(g);
        const auto qubits = g.qubits();
        rho.depolarize(qubits, is_two_qubit(g.kind) ? noise.p2 : noise.p1);
    }
    return rho;
}

double exact_fidelity(const DensityMatrix &rho, const StateVector &target) {
    if (rho.width() != target.width()) throw std::invalid_argument("fidelity: width mismatch");
    auto amps = target.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(amps.data(), static_cast<Eigen::Index>(amps.size()));
    return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

double exact_msp(const DensityMatrix &rho, const StateVector &target) {
    if (rho.width() != target.width()) throw std::invalid_argument("msp: width mismatch");
    double total = 0;
    for (size_t x = 0; x < target.dim(); ++x) {
        if (std::abs(target[x]) > 1e-12) total += rho.matrix()(x, x).real();
    }
    return total;
}

}  // namespace qfb
