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

#include "qfb/statevector.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qfb/rng.h"

namespace qfb {
namespace {

constexpr Complex kI{0.0, 1.0};

template <typename Body>
inline void for_each_pair(size_t dim, uint64_t mask, Body body) {
    for (uint64_t base = 0; base < dim; base += 2 * mask) {
        for (uint64_t off = 0; off < mask; ++off) {
            body(base + off, base + off + mask);
        }
    }
}

void apply_ry(std::span<Complex> amps, uint32_t q, double theta, uint64_t ctrl_mask) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    for_each_pair(amps.size(), uint64_t{1} << q, [&](uint64_t i0, uint64_t i1) {
        if ((i0 & ctrl_mask) != ctrl_mask) return;
        const Complex a0 = amps[i0];
        const Complex a1 = amps[i1];
        amps[i0] = c * a0 - s * a1;
        amps[i1] = s * a0 + c * a1;
    });
}

}  // namespace

void apply_gate(std::span<Complex> amps, const Gate &g) {
    const uint64_t tmask = uint64_t{1} << g.target;
    const size_t dim = amps.size();
    switch (g.kind) {
        case GateKind::X:
            for_each_pair(dim, tmask, [&](uint64_t i0, uint64_t i1) { std::swap(amps[i0], amps[i1]); });
            break;
        case GateKind::H: {
            const double r = M_SQRT1_2;
            for_each_pair(dim, tmask, [&](uint64_t i0, uint64_t i1) {
                const Complex a0 = amps[i0];
                const Complex a1 = amps[i1];
                amps[i0] = r * (a0 + a1);
                amps[i1] = r * (a0 - a1);
            });
            break;
        }
        case GateKind::S:
            for_each_pair(dim, tmask, [&](uint64_t, uint64_t i1) { amps[i1] *= kI; });
            break;
        case GateKind::Sdg:
            for_each_pair(dim, tmask, [&](uint64_t, uint64_t i1) { amps[i1] *= -kI; });
            break;
        case GateKind::Ry:
            apply_ry(amps, g.target, g.theta, 0);
            break;
        case GateKind::CNOT: {
            const uint64_t cmask = uint64_t{1} << g.control;
            for_each_pair(dim, tmask, [&](uint64_t i0, uint64_t i1) {
                if (i0 & cmask) std::swap(amps[i0], amps[i1]);
            });
            break;
        }
        case GateKind::CRy:
            apply_ry(amps, g.target, g.theta, uint64_t{1} << g.control);
            break;
    }
}

void apply_pauli(std::span<Complex> amps, uint32_t qubit, Pauli p) {
    const uint64_t mask = uint64_t{1} << qubit;
    switch (p) {
        case Pauli::I:
            break;
        case Pauli::X:
            for_each_pair(amps.size(), mask, [&](uint64_t i0, uint64_t i1) { std::swap(amps[i0], amps[i1]); });
            break;
        case Pauli::Y:
            for_each_pair(amps.size(), mask, [&](uint64_t i0, uint64_t i1) {
                const Complex a0 = amps[i0];
                amps[i0] = -kI * amps[i1];
                amps[i1] = kI * a0;
            });
            break;
        case Pauli::Z:
            for_each_pair(amps.size(), mask, [&](uint64_t, uint64_t i1) { amps[i1] = -amps[i1]; });
            break;
    }
}

StateVector::StateVector(uint32_t width) : width_(width) {
    if (width > kMaxStatevectorWidth) {
        throw std::invalid_argument("statevector width " + std::to_string(width) + " exceeds limit " +
                                    std::to_string(kMaxStatevectorWidth));
    }
    amps_.assign(size_t{1} << width, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(uint32_t width, std::vector<Complex> amplitudes) : width_(width) {
    if (width > kMaxStatevectorWidth) {
        throw std::invalid_argument("statevector width exceeds limit");
    }
    if (amplitudes.size() != (size_t{1} << width)) {
        throw std::invalid_argument("amplitude count does not match 2^width");
    }
    amps_ = std::move(amplitudes);
}

void StateVector::apply(const Circuit &c) {
    if (c.width() != width_) {
        throw std::invalid_argument("circuit width does not match state width");
    }
    for (const auto &g : c.gates()) {
        apply_gate(amps_, g);
    }
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) total += std::norm(a);
    return total;
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.width_ != width_) {
        throw std::invalid_argument("inner product of states with different widths");
    }
    Complex total = 0.0;
    for (size_t i = 0; i < amps_.size(); ++i) total += std::conj(amps_[i]) * other.amps_[i];
    return total;
}

double StateVector::fidelity(const StateVector &other) const { return std::norm(inner(other)); }

std::string to_bitstring(uint64_t outcome, uint32_t width) {
    std::string s(width, '0');
    for (uint32_t q = 0; q < width; ++q) {
        if ((outcome >> q) & 1) s[width - 1 - q] = '1';
    }
    return s;
}

uint64_t parse_bitstring(std::string_view bits) {
    if (bits.size() > 64) throw std::invalid_argument("bit string longer than 64");
    uint64_t v = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("bit string contains '" + std::string(1, ch) + "'");
        }
        v = (v << 1) | static_cast<uint64_t>(ch == '1');
    }
    return v;
}

void NoiseSpec::validate() const {
    auto ok = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!ok(p1) || !ok(p2)) {
        throw std::invalid_argument("depolarizing probabilities must lie in [0, 1]");
    }
}

StateVector run(const Circuit &c) {
    StateVector sv(c.width());
    sv.apply(c);
    return sv;
}

Circuit rotate_to_basis(const Circuit &c, MeasurementBasis b) {
    Circuit out = c;
    for (uint32_t q = 0; q < c.width(); ++q) {
        if (b == MeasurementBasis::Y) out.append(Gate::sdg(q));
        if (b != MeasurementBasis::Z) out.append(Gate::h(q));
    }
    return out;
}

void rotate_state_to_basis(StateVector &sv, MeasurementBasis b) {
    for (uint32_t q = 0; q < sv.width(); ++q) {
        if (b == MeasurementBasis::Y) sv.apply(Gate::sdg(q));
        if (b != MeasurementBasis::Z) sv.apply(Gate::h(q));
    }
}

OutcomeSampler::OutcomeSampler(const StateVector &sv) {
    cdf_.resize(sv.dim());
    double acc = 0.0;
    for (size_t i = 0; i < sv.dim(); ++i) {
        acc += std::norm(sv[i]);
        cdf_[i] = acc;
    }
}

uint64_t OutcomeSampler::draw(double u) const {
    const double target = u * cdf_.back();
    // upper_bound never lands on a zero-probability entry: its cdf equals
    // the previous one.
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), target);
    if (it == cdf_.end()) {
        it = std::lower_bound(cdf_.begin(), cdf_.end(), cdf_.back());
    }
    return static_cast<uint64_t>(it - cdf_.begin());
}

ShotTable sample(const StateVector &sv, size_t shots, uint64_t seed, MeasurementBasis basis, std::string label) {
    if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
    OutcomeSampler sampler(sv);
    ShotTable table{basis, sv.width(), {}, seed, std::move(label)};
    table.outcomes.reserve(shots);
    for (size_t i = 0; i < shots; ++i) {
        table.outcomes.push_back(sampler.draw(to_unit_interval(counter_bits(seed, i))));
    }
    return table;
}

std::vector<PauliEvent> draw_pauli_events(const Circuit &c, const NoiseSpec &noise, uint64_t seed) {
    std::vector<PauliEvent> events;
    if (noise.is_noiseless()) return events;
    CounterRng rng(seed);
    const auto &gates = c.gates();
    for (size_t i = 0; i < gates.size(); ++i) {
        const bool two = is_two_qubit(gates[i].kind);
        const double p = two ? noise.p2 : noise.p1;
        if (p <= 0.0) continue;
        if (rng.uniform() < p) {
            auto code = static_cast<uint8_t>(rng.below(two ? 16 : 4));
            if (code != 0) events.push_back({i, code});
        }
    }
    return events;
}

StateVector run_with_events(const Circuit &c, std::span<const PauliEvent> events) {
    StateVector sv(c.width());
    auto next = events.begin();
    const auto &gates = c.gates();
    for (size_t i = 0; i < gates.size(); ++i) {
        sv.apply(gates[i]);
        for (; next != events.end() && next->gate_index == i; ++next) {
            const Gate &g = gates[i];
            if (is_two_qubit(g.kind)) {
                sv.apply_pauli(g.control, static_cast<Pauli>(next->code & 3));
                sv.apply_pauli(g.target, static_cast<Pauli>(next->code >> 2));
            } else {
                sv.apply_pauli(g.target, static_cast<Pauli>(next->code));
            }
        }
    }
    return sv;
}

StateVector run_trajectory(const Circuit &c, const NoiseSpec &noise, uint64_t seed) {
    noise.validate();
    auto events = draw_pauli_events(c, noise, seed);
    return run_with_events(c, events);
}

}  // namespace qfb
