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

#include "qfb/dicke.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qfb {

void DickeSpec::validate() const {
    if (n < 1) throw std::invalid_argument("Dicke state needs n >= 1");
    if (k > n) {
        throw std::invalid_argument("Dicke weight " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
}

void UnitaryRange::validate() const {
    if (n < 1 || k_lo > k_hi || k_hi > n) {
        throw std::invalid_argument("invalid Dicke unitary range (n=" + std::to_string(n) + ", k_lo=" +
                                    std::to_string(k_lo) + ", k_hi=" + std::to_string(k_hi) + ")");
    }
}

uint64_t binomial(uint32_t n, uint32_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint32_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

StateVector dicke_state_vector(const DickeSpec &spec) {
    spec.validate();
    StateVector sv(spec.n);
    auto amps = sv.amplitudes();
    const double a = 1.0 / std::sqrt(static_cast<double>(binomial(spec.n, spec.k)));
    for (uint64_t x = 0; x < amps.size(); ++x) {
        amps[x] = std::popcount(x) == static_cast<int>(spec.k) ? a : 0.0;
    }
    return sv;
}

std::vector<WeightRotation> weight_distribution_angles(uint32_t n1, uint32_t n2, uint32_t k) {
    if (k > n1 + n2) {
        throw std::invalid_argument("weight " + std::to_string(k) + " exceeds register size " +
                                    std::to_string(n1 + n2));
    }
    if (k > std::min(n1, n2)) {
        throw std::invalid_argument("weight " + std::to_string(k) + " must fit in both halves (" +
                                    std::to_string(n1) + ", " + std::to_string(n2) + ")");
    }
    std::vector<uint64_t> suffix(k + 2, 0);
    for (uint32_t l = k + 1; l-- > 0;) {
        suffix[l] = suffix[l + 1] + binomial(n2, k - l) * binomial(n1, l);
    }
    std::vector<WeightRotation> out;
    if (k == 0) return out;
    auto make = [](uint64_t num, uint64_t den) {
        double ratio = static_cast<double>(num) / static_cast<double>(den);
        return WeightRotation{num, den, 2.0 * std::acos(std::sqrt(ratio))};
    };
    out.push_back(make(suffix[0] - suffix[1], suffix[0]));
    for (uint32_t j = 1; j < k; ++j) {
        out.push_back(make(suffix[j + 1], suffix[j]));
    }
    return out;
}

namespace {

int64_t choose2(int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Builds the unary-to-Dicke map on a line of qubits with the unary weight
// packed at the low end (positions 0..l-1 set). Each split-and-shift level
// m = n..2 walks a triple (p, q, r) = (i, i+1, i+2) down the sub-register:
// pattern 100 is the weight boundary and gets the split rotation, pattern
// 101 is a hole travelling towards position 0 and gets swapped. The set of
// reachable basis states is tracked so each step uses the cheapest block
// that is exact on it.
class UnaryToDicke {
   public:
    UnaryToDicke(Circuit &out, std::span<const uint32_t> line) : out_(out), line_(line) {}

    void build(uint32_t w_lo, uint32_t w_hi) {
        const auto n = static_cast<uint32_t>(line_.size());
        std::vector<uint32_t> support;
        for (uint32_t w = w_lo; w <= w_hi; ++w) {
            support.push_back(w == 32 ? ~0u : (1u << w) - 1);
        }
        for (uint32_t m = n; m >= 2; --m) {
            const uint32_t offset = n - m;
            for (uint32_t i = m - 1; i-- > 0;) {
                const uint32_t p = offset + i;
                const bool has_r = i + 2 < m;
                step(support, p, has_r, static_cast<double>(i + 1) / m);
            }
        }
    }

   private:
    static bool bit(uint32_t s, uint32_t pos) { return (s >> pos) & 1u; }

    void step(std::vector<uint32_t> &support, uint32_t p, bool has_r, double stay_prob) {
        const uint32_t q = p + 1;
        const uint32_t r = p + 2;
        bool split = false, shift = false, all_p_set = true;
        for (uint32_t s : support) {
            const bool bp = bit(s, p), bq = bit(s, q), br = has_r && bit(s, r);
            if (!bp && bq) throw std::logic_error("unary-to-Dicke: unreachable pattern 01 encountered");
            all_p_set = all_p_set && bp;
            if (bp && !bq) (br ? shift : split) = true;
        }
        if (!split && !shift) return;

        const double a = std::sqrt(stay_prob);
        const double b = std::sqrt(1.0 - stay_prob);
        if (split && shift) {
            emit_split_shift(p, q, r, a, b);
        } else if (split) {
            emit_split(p, q, a, b);
        } else if (all_p_set) {
            emit_shift_from_full(p, q);
        } else {
            emit_swap(p, q);
        }

        std::vector<uint32_t> next;
        next.reserve(support.size() * 2);
        const uint32_t moved_mask = (1u << p) | (1u << q);
        for (uint32_t s : support) {
            const bool bp = bit(s, p), bq = bit(s, q), br = has_r && bit(s, r);
            if (bp && !bq) {
                next.push_back(s ^ moved_mask);
                if (!br) next.push_back(s);
            } else {
                next.push_back(s);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        support = std::move(next);
    }

    void cx(uint32_t c, uint32_t t) { out_.append(Gate::cnot(line_[c], line_[t])); }
    void ry(uint32_t t, double theta) { out_.append(Gate::ry(line_[t], theta)); }
    void x(uint32_t t) { out_.append(Gate::x(line_[t])); }

    // Givens rotation on (p, q): |10> -> a|10> + b|01>, fixes |00> and |11>.
    void emit_split(uint32_t p, uint32_t q, double a, double b) {
        const double phi = -std::atan2(b, a);
        ry(p, M_PI / 2);
        cx(p, q);
        ry(p, phi);
        ry(q, phi);
        cx(p, q);
        ry(p, -M_PI / 2);
    }

    // 100 -> a|100> + b|010>, 101 -> |011>, fixes 000, 110, 111.
    void emit_split_shift(uint32_t p, uint32_t q, uint32_t r, double a, double b) {
        const double half = std::atan2(a, b) / 2;
        cx(q, p);
        ry(q, half);
        cx(r, q);
        ry(q, half);
        cx(p, q);
        ry(q, -half);
        cx(r, q);
        ry(q, -half);
        cx(q, p);
    }

    // With p always set: 101 -> 011, fixes 110 and 111.
    void emit_shift_from_full(uint32_t p, uint32_t q) {
        cx(q, p);
        x(p);
        cx(p, q);
        x(q);
    }

    void emit_swap(uint32_t p, uint32_t q) {
        cx(p, q);
        cx(q, p);
        cx(p, q);
    }

    Circuit &out_;
    std::span<const uint32_t> line_;
};

void append_unary_to_dicke(Circuit &out, std::span<const uint32_t> line, uint32_t w_lo, uint32_t w_hi) {
    UnaryToDicke(out, line).build(w_lo, w_hi);
}

// Same map realised as X^n . V . X^n, where V runs on the reversed line with
// the complementary weight range. Lower weight bounds become upper bounds,
// which the split-and-shift cascade truncates for free.
void append_complemented(Circuit &out, std::span<const uint32_t> qubits, uint32_t k_lo, uint32_t k_hi) {
    const auto n = static_cast<uint32_t>(qubits.size());
    std::vector<uint32_t> reversed(qubits.rbegin(), qubits.rend());
    for (uint32_t q : qubits) out.append(Gate::x(q));
    append_unary_to_dicke(out, reversed, n - k_hi, n - k_lo);
    for (uint32_t q : qubits) out.append(Gate::x(q));
}

}  // namespace

void append_dicke_unitary(Circuit &out, std::span<const uint32_t> qubits, uint32_t k_lo, uint32_t k_hi) {
    const auto n = static_cast<uint32_t>(qubits.size());
    if (n > 31) throw std::invalid_argument("Dicke unitary limited to 31 qubits");
    UnitaryRange{n, k_lo, k_hi}.validate();
    if (n == 0) return;

    Circuit direct(out.width());
    append_unary_to_dicke(direct, qubits, k_lo, k_hi);
    Circuit complemented(out.width());
    append_complemented(complemented, qubits, k_lo, k_hi);
    out.append(cnot_count(complemented) < cnot_count(direct) ? complemented : direct);
}

Circuit build_dicke_unitary(const UnitaryRange &r) {
    r.validate();
    Circuit c(r.n, "U(" + std::to_string(r.n) + "," + std::to_string(r.k_lo) + "," + std::to_string(r.k_hi) + ")");
    std::vector<uint32_t> qubits(r.n);
    std::iota(qubits.begin(), qubits.end(), 0u);
    append_dicke_unitary(c, qubits, r.k_lo, r.k_hi);
    return c;
}

int64_t dicke_unitary_cnot_budget(const UnitaryRange &r) {
    r.validate();
    const int64_t n = r.n;
    return std::max<int64_t>(0, 5 * choose2(n - 1) + 2 * (n - 1) - 3 * choose2(n - r.k_hi - 1) - 5 * choose2(r.k_lo));
}

namespace {

// Steps (1)-(4) for 1 <= k <= floor(n/2); the final X layer is left to the
// caller. The first register holds floor(n/2) qubits.
Circuit build_dicke_body(uint32_t n, uint32_t k) {
    const uint32_t n1 = n / 2;
    const uint32_t n2 = n - n1;
    Circuit c(n);

    // (1) Unary weight l on the top l qubits of register one.
    const auto rotations = weight_distribution_angles(n1, n2, k);
    c.append(Gate::ry(n1 - 1, rotations[0].theta));
    for (uint32_t j = 1; j < k; ++j) {
        const uint32_t control = n1 - j;
        const uint32_t target = n1 - j - 1;
        const double half = rotations[j].theta / 2;
        c.append(Gate::ry(target, half));
        c.append(Gate::cnot(control, target));
        c.append(Gate::ry(target, -half));
    }

    // (2) Register two receives n2 - k + l ones, packed at its low end.
    for (uint32_t j = 0; j < n2 - k; ++j) c.append(Gate::x(n1 + j));
    for (uint32_t j = 1; j <= k; ++j) c.append(Gate::cnot(n1 - j, n1 + (n2 - k) + j - 1));

    // (3) Register one now holds n1 - l ones at its low end.
    for (uint32_t q = 0; q < n1; ++q) c.append(Gate::x(q));

    // (4) D(n1, n1 - l) (x) D(n2, n2 - k + l), summing to D(n, n - k).
    std::vector<uint32_t> reg1(n1), reg2(n2);
    std::iota(reg1.begin(), reg1.end(), 0u);
    std::iota(reg2.begin(), reg2.end(), n1);
    append_dicke_unitary(c, reg1, n1 - k, n1);
    append_dicke_unitary(c, reg2, n2 - k, n2);
    return c;
}

}  // namespace

Circuit build_dicke_circuit(const DickeSpec &spec) {
    spec.validate();
    const uint32_t n = spec.n;
    const uint32_t k = spec.k;
    const std::string label = "D-" + std::to_string(n) + "-" + std::to_string(k);

    if (k == 0 || k == n) {
        Circuit c(n, label);
        if (k == n) {
            for (uint32_t q = 0; q < n; ++q) c.append(Gate::x(q));
        }
        return c;
    }

    const uint32_t low = std::min(k, n - k);
    Circuit c = build_dicke_body(n, low);
    c.set_label(label);
    // The body prepares D(n, n - low); the last X layer maps it to D(n, low).
    if (k == low) {
        for (uint32_t q = 0; q < n; ++q) c.append(Gate::x(q));
    }
    return c;
}

int64_t expected_dicke_cnots(const DickeSpec &spec) {
    spec.validate();
    if (spec.k < 1 || spec.k > spec.n / 2) {
        throw std::invalid_argument("CNOT formula holds for 1 <= K <= floor(N/2)");
    }
    const int64_t n = spec.n, k = spec.k;
    return 5 * k * (n - k) - 3 * (n + k) + 5;
}

}  // namespace qfb
