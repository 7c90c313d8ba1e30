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

#include <gtest/gtest.h>

#include "qfb/rng.h"

using namespace qfb;

namespace {

uint64_t bits(const char *s) { return parse_bitstring(s); }

std::vector<double> eigenvalues(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    auto v = solver.eigenvalues();
    return {v.data(), v.data() + v.size()};
}

double quad(const Eigen::MatrixXcd &op, const StateVector &psi) {
    auto a = psi.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(a.data(), static_cast<Eigen::Index>(a.size()));
    return (v.adjoint() * op * v)(0, 0).real();
}

ShotTable table_of(MeasurementBasis b, uint32_t n, std::vector<uint64_t> outcomes) {
    return {b, n, std::move(outcomes), 0, "t"};
}

std::vector<ShotTable> sampled_tables(const Circuit &c, const NoiseSpec &noise, size_t shots, uint64_t seed,
                                      std::initializer_list<MeasurementBasis> bases) {
    auto rho = density_oracle(c, noise);
    std::vector<ShotTable> out;
    for (auto b : bases) {
        // Sample the exact rotated mixed state's diagonal.
        auto rotated = rho;
        for (uint32_t q = 0; q < c.width(); ++q) {
            if (b == MeasurementBasis::Y) rotated.apply(Gate::sdg(q));
            if (b != MeasurementBasis::Z) rotated.apply(Gate::h(q));
        }
        std::vector<double> cdf(rotated.dim());
        double acc = 0;
        for (size_t x = 0; x < cdf.size(); ++x) cdf[x] = acc += std::max(0.0, rotated.matrix()(x, x).real());
        ShotTable t{b, c.width(), {}, seed, c.label()};
        CounterRng rng(derive_key(seed, basis_char(b)));
        for (size_t i = 0; i < shots; ++i) {
            double u = rng.uniform() * acc;
            t.outcomes.push_back(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

TEST(per_shot, sjz) {
    ASSERT_EQ(sjz_per_shot(bits("0101"), 2), 1.0);
    ASSERT_EQ(sjz_per_shot(bits("1101"), 2), 0.0);
}

TEST(per_shot, somma) {
    ASSERT_EQ(somma_sjz_per_shot(bits("01010"), 5, 2), 1.0);
    ASSERT_EQ(somma_sjz_per_shot(bits("01110"), 5, 2), 0.0);
    ASSERT_EQ(somma_sjz_per_shot(bits("01000"), 5, 2), 0.0);
    ASSERT_EQ(somma_sjz_per_shot(bits("11110"), 5, 2), -3.0);
}

TEST(per_shot, jsq) {
    ASSERT_EQ(jsq_per_shot(bits("0000"), 4), 16.0);
    ASSERT_EQ(jsq_per_shot(bits("0101"), 4), 0.0);
    ASSERT_EQ(jsq_per_shot(bits("0111"), 4), 4.0);
}

TEST(per_shot, ghz) {
    ASSERT_EQ(parity_per_shot(bits("0011")), 1.0);
    ASSERT_EQ(parity_per_shot(bits("0111")), -1.0);
    ASSERT_EQ(zz_sum_per_shot(bits("0101"), 4), -3.0);
    ASSERT_EQ(zz_sum_per_shot(bits("0000"), 4), 3.0);
    ASSERT_EQ(zz_sum_per_shot(bits("0011"), 4), 1.0);
    ASSERT_THROW(zz_sum_per_shot(0, 1), std::invalid_argument);
    ASSERT_EQ(ghz_support_per_shot(bits("1111"), 4), 1.0);
    ASSERT_EQ(ghz_support_per_shot(bits("0111"), 4), 0.0);
}

TEST(per_shot, improved_dominates_somma_exhaustive) {
    for (uint32_t n = 1; n <= 8; ++n) {
        for (uint32_t k = 0; k <= n; ++k) {
            for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
                ASSERT_GE(sjz_per_shot(x, k), somma_sjz_per_shot(x, n, k));
            }
        }
    }
}

TEST(per_shot, noiseless_dicke_jsq) {
    auto t = sample(dicke_state_vector({6, 3}), 1000, 1);
    for (auto o : t.outcomes) {
        ASSERT_EQ(jsq_per_shot(o, 6), 0.0);
        ASSERT_EQ(sjz_per_shot(o, 3), 1.0);
    }
    auto t2 = sample(dicke_state_vector({7, 2}), 200, 1);
    for (auto o : t2.outcomes) ASSERT_EQ(jsq_per_shot(o, 7), 9.0);
}

TEST(quantum_numbers, values) {
    auto q = DickeQuantumNumbers::of({9, 3});
    ASSERT_EQ(q.j, 9);
    ASSERT_EQ(q.jz, 3);
    ASSERT_EQ(DickeQuantumNumbers::of({4, 4}).jz, -4);
}

TEST(operators, angular_momentum_eigenvalues) {
    for (uint32_t n = 1; n <= 6; ++n) {
        auto j = angular_momentum(n);
        for (uint32_t k = 0; k <= n; ++k) {
            auto d = dicke_state_vector({n, k});
            ASSERT_NEAR(quad(j.jz, d), double(n) - 2.0 * k, 1e-10);
            ASSERT_NEAR(quad(j.j2, d), double(n) * (n + 2), 1e-10);
            // Eigenvector, not only expectation: variance vanishes.
            ASSERT_NEAR(quad(j.j2 * j.j2, d), std::pow(double(n) * (n + 2), 2), 1e-8);
        }
    }
}

TEST(operators, sjz_is_weight_indicator) {
    for (uint32_t n = 1; n <= 6; ++n) {
        for (uint32_t k = 0; k <= n; ++k) {
            auto op = sjz_operator(n, k);
            for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
                ASSERT_NEAR(op(x, x).real(), sjz_per_shot(x, k), 1e-9);
                ASSERT_NEAR(somma_sjz_operator(n, k)(x, x).real(), somma_sjz_per_shot(x, n, k), 1e-12);
            }
        }
    }
}

TEST(operators, dicke_witness_spectrum) {
    for (uint32_t n = 1; n <= 6; ++n) {
        for (uint32_t k = 0; k <= n; ++k) {
            Eigen::MatrixXcd w = sjz_operator(n, k) + sj2_operator(n);
            auto ev = eigenvalues(w);
            std::sort(ev.begin(), ev.end());
            ASSERT_NEAR(ev.back(), 1.0, 1e-9) << n << "," << k;
            if (ev.size() > 1) ASSERT_LE(ev[ev.size() - 2], 1e-9) << n << "," << k;
            ASSERT_NEAR(quad(w, dicke_state_vector({n, k})), 1.0, 1e-10);
        }
    }
}

TEST(operators, ghz_witness_spectrum) {
    for (uint32_t n = 2; n <= 6; ++n) {
        Eigen::MatrixXcd w = ghz_witness_operator(n);
        auto ev = eigenvalues(w);
        std::sort(ev.begin(), ev.end());
        ASSERT_NEAR(ev.back(), 1.0, 1e-10);
        ASSERT_LE(ev[ev.size() - 2], 1e-10);
        ASSERT_NEAR(quad(w, ghz_state_vector(n)), 1.0, 1e-10);
        ASSERT_NEAR(quad(sgx_operator(n), ghz_state_vector(n)), 1.0, 1e-12);
        ASSERT_NEAR(quad(sgz_operator(n), ghz_state_vector(n)), n - 1.0, 1e-12);
    }
}

TEST(exact_expectations, pure_targets) {
    for (uint32_t n = 2; n <= 6; ++n) {
        for (uint32_t k = 0; k <= n; ++k) {
            auto r = exact_operator_expectations(DensityMatrix::pure(dicke_state_vector({n, k})), DickeSpec{n, k});
            ASSERT_NEAR(r.lower_bound.value, 1.0, 1e-10);
            ASSERT_NEAR(r.msp.value, 1.0, 1e-10);
            ASSERT_NEAR(r.sj2.value, 0.0, 1e-10);
        }
        auto g = exact_operator_expectations(DensityMatrix::pure(ghz_state_vector(n)), GhzSpec{n});
        ASSERT_NEAR(g.lower_bound.value, 1.0, 1e-10);
        ASSERT_NEAR(g.msp.value, 1.0, 1e-10);
        ASSERT_TRUE(std::isnan(g.somma_lower_bound.value));
    }
    ASSERT_THROW(exact_operator_expectations(DensityMatrix(3), DickeSpec{4, 2}), std::invalid_argument);
}

TEST(exact_expectations, maximally_mixed) {
    auto d = exact_operator_expectations(DensityMatrix::maximally_mixed(4), DickeSpec{4, 2});
    ASSERT_NEAR(d.lower_bound.value, -0.375, 1e-12);
    for (uint32_t n = 2; n <= 6; ++n) {
        auto mm = DensityMatrix::maximally_mixed(n);
        for (uint32_t k = 0; k <= n; ++k) {
            auto r = exact_operator_expectations(mm, DickeSpec{n, k});
            ASSERT_NEAR(r.lower_bound.value, double(binomial(n, k)) / (1 << n) + (1.0 - n) / 4, 1e-10);
        }
        auto g = exact_operator_expectations(mm, GhzSpec{n});
        ASSERT_NEAR(g.lower_bound.value, -(n - 2.0) / 2, 1e-10);
        ASSERT_NEAR(g.sgx.value, 0.0, 1e-12);
        ASSERT_NEAR(g.sgz.value, 0.0, 1e-12);
    }
}

TEST(exact_expectations, sandwich_under_noise) {
    for (double p : {0.0, 0.01, 0.05, 0.1, 0.2}) {
        for (uint32_t n = 2; n <= 5; ++n) {
            for (uint32_t k = 1; k <= n / 2; ++k) {
                DickeSpec spec{n, k};
                auto rho = density_oracle(build_dicke_circuit(spec), {p / 10, p});
                auto r = exact_operator_expectations(rho, spec);
                const double f = exact_fidelity(rho, dicke_state_vector(spec));
                ASSERT_LE(r.lower_bound.value, f + 1e-10);
                ASSERT_LE(f, r.msp.value + 1e-10);
                ASSERT_LE(r.somma_lower_bound.value, r.lower_bound.value + 1e-12);
            }
            auto rho = density_oracle(build_ghz({n, GhzLayout::Linear}), {p / 10, p});
            auto g = exact_operator_expectations(rho, GhzSpec{n});
            const double f = exact_fidelity(rho, ghz_state_vector(n));
            ASSERT_LE(g.lower_bound.value, f + 1e-10);
            ASSERT_LE(f, g.msp.value + 1e-10);
        }
    }
}

TEST(shot_bounds, hand_tables) {
    // Z shots "0011", "0111"; X shots "0000"; Y shots "0101" for D(4,2).
    std::vector<ShotTable> t = {table_of(MeasurementBasis::Z, 4, {bits("0011"), bits("0111")}),
                                table_of(MeasurementBasis::X, 4, {bits("0000")}),
                                table_of(MeasurementBasis::Y, 4, {bits("0101")})};
    auto r = dicke_lower_bound(t, {4, 2});
    // sjz = 0.5, jsq_z = (0 + 4)/2 = 2, jsq_x = 16, jsq_y = 0.
    ASSERT_DOUBLE_EQ(r.msp.value, 0.5);
    ASSERT_DOUBLE_EQ(r.sj2.value, (16 + 0 + 2 - 24) / 16.0);
    ASSERT_DOUBLE_EQ(r.lower_bound.value, 0.5 + r.sj2.value);
    ASSERT_DOUBLE_EQ(r.somma_lower_bound.value, 0.5 + r.sj2.value);
    ASSERT_EQ(r.shots_per_setting, 2u);
    ASSERT_LE(r.lower_bound.ci.lo, r.lower_bound.value);
    ASSERT_GE(r.lower_bound.ci.hi, r.lower_bound.value);
}

TEST(shot_bounds, missing_or_empty) {
    std::vector<ShotTable> zx = {table_of(MeasurementBasis::Z, 4, {1}), table_of(MeasurementBasis::X, 4, {1})};
    ASSERT_THROW(dicke_lower_bound(zx, {4, 2}), std::invalid_argument);
    ASSERT_NO_THROW(ghz_lower_bound(zx, 4));
    std::vector<ShotTable> z_only = {table_of(MeasurementBasis::Z, 4, {1})};
    ASSERT_THROW(ghz_lower_bound(z_only, 4), std::invalid_argument);
    std::vector<ShotTable> empty = {table_of(MeasurementBasis::Z, 4, {}), table_of(MeasurementBasis::X, 4, {1})};
    ASSERT_THROW(ghz_lower_bound(empty, 4), std::invalid_argument);
    std::vector<ShotTable> wrong = {table_of(MeasurementBasis::Z, 3, {1}), table_of(MeasurementBasis::X, 3, {1})};
    ASSERT_THROW(ghz_lower_bound(wrong, 4), std::invalid_argument);
    ASSERT_THROW(ghz_sgx(table_of(MeasurementBasis::X, 4, {})), std::invalid_argument);
}

TEST(shot_bounds, ghz_sg_terms) {
    ASSERT_EQ(ghz_sgx(table_of(MeasurementBasis::X, 4, {bits("0011")})), 1.0);
    ASSERT_EQ(ghz_sgz(table_of(MeasurementBasis::Z, 4, {bits("0101")})), -3.0);
    auto x = sample(run(rotate_to_basis(build_ghz({4}), MeasurementBasis::X)), 500, 1, MeasurementBasis::X);
    ASSERT_EQ(ghz_sgx(x), 1.0);
}

TEST(shot_bounds, converge_to_operator_values) {
    const size_t shots = 20000;
    for (double p : {0.0, 0.05}) {
        DickeSpec spec{4, 2};
        auto c = build_dicke_circuit(spec);
        auto tables = sampled_tables(c, {p / 10, p}, shots, 3, {MeasurementBasis::X, MeasurementBasis::Y,
                                                                MeasurementBasis::Z});
        auto exact = exact_operator_expectations(density_oracle(c, {p / 10, p}), spec);
        auto f = dicke_features(tables, spec);
        auto settings = f.settings();
        BootstrapOptions opt{0.68, 300, 9};
        const double lb = combine(settings, DickeFeatures::lower_bound(4));
        const double sigma = bootstrap_sigma(settings, DickeFeatures::lower_bound(4), opt);
        ASSERT_NEAR(lb, exact.lower_bound.value, 5 * std::max(sigma, 1e-12));
        const double msp = combine(settings, DickeFeatures::msp());
        ASSERT_NEAR(msp, exact.msp.value, 5 * std::max(bootstrap_sigma(settings, DickeFeatures::msp(), opt), 1e-12));

        auto g = build_ghz({5, GhzLayout::Logarithmic});
        auto gt = sampled_tables(g, {p / 10, p}, shots, 4, {MeasurementBasis::X, MeasurementBasis::Z});
        auto gex = exact_operator_expectations(density_oracle(g, {p / 10, p}), GhzSpec{5});
        auto gf = ghz_features(gt, 5);
        auto gs = gf.settings();
        const double glb = combine(gs, GhzFeatures::lower_bound(5));
        ASSERT_NEAR(glb, gex.lower_bound.value,
                    5 * std::max(bootstrap_sigma(gs, GhzFeatures::lower_bound(5), opt), 1e-12));
    }
}

TEST(shot_bounds, msp_equals_sjz_mean) {
    auto tables = sampled_tables(build_dicke_circuit({5, 2}), {0.01, 0.1}, 3000, 8,
                                 {MeasurementBasis::X, MeasurementBasis::Y, MeasurementBasis::Z});
    auto r = dicke_lower_bound(tables, {5, 2});
    double s = 0;
    for (auto o : tables[2].outcomes) s += sjz_per_shot(o, 2);
    ASSERT_DOUBLE_EQ(r.msp.value, s / 3000);
    ASSERT_GE(r.lower_bound.value, r.somma_lower_bound.value);
}

TEST(shot_bounds, normal_ci_mode) {
    auto tables = sampled_tables(build_ghz({4}), {0.01, 0.1}, 4000, 2, {MeasurementBasis::X, MeasurementBasis::Z});
    CiOptions normal{CiMethod::Normal, {}};
    auto a = ghz_lower_bound(tables, 4, normal);
    auto b = ghz_lower_bound(tables, 4);
    ASSERT_DOUBLE_EQ(a.lower_bound.value, b.lower_bound.value);
    ASSERT_NEAR(a.lower_bound.ci.half_width(), b.lower_bound.ci.half_width(), 0.2 * b.lower_bound.ci.half_width());
}
