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

#include "qfb/harness.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qfb/density.h"
#include "qfb/svg.h"

using namespace qfb;

namespace {

std::filesystem::path scratch(const std::string &name) {
    auto p = std::filesystem::temp_directory_path() / ("qfb_harness_" + name);
    std::filesystem::remove_all(p);
    return p;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

size_t count_lines(const std::string &s) { return std::count(s.begin(), s.end(), '\n'); }

size_t count_of(const std::string &s, const std::string &needle) {
    size_t n = 0;
    for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

ExperimentConfig small_dicke(const std::string &dir) {
    ExperimentConfig cfg;
    cfg.families = {Family::Dicke};
    cfg.n_min = 2;
    cfg.n_max = 5;
    cfg.noise = {0.001, 0.02};
    cfg.resamples = 200;
    cfg.output_dir = scratch(dir);
    cfg.threads = 1;
    return cfg;
}

}  // namespace

TEST(config, defaults_and_json) {
    auto cfg = config_from_json(R"({"families": ["dicke", "ghz-log"], "n_min": 3, "n_max": 5, "shots": 300,
                                   "noise": {"p2": 0.01}, "seed": 9, "output_dir": "x", "threads": 2})");
    ASSERT_EQ(cfg.families.size(), 2u);
    ASSERT_EQ(cfg.families[1], Family::GhzLog);
    ASSERT_EQ(cfg.n_min, 3u);
    ASSERT_EQ(cfg.shots.explicit_shots, 300u);
    ASSERT_EQ(cfg.noise.p1, 1e-4);
    ASSERT_EQ(cfg.noise.p2, 0.01);
    ASSERT_EQ(cfg.seed, 9u);
    auto again = config_from_json(config_to_json(cfg));
    ASSERT_EQ(config_to_json(again), config_to_json(cfg));
    ASSERT_EQ(config_from_json(R"({"shots": "default"})").shots.explicit_shots, 0u);
}

TEST(config, errors_before_work) {
    ASSERT_THROW(config_from_json(R"({"bogus": 1})"), std::invalid_argument);
    ASSERT_THROW(config_from_json(R"({"noise": {"p3": 1}})"), std::invalid_argument);
    ASSERT_THROW(config_from_json("[1,2]"), std::invalid_argument);
    ASSERT_THROW(config_from_json("{"), std::invalid_argument);
    ASSERT_THROW(config_from_json(R"({"families": ["w-state"]})"), std::invalid_argument);
    ExperimentConfig cfg;
    cfg.output_dir = scratch("caps");
    cfg.n_max = 13;
    ASSERT_THROW(run_sweep(cfg), std::invalid_argument);
    ASSERT_FALSE(std::filesystem::exists(cfg.output_dir));
    cfg.families = {Family::GhzLinear};
    cfg.n_max = 21;
    ASSERT_THROW(enumerate_jobs(cfg), std::invalid_argument);
    cfg.n_max = 20;
    ASSERT_NO_THROW(enumerate_jobs(cfg));
    cfg.noise.p2 = 2;
    ASSERT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(shots_rule, defaults) {
    ShotsRule rule;
    ASSERT_EQ(rule.shots_for(Family::Dicke, 10, 5), 1008u);
    ASSERT_EQ(rule.shots_for(Family::Dicke, 4, 1), 150u);
    ASSERT_EQ(rule.shots_for(Family::Dicke, 8, 3), 224u);
    ASSERT_EQ(rule.shots_for(Family::GhzLog, 20, 0), 200u);
    ASSERT_EQ(ShotsRule{77}.shots_for(Family::Dicke, 10, 5), 77u);
}

TEST(jobs, enumeration) {
    ExperimentConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 6;
    auto jobs = enumerate_jobs(cfg);
    ASSERT_EQ(jobs.size(), 9u);
    ASSERT_EQ(jobs[0].label, "D-2-1");
    cfg.k_max = 1;
    ASSERT_EQ(enumerate_jobs(cfg).size(), 5u);
    auto g = make_job(Family::GhzLog, 10);
    ASSERT_EQ(g.label, "GHZ-10-log");
    ASSERT_EQ(g.k_field(), "logarithmic");
    ASSERT_EQ(qasm_file_name(g), "ghz_10_logarithmic.qasm");
    ASSERT_EQ(qasm_file_name(make_job(Family::Dicke, 9, 3)), "dicke_9_3.qasm");
}

TEST(simulate_shots, reproducible_and_prefix_stable) {
    auto c = build_dicke_circuit({5, 2});
    auto a = simulate_shots(c, MeasurementBasis::X, 300, {0.01, 0.05}, 17);
    auto b = simulate_shots(c, MeasurementBasis::X, 100, {0.01, 0.05}, 17);
    ASSERT_TRUE(std::equal(b.outcomes.begin(), b.outcomes.end(), a.outcomes.begin()));
    ASSERT_EQ(a.outcomes, simulate_shots(c, MeasurementBasis::X, 300, {0.01, 0.05}, 17).outcomes);
    ASSERT_THROW(simulate_shots(c, MeasurementBasis::X, 0, {}, 1), std::invalid_argument);
}

TEST(simulate_shots, noiseless_support) {
    auto t = simulate_shots(build_dicke_circuit({6, 2}), MeasurementBasis::Z, 500, NoiseSpec::none(), 4);
    for (auto o : t.outcomes) ASSERT_EQ(std::popcount(o), 2);
}

TEST(simulate_shots, matches_mixed_state_distribution) {
    // Fresh trajectory per shot: outcome frequencies follow diag(rho).
    auto c = build_ghz({4, GhzLayout::Linear});
    NoiseSpec noise{0.02, 0.1};
    const size_t shots = 40000;
    auto t = simulate_shots(c, MeasurementBasis::Z, shots, noise, 8);
    auto rho = density_oracle(c, noise);
    std::vector<double> freq(16, 0.0);
    for (auto o : t.outcomes) freq[o] += 1.0 / shots;
    for (size_t x = 0; x < 16; ++x) {
        const double p = rho.matrix()(x, x).real();
        ASSERT_NEAR(freq[x], p, 5 * std::sqrt(p * (1 - p) / shots) + 1e-9) << x;
    }
}

TEST(sweep, outputs_and_determinism) {
    auto cfg = small_dicke("det1");
    auto files = run_sweep(cfg);
    auto summary = slurp(files.summary);
    ASSERT_EQ(summary.substr(0, summary.find('\n')), kSummaryHeader);
    ASSERT_EQ(count_lines(summary), 1 + 6u);

    std::istringstream in(summary);
    auto rows = read_summary_csv(in);
    ASSERT_EQ(rows.size(), 6u);
    for (size_t i = 1; i < rows.size(); ++i) {
        ASSERT_TRUE(rows[i - 1].cnots < rows[i].cnots ||
                    (rows[i - 1].cnots == rows[i].cnots && rows[i - 1].n <= rows[i].n));
    }
    for (const auto &r : rows) {
        ASSERT_LE(r.lb_ci_lo, r.lb);
        ASSERT_GE(r.lb_ci_hi, r.lb);
        ASSERT_LE(r.msp_ci_lo, r.msp);
        ASSERT_GE(r.msp_ci_hi, r.msp);
        ASSERT_GE(r.lb, r.somma_lb);
    }
    ASSERT_EQ(files.shots.size(), 6u);
    for (size_t i = 0; i < rows.size(); ++i) {
        auto shots = slurp(cfg.output_dir / "shots" / (rows[i].label + ".csv"));
        ASSERT_EQ(count_lines(shots), 1 + 3 * rows[i].shots);
    }

    // Same config in a second directory and with more threads: identical bytes.
    auto cfg2 = small_dicke("det2");
    cfg2.threads = 3;
    auto files2 = run_sweep(cfg2);
    ASSERT_EQ(slurp(files2.summary), summary);
    for (const auto &p : files.plots) {
        ASSERT_EQ(slurp(cfg2.output_dir / "plots" / p.filename()), slurp(p));
    }
    ASSERT_EQ(slurp(cfg2.output_dir / "shots" / "D-5-2.csv"), slurp(cfg.output_dir / "shots" / "D-5-2.csv"));
}

TEST(sweep, noiseless_dicke_lb_near_one) {
    auto cfg = small_dicke("noiseless");
    cfg.n_max = 6;
    cfg.noise = NoiseSpec::none();
    cfg.write_shots = cfg.write_plots = false;
    for (const auto &r : run_sweep_results(cfg)) {
        auto row = summary_row(r);
        ASSERT_EQ(row.msp, 1.0);
        const double hw = std::max(row.lb_ci_hi - row.lb, row.lb - row.lb_ci_lo);
        ASSERT_LE(std::abs(row.lb - 1.0), 5 * hw + 1e-12) << row.label;
    }
}

TEST(sweep, noiseless_ghz_log_msp_one) {
    ExperimentConfig cfg;
    cfg.families = {Family::GhzLog};
    cfg.n_min = 2;
    cfg.n_max = 20;
    cfg.noise = NoiseSpec::none();
    cfg.resamples = 100;
    cfg.output_dir = scratch("ghz");
    auto results = run_sweep_results(cfg);
    ASSERT_EQ(results.size(), 19u);
    for (const auto &r : results) {
        ASSERT_EQ(r.report.msp.value, 1.0) << r.job.label;
        ASSERT_EQ(r.report.sgz.value, r.job.n - 1.0);
        ASSERT_EQ(r.report.shots_per_setting, 200u);
    }
}

TEST(sweep, dicke_trend_negative) {
    auto cfg = small_dicke("trend");
    cfg.n_max = 6;
    cfg.noise = {0.0, 0.02};
    std::vector<double> cnots, lbs;
    for (const auto &r : run_sweep_results(cfg)) {
        cnots.push_back(static_cast<double>(r.cnots));
        lbs.push_back(r.report.lower_bound.value);
    }
    ASSERT_LT(spearman(cnots, lbs).rho, 0);
}

TEST(csv, round_trips) {
    SummaryRow r{"GHZ-4-lin", 4, "linear", 3, 4, 0.5, 0.4, 0.6, NAN, 0.9, 0.85, 0.95, 0.7, 2.5, 200, 12345};
    std::ostringstream out;
    write_summary_csv(out, {r});
    ASSERT_EQ(out.str(), std::string(kSummaryHeader) +
                             "\nGHZ-4-lin,4,linear,3,4,0.5,0.4,0.6,,0.9,0.85,0.95,0.7,2.5,200,12345\n");
    std::istringstream in(out.str());
    auto back = read_summary_csv(in);
    ASSERT_EQ(back.size(), 1u);
    ASSERT_EQ(back[0].k, "linear");
    ASSERT_TRUE(std::isnan(back[0].somma_lb));
    ASSERT_EQ(back[0].seed, 12345u);

    std::vector<ShotTable> tables = {{MeasurementBasis::X, 3, {0b001, 0b110}, 0, ""},
                                     {MeasurementBasis::Z, 3, {0b111}, 0, ""}};
    std::ostringstream s;
    write_shots_csv(s, "GHZ-3-lin", tables);
    ASSERT_EQ(s.str(), "label,basis,shot_index,bitstring\nGHZ-3-lin,X,0,001\nGHZ-3-lin,X,1,110\nGHZ-3-lin,Z,0,111\n");
    std::istringstream sin(s.str());
    std::string label;
    auto tb = read_shots_csv(sin, &label);
    ASSERT_EQ(label, "GHZ-3-lin");
    ASSERT_EQ(tb.size(), 2u);
    ASSERT_EQ(tb[0].outcomes, tables[0].outcomes);
    ASSERT_EQ(tb[1].basis, MeasurementBasis::Z);

    std::istringstream bad("label,n\n");
    ASSERT_THROW(read_summary_csv(bad), std::invalid_argument);
    std::istringstream bad_shots("label,basis,shot_index,bitstring\nA,Z,0,01\nA,Z,1,011\n");
    ASSERT_THROW(read_shots_csv(bad_shots), std::invalid_argument);
}

TEST(qasm_export, files) {
    ExperimentConfig cfg;
    cfg.families = {Family::GhzLinear};
    cfg.n_min = cfg.n_max = 3;
    cfg.output_dir = scratch("qasm");
    auto paths = export_all_qasm(cfg);
    ASSERT_EQ(paths.size(), 1u);
    auto text = slurp(paths[0]);
    ASSERT_EQ(count_of(text, "h q["), 1u);
    ASSERT_EQ(count_of(text, "cx q["), 2u);

    cfg.families = {Family::Dicke};
    cfg.n_min = 2;
    cfg.n_max = 2;
    auto d = export_all_qasm(cfg);
    ASSERT_EQ(d[0].filename(), "dicke_2_1.qasm");
    auto first = slurp(d[0]);
    ASSERT_EQ(count_of(first, "cx "), 1u);
    export_all_qasm(cfg);
    ASSERT_EQ(slurp(d[0]), first);
}

TEST(cumulative, final_matches_batch) {
    ExperimentConfig cfg;
    cfg.families = {Family::GhzLog};
    cfg.noise = {0.0, 0.02};
    cfg.resamples = 100;
    auto job = make_job(Family::GhzLog, 6);
    auto result = run_state(job, cfg);
    auto rep = cumulative_report(job, result.tables, {0.68, 50, 3});
    ASSERT_EQ(rep.series.size(), 4u);
    ASSERT_EQ(rep.series[0].quantity, "lb");
    ASSERT_EQ(rep.series[0].values.back(), result.report.lower_bound.value);
    ASSERT_EQ(rep.series[1].values.back(), result.report.msp.value);
    ASSERT_EQ(rep.series[0].shots.back(), 200u);
    std::ostringstream csv;
    write_cumulative_csv(csv, rep);
    ASSERT_EQ(count_lines(csv.str()), 1 + 4 * 199u);

    auto dj = make_job(Family::Dicke, 4, 2);
    auto dr = run_state(dj, cfg);
    auto drep = cumulative_report(dj, dr.tables, {0.68, 50, 3});
    ASSERT_EQ(drep.series.size(), 3u);
    ASSERT_EQ(drep.series[2].values.back(), dr.report.sj2.value);
    auto svg = cumulative_chart_svg(drep, "D-4-2");
    ASSERT_EQ(count_of(svg, "class=\"band\""), 2u);
}

TEST(plots, single_row_and_structure) {
    SummaryRow one{"D-2-1", 2, "1", 1, 4, 0.9, 0.85, 0.95, 0.88, 0.97, 0.95, 0.99, -0.07, NAN, 150, 1};
    auto svg = bounds_chart_svg({one}, "one");
    ASSERT_EQ(svg.rfind("<?xml", 0), 0u);
    ASSERT_NE(svg.find("</svg>"), std::string::npos);
    ASSERT_THROW(bounds_chart_svg({}, "none"), std::invalid_argument);

    auto cfg = small_dicke("plots");
    cfg.n_max = 9;
    cfg.resamples = 50;
    cfg.shots.explicit_shots = 150;
    cfg.write_shots = false;
    auto files = run_sweep(cfg);
    std::istringstream in(slurp(files.summary));
    auto rows = read_summary_csv(in);
    ASSERT_EQ(rows.size(), 20u);
    auto chart = slurp(files.plots[0]);
    ASSERT_EQ(count_of(chart, "class=\"series\""), 3u);
    ASSERT_NE(chart.find("data-name=\"lower bound\""), std::string::npos);
    ASSERT_NE(chart.find("data-name=\"MSP\""), std::string::npos);
    ASSERT_EQ(count_of(chart, "class=\"band\""), 2u);
    ASSERT_EQ(count_of(chart, "class=\"ci\""), 40u);
    for (const auto &r : rows) ASSERT_GE(r.lb, r.somma_lb);
    ASSERT_EQ(files.plots.size(), 2u);
    ASSERT_EQ(bounds_chart_svg(rows, "t"), bounds_chart_svg(rows, "t"));
}

TEST(svg, render_errors_and_escape) {
    ASSERT_EQ(xml_escape("a<b&\"c\""), "a&lt;b&amp;&quot;c&quot;");
    ChartSpec spec{"t", "x", "y", {0, 1}, {}, {{"s", "#000", {1}, {}, {}, SeriesStyle::Line, false}}};
    ASSERT_THROW(render_chart(spec), std::invalid_argument);
    spec.series[0].y = {1, 2};
    ASSERT_NO_THROW(render_chart(spec));
    spec.series[0].y = {NAN, 2};
    ASSERT_NO_THROW(render_chart(spec));
}
