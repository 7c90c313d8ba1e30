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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qfb/harness.h"
#include "qfb/rng.h"

using namespace qfb;

namespace {

struct Overrides {
    std::string config_path;
    std::vector<std::string> families;
    std::optional<uint32_t> n_min, n_max, k_min, k_max;
    std::optional<size_t> shots, resamples, threads;
    std::optional<double> p1, p2, level;
    std::optional<uint64_t> seed;
    std::optional<std::string> output_dir;

    void attach(CLI::App *app) {
        app->add_option("-c,--config", config_path, "JSON experiment config")->check(CLI::ExistingFile);
        app->add_option("--family", families, "dicke, ghz-linear or ghz-log (repeatable)");
        app->add_option("--n-min", n_min);
        app->add_option("--n-max", n_max);
        app->add_option("--k-min", k_min);
        app->add_option("--k-max", k_max);
        app->add_option("--shots", shots, "shots per setting (default: per-family rule)");
        app->add_option("--p1", p1, "single-qubit depolarizing probability");
        app->add_option("--p2", p2, "two-qubit depolarizing probability");
        app->add_option("--seed", seed);
        app->add_option("--level", level, "confidence level");
        app->add_option("--resamples", resamples, "bootstrap resamples");
        app->add_option("--threads", threads, "worker threads, 0 = all");
        app->add_option("-o,--output-dir", output_dir);
    }

    ExperimentConfig resolve() const {
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            std::stringstream ss;
            ss << f.rdbuf();
            cfg = config_from_json(ss.str());
        }
        if (const char *env = std::getenv("QFB_OUTPUT_DIR"); env && *env) cfg.output_dir = env;
        if (!families.empty()) {
            cfg.families.clear();
            for (const auto &f : families) cfg.families.push_back(parse_family(f));
        }
        if (n_min) cfg.n_min = *n_min;
        if (n_max) cfg.n_max = *n_max;
        if (k_min) cfg.k_min = *k_min;
        if (k_max) cfg.k_max = *k_max;
        if (shots) cfg.shots.explicit_shots = *shots;
        if (p1) cfg.noise.p1 = *p1;
        if (p2) cfg.noise.p2 = *p2;
        if (seed) cfg.seed = *seed;
        if (level) cfg.level = *level;
        if (resamples) cfg.resamples = *resamples;
        if (threads) cfg.threads = *threads;
        if (output_dir) cfg.output_dir = *output_dir;
        cfg.validate();
        return cfg;
    }
};

struct StateArgs {
    std::string family = "dicke";
    uint32_t n = 4;
    uint32_t k = 2;

    void attach(CLI::App *app) {
        app->add_option("--family", family, "dicke, ghz-linear or ghz-log");
        app->add_option("-n,--n", n, "qubit count")->required();
        app->add_option("-k,--k", k, "Hamming weight (Dicke)");
    }

    StateJob job() const { return make_job(parse_family(family), n, k); }
};

std::ostream &open_or_stdout(const std::string &path, std::ofstream &file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    f << text;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qfb: Dicke and GHZ state preparation, simulation and fidelity bounds"};
    app.require_subcommand(1);

    // build
    auto *build = app.add_subcommand("build", "build one circuit and print its statistics");
    StateArgs build_state;
    build_state.attach(build);
    bool build_qasm = false;
    build->add_flag("--qasm", build_qasm, "print OpenQASM instead of statistics");

    // export-qasm
    auto *exportq = app.add_subcommand("export-qasm", "write one QASM file per state of a sweep");
    Overrides export_over;
    export_over.attach(exportq);

    // simulate
    auto *simulate = app.add_subcommand("simulate", "sample shots of one state");
    StateArgs sim_state;
    sim_state.attach(simulate);
    std::vector<std::string> sim_bases;
    size_t sim_shots = 0;
    uint64_t sim_seed = 1;
    NoiseSpec sim_noise;
    std::string sim_out;
    simulate->add_option("--basis", sim_bases, "X, Y or Z (repeatable; default: the bases the bound needs)");
    simulate->add_option("--shots", sim_shots, "shots per basis (default: per-family rule)");
    simulate->add_option("--seed", sim_seed);
    simulate->add_option("--p1", sim_noise.p1);
    simulate->add_option("--p2", sim_noise.p2);
    simulate->add_option("--out", sim_out, "shots CSV path, '-' for stdout");

    // bounds
    auto *bounds = app.add_subcommand("bounds", "estimate bounds from a shots CSV");
    StateArgs bounds_state;
    bounds_state.attach(bounds);
    std::string bounds_in;
    std::string bounds_ci = "bootstrap";
    BootstrapOptions bounds_opt;
    bounds->add_option("--shots-csv", bounds_in)->required()->check(CLI::ExistingFile);
    bounds->add_option("--ci", bounds_ci, "bootstrap or normal")->check(CLI::IsMember({"bootstrap", "normal"}));
    bounds->add_option("--level", bounds_opt.level);
    bounds->add_option("--resamples", bounds_opt.resamples);
    bounds->add_option("--seed", bounds_opt.seed);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "run a full sweep and write CSV and SVG output");
    Overrides sweep_over;
    sweep_over.attach(sweep);

    // cumulative
    auto *cumulative = app.add_subcommand("cumulative", "cumulative-by-shot estimates for one state");
    StateArgs cum_state;
    cum_state.attach(cumulative);
    Overrides cum_over;
    cumulative->add_option("-c,--config", cum_over.config_path)->check(CLI::ExistingFile);
    cumulative->add_option("--shots", cum_over.shots);
    cumulative->add_option("--p1", cum_over.p1);
    cumulative->add_option("--p2", cum_over.p2);
    cumulative->add_option("--seed", cum_over.seed);
    cumulative->add_option("--resamples", cum_over.resamples, "bootstrap resamples per prefix");
    cumulative->add_option("-o,--output-dir", cum_over.output_dir);

    // plot
    auto *plot = app.add_subcommand("plot", "render SVG charts from a summary CSV");
    std::string plot_in;
    std::string plot_out;
    plot->add_option("--summary", plot_in)->required()->check(CLI::ExistingFile);
    plot->add_option("-o,--output-dir", plot_out, "directory for the SVG files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*build) {
            auto job = build_state.job();
            if (build_qasm) {
                std::cout << to_qasm(job.circuit);
            } else {
                std::cout << "label " << job.label << "\nqubits " << job.n << "\ngates " << job.circuit.size()
                          << "\ncnots " << cnot_count(job.circuit) << "\ndepth " << depth(job.circuit) << "\n";
            }
        } else if (*exportq) {
            for (const auto &p : export_all_qasm(export_over.resolve())) std::cout << p.string() << "\n";
        } else if (*simulate) {
            auto job = sim_state.job();
            std::vector<MeasurementBasis> bases;
            for (const auto &b : sim_bases) bases.push_back(parse_basis(b));
            if (bases.empty()) bases = job.bases();
            const size_t shots = ShotsRule{sim_shots}.shots_for(job.family, job.n, job.k);
            const uint64_t seed = derive_key(sim_seed, job.label);
            std::vector<ShotTable> tables;
            for (auto b : bases) {
                tables.push_back(simulate_shots(job.circuit, b, shots, sim_noise,
                                                derive_key(seed, std::string(1, basis_char(b)))));
            }
            std::ofstream file;
            write_shots_csv(open_or_stdout(sim_out, file), job.label, tables);
        } else if (*bounds) {
            auto job = bounds_state.job();
            std::ifstream in(bounds_in);
            auto tables = read_shots_csv(in);
            CiOptions ci{bounds_ci == "normal" ? CiMethod::Normal : CiMethod::Bootstrap, bounds_opt};
            StateResult r{job, bounds_opt.seed, cnot_count(job.circuit), depth(job.circuit), tables, {}};
            r.report = job.family == Family::Dicke ? dicke_lower_bound(tables, {job.n, job.k}, ci)
                                                   : ghz_lower_bound(tables, job.n, ci);
            write_summary_csv(std::cout, {summary_row(r)});
        } else if (*sweep) {
            auto files = run_sweep(sweep_over.resolve());
            std::cout << files.summary.string() << "\n";
            for (const auto &p : files.plots) std::cout << p.string() << "\n";
        } else if (*cumulative) {
            ExperimentConfig cfg = cum_over.resolve();
            auto job = cum_state.job();
            cfg.families = {job.family};
            cfg.resamples = cfg.cumulative_resamples;
            if (cum_over.resamples) cfg.resamples = *cum_over.resamples;
            auto result = run_state(job, cfg);
            auto rep = cumulative_report(job, result.tables,
                                         {cfg.level, cfg.resamples, derive_key(result.seed, "cumulative")});
            std::ostringstream csv;
            write_cumulative_csv(csv, rep);
            auto base = cfg.output_dir / "cumulative" / job.label;
            write_text(base.string() + ".csv", csv.str());
            write_text(base.string() + ".svg", cumulative_chart_svg(rep, "Cumulative bounds for " + job.label));
            std::cout << base.string() << ".csv\n" << base.string() << ".svg\n";
        } else if (*plot) {
            std::ifstream in(plot_in);
            auto rows = read_summary_csv(in);
            std::filesystem::path dir = plot_out;
            if (dir.empty()) {
                const char *env = std::getenv("QFB_OUTPUT_DIR");
                dir = env && *env ? std::filesystem::path(env) / "plots" : std::filesystem::path(plot_in).parent_path();
            }
            for (const auto &p : emit_plots(rows, dir, std::filesystem::path(plot_in).stem().string())) {
                std::cout << p.string() << "\n";
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
