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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qfb/rng.h"
#include "qfb/svg.h"

namespace qfb {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Dicke:
            return "dicke";
        case Family::GhzLinear:
            return "ghz-linear";
        case Family::GhzLog:
            return "ghz-log";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "dicke") return Family::Dicke;
    if (text == "ghz-linear" || text == "ghz-lin") return Family::GhzLinear;
    if (text == "ghz-log" || text == "ghz-logarithmic") return Family::GhzLog;
    throw std::invalid_argument("unknown state family '" + std::string(text) + "'");
}

size_t ShotsRule::shots_for(Family f, uint32_t n, uint32_t k) const {
    if (explicit_shots) return explicit_shots;
    if (f == Family::Dicke) return std::max<size_t>(150, 4 * binomial(n, k));
    return 200;
}

void ExperimentConfig::validate() const {
    if (families.empty()) throw std::invalid_argument("config: no state family selected");
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("config: need 1 <= n_min <= n_max");
    for (Family f : families) {
        if (f == Family::Dicke) {
            if (n_min < 2) throw std::invalid_argument("config: Dicke sweeps start at N = 2");
            if (n_max > kMaxDickeSweepWidth) {
                throw std::invalid_argument("config: Dicke sweeps are capped at N = " +
                                            std::to_string(kMaxDickeSweepWidth));
            }
            if (k_min < 1 || (k_max && *k_max < k_min)) throw std::invalid_argument("config: invalid K range");
        } else {
            if (n_min < 2) throw std::invalid_argument("config: GHZ bounds need N >= 2");
            if (n_max > kMaxGhzSweepWidth) {
                throw std::invalid_argument("config: GHZ sweeps are capped at N = " +
                                            std::to_string(kMaxGhzSweepWidth));
            }
        }
    }
    noise.validate();
    if (!(level > 0 && level < 1)) throw std::invalid_argument("config: level must lie in (0, 1)");
    if (resamples == 0 || cumulative_resamples == 0) throw std::invalid_argument("config: resamples must be positive");
    if (output_dir.empty()) throw std::invalid_argument("config: output_dir is empty");
}

ExperimentConfig config_from_json(const std::string &text, ExperimentConfig cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string &key = it.key();
            const auto &v = it.value();
            if (key == "families" || key == "family") {
                cfg.families.clear();
                if (v.is_string()) {
                    cfg.families.push_back(parse_family(v.get<std::string>()));
                } else {
                    for (const auto &f : v) cfg.families.push_back(parse_family(f.get<std::string>()));
                }
            } else if (key == "n_min") {
                cfg.n_min = v.get<uint32_t>();
            } else if (key == "n_max") {
                cfg.n_max = v.get<uint32_t>();
            } else if (key == "k_min") {
                cfg.k_min = v.get<uint32_t>();
            } else if (key == "k_max") {
                cfg.k_max = v.get<uint32_t>();
            } else if (key == "shots") {
                cfg.shots.explicit_shots = v.is_string() && v.get<std::string>() == "default" ? 0 : v.get<size_t>();
            } else if (key == "noise") {
                for (auto nt = v.begin(); nt != v.end(); ++nt) {
                    if (nt.key() == "p1") {
                        cfg.noise.p1 = nt.value().get<double>();
                    } else if (nt.key() == "p2") {
                        cfg.noise.p2 = nt.value().get<double>();
                    } else {
                        throw std::invalid_argument("config: unknown noise key '" + nt.key() + "'");
                    }
                }
            } else if (key == "seed") {
                cfg.seed = v.get<uint64_t>();
            } else if (key == "output_dir") {
                cfg.output_dir = v.get<std::string>();
            } else if (key == "level") {
                cfg.level = v.get<double>();
            } else if (key == "resamples") {
                cfg.resamples = v.get<size_t>();
            } else if (key == "cumulative_resamples") {
                cfg.cumulative_resamples = v.get<size_t>();
            } else if (key == "write_shots") {
                cfg.write_shots = v.get<bool>();
            } else if (key == "write_plots") {
                cfg.write_plots = v.get<bool>();
            } else if (key == "threads") {
                cfg.threads = v.get<size_t>();
            } else {
                throw std::invalid_argument("config: unknown key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return cfg;
}

std::string config_to_json(const ExperimentConfig &cfg) {
    nlohmann::ordered_json j;
    j["families"] = nlohmann::ordered_json::array();
    for (Family f : cfg.families) j["families"].push_back(std::string(family_name(f)));
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    j["k_min"] = cfg.k_min;
    if (cfg.k_max) j["k_max"] = *cfg.k_max;
    if (cfg.shots.explicit_shots) {
        j["shots"] = cfg.shots.explicit_shots;
    } else {
        j["shots"] = "default";
    }
    j["noise"] = {{"p1", cfg.noise.p1}, {"p2", cfg.noise.p2}};
    j["seed"] = cfg.seed;
    j["output_dir"] = cfg.output_dir.string();
    j["level"] = cfg.level;
    j["resamples"] = cfg.resamples;
    j["cumulative_resamples"] = cfg.cumulative_resamples;
    j["write_shots"] = cfg.write_shots;
    j["write_plots"] = cfg.write_plots;
    j["threads"] = cfg.threads;
    return j.dump(2) + "\n";
}

std::string StateJob::k_field() const {
    if (family == Family::Dicke) return std::to_string(k);
    return std::string(layout_name(family == Family::GhzLinear ? GhzLayout::Linear : GhzLayout::Logarithmic));
}

uint32_t StateJob::k_order() const {
    if (family == Family::Dicke) return k;
    return family == Family::GhzLinear ? 0 : 1;
}

std::vector<MeasurementBasis> StateJob::bases() const {
    if (family == Family::Dicke) return {MeasurementBasis::Z, MeasurementBasis::X, MeasurementBasis::Y};
    return {MeasurementBasis::X, MeasurementBasis::Z};
}

StateJob make_job(Family family, uint32_t n, uint32_t k) {
    if (family == Family::Dicke) {
        Circuit c = build_dicke_circuit({n, k});
        return {family, n, k, c.label(), std::move(c)};
    }
    const GhzLayout layout = family == Family::GhzLinear ? GhzLayout::Linear : GhzLayout::Logarithmic;
    Circuit c = build_ghz({n, layout});
    return {family, n, 0, c.label(), std::move(c)};
}

std::vector<StateJob> enumerate_jobs(const ExperimentConfig &cfg) {
    cfg.validate();
    std::vector<StateJob> jobs;
    for (Family f : cfg.families) {
        for (uint32_t n = cfg.n_min; n <= cfg.n_max; ++n) {
            if (f != Family::Dicke) {
                jobs.push_back(make_job(f, n));
                continue;
            }
            const uint32_t hi = std::min(n / 2, cfg.k_max.value_or(n / 2));
            for (uint32_t k = cfg.k_min; k <= hi; ++k) jobs.push_back(make_job(f, n, k));
        }
    }
    return jobs;
}

namespace {

uint64_t draw_outcome(std::span<const Complex> amps, double u) {
    double total = 0;
    for (const auto &a : amps) total += std::norm(a);
    const double target = u * total;
    double acc = 0;
    uint64_t last = 0;
    for (uint64_t x = 0; x < amps.size(); ++x) {
        const double p = std::norm(amps[x]);
        if (p == 0) continue;
        acc += p;
        last = x;
        if (acc > target) return x;
    }
    return last;
}

}  // namespace

ShotTable simulate_shots(const Circuit &c, MeasurementBasis basis, size_t shots, const NoiseSpec &noise,
                         uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("simulate: shots must be positive");
    noise.validate();
    StateVector ideal = run(c);
    rotate_state_to_basis(ideal, basis);
    const OutcomeSampler ideal_sampler(ideal);

    const uint64_t noise_key = derive_key(seed, "noise");
    const uint64_t outcome_key = derive_key(seed, "outcome");
    ShotTable t{basis, c.width(), {}, seed, c.label()};
    t.outcomes.reserve(shots);
    for (size_t i = 0; i < shots; ++i) {
        const double u = to_unit_interval(counter_bits(outcome_key, i));
        auto events = draw_pauli_events(c, noise, derive_key(noise_key, static_cast<uint64_t>(i)));
        if (events.empty()) {
            t.outcomes.push_back(ideal_sampler.draw(u));
            continue;
        }
        StateVector sv = run_with_events(c, events);
        rotate_state_to_basis(sv, basis);
        t.outcomes.push_back(draw_outcome(sv.amplitudes(), u));
    }
    return t;
}

StateResult run_state(const StateJob &job, const ExperimentConfig &cfg) {
    const uint64_t seed = derive_key(cfg.seed, job.label);
    const size_t shots = cfg.shots.shots_for(job.family, job.n, job.k);
    StateResult r{job, seed, cnot_count(job.circuit), depth(job.circuit), {}, {}};
    for (MeasurementBasis b : job.bases()) {
        r.tables.push_back(simulate_shots(job.circuit, b, shots, cfg.noise, derive_key(seed, std::string(1, basis_char(b)))));
    }
    CiOptions ci{CiMethod::Bootstrap, {cfg.level, cfg.resamples, derive_key(seed, "bootstrap")}};
    if (job.family == Family::Dicke) {
        r.report = dicke_lower_bound(r.tables, {job.n, job.k}, ci);
    } else {
        r.report = ghz_lower_bound(r.tables, job.n, ci);
    }
    return r;
}

std::vector<StateResult> run_sweep_results(const ExperimentConfig &cfg) {
    auto jobs = enumerate_jobs(cfg);
    std::vector<std::optional<StateResult>> slots(jobs.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
            try {
                slots[i] = run_state(jobs[i], cfg);
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<size_t>(1, jobs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<StateResult> out;
    for (auto &s : slots) out.push_back(std::move(*s));
    std::stable_sort(out.begin(), out.end(), [](const StateResult &a, const StateResult &b) {
        if (a.cnots != b.cnots) return a.cnots < b.cnots;
        if (a.job.n != b.job.n) return a.job.n < b.job.n;
        if (a.job.k_order() != b.job.k_order()) return a.job.k_order() < b.job.k_order();
        return a.job.family < b.job.family;
    });
    return out;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v == 0 ? 0.0 : v);
    return buf;
}

SummaryRow summary_row(const StateResult &r) {
    const auto &rep = r.report;
    SummaryRow row;
    row.label = r.job.label;
    row.n = r.job.n;
    row.k = r.job.k_field();
    row.cnots = r.cnots;
    row.depth = r.depth;
    row.lb = rep.lower_bound.value;
    row.lb_ci_lo = rep.lower_bound.ci.lo;
    row.lb_ci_hi = rep.lower_bound.ci.hi;
    row.somma_lb = rep.somma_lower_bound.value;
    row.msp = rep.msp.value;
    row.msp_ci_lo = rep.msp.ci.lo;
    row.msp_ci_hi = rep.msp.ci.hi;
    if (r.job.family == Family::Dicke) {
        row.aux1 = rep.sj2.value;
        row.aux2 = std::numeric_limits<double>::quiet_NaN();
    } else {
        row.aux1 = rep.sgx.value;
        row.aux2 = rep.sgz.value;
    }
    row.shots = rep.shots_per_setting;
    row.seed = r.seed;
    return row;
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows) {
    out << kSummaryHeader << "\n";
    for (const auto &r : rows) {
        out << r.label << ',' << r.n << ',' << r.k << ',' << r.cnots << ',' << r.depth << ',' << format_number(r.lb)
            << ',' << format_number(r.lb_ci_lo) << ',' << format_number(r.lb_ci_hi) << ','
            << format_number(r.somma_lb) << ',' << format_number(r.msp) << ',' << format_number(r.msp_ci_lo) << ','
            << format_number(r.msp_ci_hi) << ',' << format_number(r.aux1) << ',' << format_number(r.aux2) << ','
            << r.shots << ',' << r.seed << "\n";
    }
}

namespace {

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string &s) {
    if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
    size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
}

uint64_t parse_u64(const std::string &s) {
    size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || s.empty() || s[0] == '-') throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

}  // namespace

std::vector<SummaryRow> read_summary_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || split_csv(line) != split_csv(kSummaryHeader)) {
        throw std::invalid_argument("summary CSV: unexpected header");
    }
    std::vector<SummaryRow> rows;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 16) throw std::invalid_argument("summary CSV line " + std::to_string(line_no) + ": need 16 fields");
        try {
            SummaryRow r;
            r.label = f[0];
            r.n = static_cast<uint32_t>(parse_u64(f[1]));
            r.k = f[2];
            r.cnots = parse_u64(f[3]);
            r.depth = parse_u64(f[4]);
            r.lb = parse_double(f[5]);
            r.lb_ci_lo = parse_double(f[6]);
            r.lb_ci_hi = parse_double(f[7]);
            r.somma_lb = parse_double(f[8]);
            r.msp = parse_double(f[9]);
            r.msp_ci_lo = parse_double(f[10]);
            r.msp_ci_hi = parse_double(f[11]);
            r.aux1 = parse_double(f[12]);
            r.aux2 = parse_double(f[13]);
            r.shots = parse_u64(f[14]);
            r.seed = parse_u64(f[15]);
            rows.push_back(std::move(r));
        } catch (const std::logic_error &e) {
            throw std::invalid_argument("summary CSV line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return rows;
}

void write_shots_csv(std::ostream &out, const std::string &label, const std::vector<ShotTable> &tables) {
    out << kShotsHeader << "\n";
    for (const auto &t : tables) {
        for (size_t i = 0; i < t.outcomes.size(); ++i) {
            out << label << ',' << basis_char(t.basis) << ',' << i << ',' << to_bitstring(t.outcomes[i], t.width)
                << "\n";
        }
    }
}

std::vector<ShotTable> read_shots_csv(std::istream &in, std::string *label) {
    std::string line;
    if (!std::getline(in, line) || split_csv(line) != split_csv(kShotsHeader)) {
        throw std::invalid_argument("shots CSV: unexpected header");
    }
    std::map<MeasurementBasis, ShotTable> by_basis;
    std::vector<MeasurementBasis> order;
    std::string first_label;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 4) throw std::invalid_argument("shots CSV line " + std::to_string(line_no) + ": need 4 fields");
        if (first_label.empty()) first_label = f[0];
        if (f[0] != first_label) throw std::invalid_argument("shots CSV holds more than one state");
        const MeasurementBasis b = parse_basis(f[1]);
        auto [it, fresh] = by_basis.try_emplace(b);
        ShotTable &t = it->second;
        if (fresh) {
            order.push_back(b);
            t.basis = b;
            t.width = static_cast<uint32_t>(f[3].size());
            t.circuit_label = f[0];
        }
        if (f[3].size() != t.width) throw std::invalid_argument("shots CSV: inconsistent bit-string widths");
        if (parse_u64(f[2]) != t.outcomes.size()) {
            throw std::invalid_argument("shots CSV line " + std::to_string(line_no) + ": shot indices out of order");
        }
        t.outcomes.push_back(parse_bitstring(f[3]));
    }
    if (label) *label = first_label;
    std::vector<ShotTable> out;
    for (auto b : order) out.push_back(std::move(by_basis[b]));
    return out;
}

std::string qasm_file_name(const StateJob &job) {
    if (job.family == Family::Dicke) {
        return "dicke_" + std::to_string(job.n) + "_" + std::to_string(job.k) + ".qasm";
    }
    return "ghz_" + std::to_string(job.n) + "_" + job.k_field() + ".qasm";
}

namespace {

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << content;
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> export_all_qasm(const ExperimentConfig &cfg) {
    std::vector<std::filesystem::path> out;
    for (const auto &job : enumerate_jobs(cfg)) {
        auto path = cfg.output_dir / "qasm" / qasm_file_name(job);
        write_file(path, to_qasm(job.circuit));
        out.push_back(path);
    }
    return out;
}

SweepFiles run_sweep(const ExperimentConfig &cfg) {
    auto results = run_sweep_results(cfg);
    SweepFiles files;
    std::vector<SummaryRow> rows;
    for (const auto &r : results) rows.push_back(summary_row(r));

    std::ostringstream summary;
    write_summary_csv(summary, rows);
    files.summary = cfg.output_dir / "summary.csv";
    write_file(files.summary, summary.str());

    if (cfg.write_shots) {
        for (const auto &r : results) {
            std::ostringstream s;
            write_shots_csv(s, r.job.label, r.tables);
            auto path = cfg.output_dir / "shots" / (r.job.label + ".csv");
            write_file(path, s.str());
            files.shots.push_back(path);
        }
    }
    if (cfg.write_plots) files.plots = emit_plots(rows, cfg.output_dir / "plots", "bounds");
    return files;
}

CumulativeReport cumulative_report(const StateJob &job, const std::vector<ShotTable> &tables,
                                   const BootstrapOptions &opt) {
    CumulativeReport rep{job.label, {}};
    auto series = [&](std::span<const FeatureTable> settings, const Combiner &f, const std::string &name) {
        BootstrapOptions o = opt;
        o.seed = derive_key(opt.seed, name);
        rep.series.push_back(cumulative_series(settings, f, name, o));
    };
    if (job.family == Family::Dicke) {
        auto f = dicke_features(tables, {job.n, job.k});
        auto s = f.settings();
        series(s, DickeFeatures::lower_bound(job.n), "lb");
        series(s, DickeFeatures::msp(), "msp");
        series(s, DickeFeatures::sj2(job.n), "sj2");
    } else {
        auto f = ghz_features(tables, job.n);
        auto s = f.settings();
        series(s, GhzFeatures::lower_bound(job.n), "lb");
        series(s, GhzFeatures::msp(), "msp");
        series(s, GhzFeatures::sgx(), "sgx");
        series(s, GhzFeatures::sgz(), "sgz");
    }
    return rep;
}

void write_cumulative_csv(std::ostream &out, const CumulativeReport &report) {
    out << "label,quantity,shots,value,ci_lo,ci_hi\n";
    for (const auto &s : report.series) {
        for (size_t i = 0; i < s.values.size(); ++i) {
            out << report.label << ',' << s.quantity << ',' << s.shots[i] << ',' << format_number(s.values[i]) << ','
                << format_number(s.ci_lo[i]) << ',' << format_number(s.ci_hi[i]) << "\n";
        }
    }
}

namespace {

std::vector<std::string> state_ticks(const std::vector<SummaryRow> &rows) {
    std::vector<std::string> ticks;
    for (const auto &r : rows) ticks.push_back(r.label + ":(" + std::to_string(r.cnots) + ")");
    return ticks;
}

std::vector<double> positions(size_t n) {
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = static_cast<double>(i);
    return x;
}

}  // namespace

std::string bounds_chart_svg(const std::vector<SummaryRow> &rows, const std::string &title) {
    if (rows.empty()) throw std::invalid_argument("no rows to plot");
    PlotSeries lb{"lower bound", "#1f77b4", {}, {}, {}, SeriesStyle::Points, true};
    PlotSeries msp{"MSP", "#d62728", {}, {}, {}, SeriesStyle::Points, true};
    PlotSeries somma{"original lower bound", "#7f7f7f", {}, {}, {}, SeriesStyle::Points, false};
    bool any_somma = false;
    for (const auto &r : rows) {
        lb.y.push_back(r.lb);
        lb.lo.push_back(r.lb_ci_lo);
        lb.hi.push_back(r.lb_ci_hi);
        msp.y.push_back(r.msp);
        msp.lo.push_back(r.msp_ci_lo);
        msp.hi.push_back(r.msp_ci_hi);
        somma.y.push_back(r.somma_lb);
        any_somma = any_somma || !std::isnan(r.somma_lb);
    }
    ChartSpec spec{title, "state (sorted by CNOT count)", "fidelity bound", positions(rows.size()), state_ticks(rows),
                   {lb, msp}};
    if (any_somma) spec.series.push_back(somma);
    return render_chart(spec);
}

std::string improvement_chart_svg(const std::vector<SummaryRow> &rows, const std::string &title) {
    if (rows.empty()) throw std::invalid_argument("no rows to plot");
    PlotSeries improved{"improved lower bound", "#1f77b4", {}, {}, {}, SeriesStyle::Line, false};
    PlotSeries original{"original lower bound", "#ff7f0e", {}, {}, {}, SeriesStyle::Line, false};
    for (const auto &r : rows) {
        improved.y.push_back(r.lb);
        original.y.push_back(r.somma_lb);
    }
    return render_chart({title, "state (sorted by CNOT count)", "fidelity lower bound", positions(rows.size()),
                         state_ticks(rows), {improved, original}});
}

std::string cumulative_chart_svg(const CumulativeReport &report, const std::string &title) {
    if (report.series.empty()) throw std::invalid_argument("no series to plot");
    static const char *kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
    ChartSpec spec{title, "shots", "cumulative estimate", {}, {}, {}};
    for (size_t x : report.series[0].shots) spec.x.push_back(static_cast<double>(x));
    for (size_t i = 0; i < report.series.size(); ++i) {
        const auto &s = report.series[i];
        PlotSeries p{s.quantity, kColors[i % 5], s.values, {}, {}, SeriesStyle::Line, false};
        if (s.quantity == "lb" || s.quantity == "msp") {
            p.lo = s.ci_lo;
            p.hi = s.ci_hi;
            p.band = true;
        }
        spec.series.push_back(std::move(p));
    }
    return render_chart(spec);
}

std::vector<std::filesystem::path> emit_plots(const std::vector<SummaryRow> &rows, const std::filesystem::path &dir,
                                              const std::string &stem) {
    if (rows.empty()) throw std::invalid_argument("no rows to plot");
    std::vector<std::filesystem::path> out;
    auto path = dir / (stem + ".svg");
    write_file(path, bounds_chart_svg(rows, "Fidelity bounds by state"));
    out.push_back(path);
    std::vector<SummaryRow> dicke;
    for (const auto &r : rows) {
        if (!std::isnan(r.somma_lb)) dicke.push_back(r);
    }
    if (!dicke.empty()) {
        auto ipath = dir / (stem + "_improvement.svg");
        write_file(ipath, improvement_chart_svg(dicke, "Improved versus original lower bound"));
        out.push_back(ipath);
    }
    return out;
}

}  // namespace qfb
