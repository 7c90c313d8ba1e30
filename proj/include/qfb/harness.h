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

#ifndef QFB_HARNESS_H
#define QFB_HARNESS_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qfb/bounds.h"
#include "qfb/circuit.h"
#include "qfb/dicke.h"
#include "qfb/ghz.h"
#include "qfb/stats.h"
#include "qfb/statevector.h"

namespace qfb {

enum class Family : uint8_t { Dicke, GhzLinear, GhzLog };

std::string_view family_name(Family f);
Family parse_family(std::string_view text);

inline constexpr uint32_t kMaxDickeSweepWidth = 12;
inline constexpr uint32_t kMaxGhzSweepWidth = 20;

/// Shots per measurement setting. Zero selects the default rule:
/// max(150, 4 C(N,K)) for Dicke states and 200 for GHZ states.
struct ShotsRule {
    size_t explicit_shots = 0;

    size_t shots_for(Family f, uint32_t n, uint32_t k) const;
};

struct ExperimentConfig {
    std::vector<Family> families{Family::Dicke};
    uint32_t n_min = 2;
    uint32_t n_max = 6;
    /// Dicke weights default to 1..floor(N/2); these clip that range.
    uint32_t k_min = 1;
    std::optional<uint32_t> k_max;
    ShotsRule shots;
    NoiseSpec noise;
    uint64_t seed = 1;
    std::filesystem::path output_dir = "qfb_out";
    double level = 0.68;
    size_t resamples = 1000;
    size_t cumulative_resamples = 200;
    bool write_shots = true;
    bool write_plots = true;
    /// 0 means one worker per hardware thread.
    size_t threads = 0;

    /// Throws std::invalid_argument on any range, cap or probability error.
    void validate() const;
};

/// Reads a JSON object; absent keys keep their defaults. Unknown keys are
/// rejected.
ExperimentConfig config_from_json(const std::string &text, ExperimentConfig base = {});
std::string config_to_json(const ExperimentConfig &cfg);

/// One state of a sweep. For GHZ states `k` is 0 and `layout` is set.
struct StateJob {
    Family family;
    uint32_t n;
    uint32_t k = 0;
    std::string label;
    Circuit circuit;

    /// Column value in the summary: K for Dicke, the layout name for GHZ.
    std::string k_field() const;
    /// Sort key after the CNOT count.
    uint32_t k_order() const;
    std::vector<MeasurementBasis> bases() const;
};

StateJob make_job(Family family, uint32_t n, uint32_t k = 0);
std::vector<StateJob> enumerate_jobs(const ExperimentConfig &cfg);

/// Seeded noisy sampling: every shot draws a fresh trajectory of the prepared
/// state, then measures once after an ideal basis change. Shot i of basis b
/// depends only on (seed, b, i).
ShotTable simulate_shots(const Circuit &c, MeasurementBasis basis, size_t shots, const NoiseSpec &noise,
                         uint64_t seed);

struct StateResult {
    StateJob job;
    uint64_t seed;
    size_t cnots;
    size_t depth;
    std::vector<ShotTable> tables;
    BoundReport report;
};

StateResult run_state(const StateJob &job, const ExperimentConfig &cfg);

/// All states of the sweep, sorted by CNOT count, then N, then K.
std::vector<StateResult> run_sweep_results(const ExperimentConfig &cfg);

struct SweepFiles {
    std::filesystem::path summary;
    std::vector<std::filesystem::path> shots;
    std::vector<std::filesystem::path> plots;
};

/// Runs the sweep and writes summary.csv, shots/<label>.csv and SVG plots
/// under cfg.output_dir.
SweepFiles run_sweep(const ExperimentConfig &cfg);

inline constexpr const char *kSummaryHeader =
    "label,n,k,cnots,depth,lb,lb_ci_lo,lb_ci_hi,somma_lb,msp,msp_ci_lo,msp_ci_hi,aux1,aux2,shots,seed";
inline constexpr const char *kShotsHeader = "label,basis,shot_index,bitstring";

/// One summary line. aux1/aux2 hold S_J^2 and nothing for Dicke rows, and
/// S_Gx / S_Gz for GHZ rows.
struct SummaryRow {
    std::string label;
    uint32_t n = 0;
    std::string k;
    size_t cnots = 0;
    size_t depth = 0;
    double lb = 0, lb_ci_lo = 0, lb_ci_hi = 0;
    double somma_lb = 0;
    double msp = 0, msp_ci_lo = 0, msp_ci_hi = 0;
    double aux1 = 0, aux2 = 0;
    size_t shots = 0;
    uint64_t seed = 0;
};

SummaryRow summary_row(const StateResult &r);
/// Fixed-format number; NaN prints as an empty field.
std::string format_number(double v);
void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);
std::vector<SummaryRow> read_summary_csv(std::istream &in);
void write_shots_csv(std::ostream &out, const std::string &label, const std::vector<ShotTable> &tables);
/// Groups rows by basis; widths come from the bit-string length.
std::vector<ShotTable> read_shots_csv(std::istream &in, std::string *label = nullptr);

/// One file per state named <family>_<N>_<K|layout>.qasm under
/// output_dir/qasm. Returns the paths written.
std::vector<std::filesystem::path> export_all_qasm(const ExperimentConfig &cfg);
std::string qasm_file_name(const StateJob &job);

struct CumulativeReport {
    std::string label;
    std::vector<CumulativeSeries> series;
};

/// Cumulative estimates for one state's shot tables: LB, MSP and S_J^2 for
/// Dicke; LB, MSP, S_Gx and S_Gz for GHZ.
CumulativeReport cumulative_report(const StateJob &job, const std::vector<ShotTable> &tables,
                                   const BootstrapOptions &opt);
void write_cumulative_csv(std::ostream &out, const CumulativeReport &report);

// SVG output.

/// Bounds per state in the given row order: LB and MSP points with interval
/// bars and bands, plus the 1 - (J_z - j_z)^2/4 variant when present.
std::string bounds_chart_svg(const std::vector<SummaryRow> &rows, const std::string &title);
/// Improved against original lower bound per state.
std::string improvement_chart_svg(const std::vector<SummaryRow> &rows, const std::string &title);
std::string cumulative_chart_svg(const CumulativeReport &report, const std::string &title);

/// Writes the bound chart and, when Dicke rows exist, the improvement chart.
std::vector<std::filesystem::path> emit_plots(const std::vector<SummaryRow> &rows,
                                              const std::filesystem::path &dir, const std::string &stem);

}  // namespace qfb

#endif
