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

#ifndef QFB_STATS_H
#define QFB_STATS_H

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace qfb {

inline constexpr size_t kAllShots = std::numeric_limits<size_t>::max();

/// Per-shot feature rows for one measurement setting; row i belongs to shot
/// i. Rows are resampled as a unit, so features of the same shot stay paired.
class FeatureTable {
   public:
    explicit FeatureTable(size_t columns);

    void push_row(std::span<const double> row);
    size_t rows() const { return columns_ ? data_.size() / columns_ : 0; }
    size_t columns() const { return columns_; }
    double at(size_t row, size_t column) const { return data_[row * columns_ + column]; }
    std::span<const double> row(size_t r) const { return {data_.data() + r * columns_, columns_}; }

    /// Column means over the first `prefix` rows, summed in row order.
    std::vector<double> means(size_t prefix = kAllShots) const;

   private:
    size_t columns_;
    std::vector<double> data_;
};

/// Maps per-setting feature means, indexed [setting][feature], to a scalar.
using Combiner = std::function<double(const std::vector<std::vector<double>> &)>;

/// Combiner applied to the plain means of the first `prefix` rows.
double combine(std::span<const FeatureTable> settings, const Combiner &f, size_t prefix = kAllShots);

struct Interval {
    double lo = 0;
    double hi = 0;

    double half_width() const { return (hi - lo) / 2; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

struct BootstrapOptions {
    double level = 0.68;
    size_t resamples = 1000;
    uint64_t seed = 0;
};

/// Stratified bootstrap replicates: every setting is resampled with
/// replacement on its own. Replicate r draws from a stream derived from
/// (seed, r), so the result does not depend on evaluation order.
std::vector<double> bootstrap_replicates(std::span<const FeatureTable> settings, const Combiner &f,
                                         const BootstrapOptions &opt, size_t prefix = kAllShots);

/// Nearest-rank quantile of sorted data, q in [0, 1].
double nearest_rank(std::span<const double> sorted, double q);

/// Two-sided interval from the (1-level)/2 and (1+level)/2 nearest-rank
/// quantiles of the bootstrap replicates.
Interval bootstrap_ci(std::span<const FeatureTable> settings, const Combiner &f, const BootstrapOptions &opt,
                      size_t prefix = kAllShots);

/// Standard deviation of the bootstrap replicates.
double bootstrap_sigma(std::span<const FeatureTable> settings, const Combiner &f, const BootstrapOptions &opt,
                       size_t prefix = kAllShots);

/// Delta-method interval: point +- z * SE, with per-setting covariances
/// propagated through a numerical gradient of the combiner.
Interval normal_ci(std::span<const FeatureTable> settings, const Combiner &f, double level,
                   size_t prefix = kAllShots);

struct CumulativeSeries {
    std::string quantity;
    std::vector<size_t> shots;
    std::vector<double> values;
    std::vector<double> ci_lo;
    std::vector<double> ci_hi;
};

/// Estimate and bootstrap interval on the first i shots of every setting,
/// for i = 2 .. min rows. The last value equals combine() on the full data.
CumulativeSeries cumulative_series(std::span<const FeatureTable> settings, const Combiner &f, std::string quantity,
                                   const BootstrapOptions &opt);

struct Correlation {
    double rho;
    double p_value;
};

/// Spearman rank correlation with average ranks for ties; two-sided p-value
/// from the t approximation with n-2 degrees of freedom.
Correlation spearman(std::span<const double> x, std::span<const double> y);

}  // namespace qfb

#endif
