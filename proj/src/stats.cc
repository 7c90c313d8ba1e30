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

#include "qfb/stats.h"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/random/binomial_distribution.hpp>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qfb/rng.h"

namespace qfb {

FeatureTable::FeatureTable(size_t columns) : columns_(columns) {
    if (columns == 0) throw std::invalid_argument("feature table needs at least one column");
}

void FeatureTable::push_row(std::span<const double> row) {
    if (row.size() != columns_) throw std::invalid_argument("feature row has wrong length");
    data_.insert(data_.end(), row.begin(), row.end());
}

std::vector<double> FeatureTable::means(size_t prefix) const {
    const size_t n = std::min(prefix, rows());
    if (n == 0) throw std::invalid_argument("mean of an empty feature table");
    std::vector<double> sum(columns_, 0.0);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < columns_; ++c) sum[c] += at(r, c);
    }
    for (double &s : sum) s /= static_cast<double>(n);
    return sum;
}

namespace {

void check_settings(std::span<const FeatureTable> settings, size_t prefix) {
    if (settings.empty()) throw std::invalid_argument("no measurement settings given");
    for (const auto &t : settings) {
        if (t.rows() == 0 || prefix == 0) throw std::invalid_argument("empty shot list");
    }
}

// Distinct rows with multiplicities. Per-shot features take few values, so
// a resample reduces to one multinomial draw over the categories.
struct Categories {
    std::vector<std::vector<double>> rows;
    std::vector<uint64_t> counts;
    uint64_t total = 0;
};

Categories categorize(const FeatureTable &t, size_t prefix) {
    std::map<std::vector<double>, uint64_t> tally;
    const size_t n = std::min(prefix, t.rows());
    for (size_t r = 0; r < n; ++r) {
        auto row = t.row(r);
        ++tally[std::vector<double>(row.begin(), row.end())];
    }
    Categories c;
    for (auto &[row, count] : tally) {
        c.rows.push_back(row);
        c.counts.push_back(count);
    }
    c.total = n;
    return c;
}

std::vector<double> resampled_means(const Categories &c, CounterRng &rng) {
    std::vector<double> mean(c.rows[0].size(), 0.0);
    uint64_t left = c.total;
    uint64_t mass = c.total;
    for (size_t i = 0; i < c.rows.size() && left > 0; ++i) {
        uint64_t k;
        if (i + 1 == c.rows.size()) {
            k = left;
        } else {
            const double p = static_cast<double>(c.counts[i]) / static_cast<double>(mass);
            boost::random::binomial_distribution<int64_t, double> draw(static_cast<int64_t>(left), std::min(1.0, p));
            k = static_cast<uint64_t>(draw(rng));
        }
        mass -= c.counts[i];
        left -= k;
        for (size_t f = 0; f < mean.size(); ++f) mean[f] += static_cast<double>(k) * c.rows[i][f];
    }
    for (double &m : mean) m /= static_cast<double>(c.total);
    return mean;
}

void check_level(double level) {
    if (!(level > 0 && level < 1)) throw std::invalid_argument("confidence level must lie in (0, 1)");
}

}  // namespace

double combine(std::span<const FeatureTable> settings, const Combiner &f, size_t prefix) {
    check_settings(settings, prefix);
    std::vector<std::vector<double>> means;
    for (const auto &t : settings) means.push_back(t.means(prefix));
    return f(means);
}

std::vector<double> bootstrap_replicates(std::span<const FeatureTable> settings, const Combiner &f,
                                         const BootstrapOptions &opt, size_t prefix) {
    check_settings(settings, prefix);
    if (opt.resamples == 0) throw std::invalid_argument("bootstrap needs at least one resample");
    std::vector<Categories> cats;
    for (const auto &t : settings) cats.push_back(categorize(t, prefix));

    std::vector<double> out(opt.resamples);
    std::vector<std::vector<double>> means(cats.size());
    for (size_t r = 0; r < opt.resamples; ++r) {
        CounterRng rng(derive_key(opt.seed, static_cast<uint64_t>(r)));
        for (size_t s = 0; s < cats.size(); ++s) means[s] = resampled_means(cats[s], rng);
        out[r] = f(means);
    }
    return out;
}

double nearest_rank(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
    const double rank = std::ceil(q * static_cast<double>(sorted.size()));
    const size_t idx = rank < 1 ? 0 : std::min(sorted.size() - 1, static_cast<size_t>(rank) - 1);
    return sorted[idx];
}

Interval bootstrap_ci(std::span<const FeatureTable> settings, const Combiner &f, const BootstrapOptions &opt,
                      size_t prefix) {
    check_level(opt.level);
    auto reps = bootstrap_replicates(settings, f, opt, prefix);
    std::sort(reps.begin(), reps.end());
    const double tail = (1 - opt.level) / 2;
    return {nearest_rank(reps, tail), nearest_rank(reps, 1 - tail)};
}

double bootstrap_sigma(std::span<const FeatureTable> settings, const Combiner &f, const BootstrapOptions &opt,
                       size_t prefix) {
    auto reps = bootstrap_replicates(settings, f, opt, prefix);
    const double mean = std::accumulate(reps.begin(), reps.end(), 0.0) / static_cast<double>(reps.size());
    double ss = 0;
    for (double v : reps) ss += (v - mean) * (v - mean);
    return reps.size() > 1 ? std::sqrt(ss / static_cast<double>(reps.size() - 1)) : 0.0;
}

Interval normal_ci(std::span<const FeatureTable> settings, const Combiner &f, double level, size_t prefix) {
    check_level(level);
    check_settings(settings, prefix);
    std::vector<std::vector<double>> means;
    for (const auto &t : settings) means.push_back(t.means(prefix));
    const double point = f(means);

    double variance = 0;
    for (size_t s = 0; s < settings.size(); ++s) {
        const auto &t = settings[s];
        const size_t n = std::min(prefix, t.rows());
        const size_t cols = t.columns();
        std::vector<double> grad(cols);
        for (size_t c = 0; c < cols; ++c) {
            const double h = 1e-6 * std::max(1.0, std::abs(means[s][c]));
            auto up = means, down = means;
            up[s][c] += h;
            down[s][c] -= h;
            grad[c] = (f(up) - f(down)) / (2 * h);
        }
        if (n < 2) continue;
        for (size_t a = 0; a < cols; ++a) {
            for (size_t b = 0; b < cols; ++b) {
                double cov = 0;
                for (size_t r = 0; r < n; ++r) cov += (t.at(r, a) - means[s][a]) * (t.at(r, b) - means[s][b]);
                cov /= static_cast<double>(n - 1);
                variance += grad[a] * grad[b] * cov / static_cast<double>(n);
            }
        }
    }
    const double z = boost::math::quantile(boost::math::normal(), 0.5 + level / 2);
    const double se = std::sqrt(std::max(0.0, variance));
    return {point - z * se, point + z * se};
}

CumulativeSeries cumulative_series(std::span<const FeatureTable> settings, const Combiner &f, std::string quantity,
                                   const BootstrapOptions &opt) {
    check_settings(settings, kAllShots);
    size_t total = kAllShots;
    for (const auto &t : settings) total = std::min(total, t.rows());
    if (total < 2) throw std::invalid_argument("cumulative series needs at least 2 shots per setting");

    CumulativeSeries s;
    s.quantity = std::move(quantity);
    for (size_t i = 2; i <= total; ++i) {
        s.shots.push_back(i);
        s.values.push_back(combine(settings, f, i));
        BootstrapOptions step = opt;
        step.seed = derive_key(opt.seed, static_cast<uint64_t>(i));
        Interval ci = bootstrap_ci(settings, f, step, i);
        s.ci_lo.push_back(ci.lo);
        s.ci_hi.push_back(ci.hi);
    }
    return s;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
    std::vector<size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> rank(v.size());
    for (size_t i = 0; i < order.size();) {
        size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
        for (size_t k = i; k <= j; ++k) rank[order[k]] = avg;
        i = j + 1;
    }
    return rank;
}

}  // namespace

Correlation spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
    if (x.size() < 3) throw std::invalid_argument("spearman: need at least 3 points");
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0 || syy == 0) throw std::invalid_argument("spearman: constant input");
    const double rho = sxy / std::sqrt(sxx * syy);
    if (std::abs(rho) >= 1) return {rho, 0.0};
    const double t = rho * std::sqrt((n - 2) / (1 - rho * rho));
    boost::math::students_t dist(n - 2);
    return {rho, 2 * boost::math::cdf(boost::math::complement(dist, std::abs(t)))};
}

}  // namespace qfb
