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

#include "qfb/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qfb {
namespace {

constexpr double kWidth = 960;
constexpr double kHeight = 540;
constexpr double kLeft = 80;
constexpr double kRight = 190;
constexpr double kTop = 50;
constexpr double kBottom = 120;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_text(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

struct Range {
    double lo;
    double hi;
};

Range pad(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) return {0, 1};
    if (hi - lo < 1e-12) return {lo - 0.5, hi + 0.5};
    const double m = 0.05 * (hi - lo);
    return {lo - m, hi + m};
}

double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double f : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (f * mag >= raw) return f * mag;
    }
    return 10 * mag;
}

}  // namespace

std::string xml_escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            case '\'':
                out += "&apos;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string render_chart(const ChartSpec &spec) {
    if (spec.x.empty() || spec.series.empty()) throw std::invalid_argument("chart has no data");
    if (!spec.x_ticks.empty() && spec.x_ticks.size() != spec.x.size()) {
        throw std::invalid_argument("tick labels do not match abscissae");
    }
    double ylo = INFINITY, yhi = -INFINITY;
    for (const auto &s : spec.series) {
        if (s.y.size() != spec.x.size()) throw std::invalid_argument("series '" + s.name + "' has wrong length");
        if ((!s.lo.empty() && s.lo.size() != s.y.size()) || (!s.hi.empty() && s.hi.size() != s.y.size())) {
            throw std::invalid_argument("series '" + s.name + "' has wrong interval length");
        }
        for (const auto *v : {&s.y, &s.lo, &s.hi}) {
            for (double d : *v) {
                if (std::isfinite(d)) ylo = std::min(ylo, d), yhi = std::max(yhi, d);
            }
        }
    }
    const Range yr = pad(ylo, yhi);
    const auto [xmin, xmax] = std::minmax_element(spec.x.begin(), spec.x.end());
    const Range xr = spec.x.size() == 1 ? Range{*xmin - 1, *xmax + 1} : pad(*xmin, *xmax);

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string o;
    o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    o += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"white\"/>\n";
    o += "<text x=\"" + num(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + xml_escape(spec.title) + "</text>\n";

    // Grid and y ticks.
    const double ystep = nice_step(yr.hi - yr.lo, 6);
    for (double t = std::ceil(yr.lo / ystep) * ystep; t <= yr.hi + 1e-9 * ystep; t += ystep) {
        const double y = sy(t);
        o += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft + pw) + "\" y2=\"" + num(y) +
             "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        o += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(y + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + tick_text(t) + "</text>\n";
    }
    if (yr.lo < 0 && yr.hi > 0) {
        o += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" + num(kLeft + pw) + "\" y2=\"" +
             num(sy(0)) + "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    }

    // X ticks.
    if (!spec.x_ticks.empty()) {
        for (size_t i = 0; i < spec.x.size(); ++i) {
            const double x = sx(spec.x[i]);
            const double y = kTop + ph + 12;
            o += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" transform=\"rotate(-45 " + num(x) + " " + num(y) +
                 ")\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
                 xml_escape(spec.x_ticks[i]) + "</text>\n";
        }
    } else {
        const double xstep = nice_step(xr.hi - xr.lo, 8);
        for (double t = std::ceil(xr.lo / xstep) * xstep; t <= xr.hi + 1e-9 * xstep; t += xstep) {
            o += "<text x=\"" + num(sx(t)) + "\" y=\"" + num(kTop + ph + 18) +
                 "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + tick_text(t) +
                 "</text>\n";
        }
    }
    o += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    o += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + xml_escape(spec.x_label) +
         "</text>\n";
    o += "<text x=\"20\" y=\"" + num(kTop + ph / 2) + "\" transform=\"rotate(-90 20 " + num(kTop + ph / 2) +
         ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + xml_escape(spec.y_label) +
         "</text>\n";

    for (size_t si = 0; si < spec.series.size(); ++si) {
        const auto &s = spec.series[si];
        const std::string color = xml_escape(s.color);
        const bool has_ci = !s.lo.empty() && !s.hi.empty();
        o += "<g class=\"series\" data-name=\"" + xml_escape(s.name) + "\">\n";
        if (has_ci && s.band) {
            std::string pts;
            for (size_t i = 0; i < s.y.size(); ++i) {
                if (std::isfinite(s.hi[i])) pts += num(sx(spec.x[i])) + "," + num(sy(s.hi[i])) + " ";
            }
            for (size_t i = s.y.size(); i-- > 0;) {
                if (std::isfinite(s.lo[i])) pts += num(sx(spec.x[i])) + "," + num(sy(s.lo[i])) + " ";
            }
            o += "<polygon class=\"band\" points=\"" + pts + "\" fill=\"" + color +
                 "\" fill-opacity=\"0.15\" stroke=\"none\"/>\n";
        }
        if (s.style == SeriesStyle::Line) {
            std::string pts;
            for (size_t i = 0; i < s.y.size(); ++i) {
                if (std::isfinite(s.y[i])) pts += num(sx(spec.x[i])) + "," + num(sy(s.y[i])) + " ";
            }
            o += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
        } else {
            for (size_t i = 0; i < s.y.size(); ++i) {
                if (!std::isfinite(s.y[i])) continue;
                const double x = sx(spec.x[i]);
                if (has_ci && std::isfinite(s.lo[i]) && std::isfinite(s.hi[i])) {
                    o += "<line class=\"ci\" x1=\"" + num(x) + "\" y1=\"" + num(sy(s.lo[i])) + "\" x2=\"" + num(x) +
                         "\" y2=\"" + num(sy(s.hi[i])) + "\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
                }
                o += "<circle cx=\"" + num(x) + "\" cy=\"" + num(sy(s.y[i])) + "\" r=\"3\" fill=\"" + color +
                     "\"/>\n";
            }
        }
        o += "</g>\n";
        const double ly = kTop + 14 + 20 * static_cast<double>(si);
        const double lx = kLeft + pw + 15;
        o += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly - 9) + "\" width=\"12\" height=\"12\" fill=\"" + color +
             "\"/>\n";
        o += "<text x=\"" + num(lx + 18) + "\" y=\"" + num(ly + 1) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(s.name) + "</text>\n";
    }
    o += "</svg>\n";
    return o;
}

}  // namespace qfb
