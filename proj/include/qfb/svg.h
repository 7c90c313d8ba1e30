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

#ifndef QFB_SVG_H
#define QFB_SVG_H

#include <string>
#include <vector>

namespace qfb {

enum class SeriesStyle : unsigned char { Points, Line };

/// One plotted quantity. `lo`/`hi` are either empty or parallel to `y`;
/// when present they draw as error bars (points) or a shaded band (line).
struct PlotSeries {
    std::string name;
    std::string color;
    std::vector<double> y;
    std::vector<double> lo;
    std::vector<double> hi;
    SeriesStyle style = SeriesStyle::Points;
    bool band = false;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    /// Shared abscissae for every series.
    std::vector<double> x;
    /// Categorical tick labels parallel to x; numeric ticks when empty.
    std::vector<std::string> x_ticks;
    std::vector<PlotSeries> series;
};

/// Self-contained SVG 1.1 document. Output bytes depend only on the input.
/// Throws std::invalid_argument for an empty chart or mismatched lengths.
std::string render_chart(const ChartSpec &spec);

/// Escapes &, <, >, and quotes for text nodes and attributes.
std::string xml_escape(const std::string &text);

}  // namespace qfb

#endif
