// Copyright 2026 The falqon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "falqon/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace falqon::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 60;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string svg_line_plot(const std::vector<Series> &series, const std::string &x_label,
                          const std::string &y_label) {
    std::size_t x_max = 1;
    double y_lo = std::numeric_limits<double>::infinity();
    double y_hi = -std::numeric_limits<double>::infinity();
    for (const auto &s : series) {
        x_max = std::max(x_max, s.y.size());
        for (double v : s.y) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    }
    if (!std::isfinite(y_lo)) {
        y_lo = 0.0;
        y_hi = 1.0;
    }
    if (y_hi - y_lo < 1e-12) {
        y_hi = y_lo + 1.0;
    }
    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin;
    auto px = [&](std::size_t i) {
        return kMargin + plot_w * (x_max > 1 ? static_cast<double>(i) / static_cast<double>(x_max - 1) : 0.0);
    };
    auto py = [&](double v) { return kMargin + plot_h * (1.0 - (v - y_lo) / (y_hi - y_lo)); };

    static const char *colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
                      "\" height=\"" + num(kHeight) + "\">\n";
    const std::string left = num(kMargin);
    const std::string right = num(kWidth - kMargin);
    const std::string top = num(kMargin);
    const std::string bottom = num(kHeight - kMargin);
    out += "<line x1=\"" + left + "\" y1=\"" + bottom + "\" x2=\"" + right + "\" y2=\"" + bottom +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + left + "\" y1=\"" + top + "\" x2=\"" + left + "\" y2=\"" + bottom +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 15) +
           "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
    out += "<text x=\"15\" y=\"" + num(kHeight / 2) + "\" transform=\"rotate(-90 15 " +
           num(kHeight / 2) + ")\" text-anchor=\"middle\">" + escape(y_label) + "</text>\n";
    out += "<text x=\"" + num(kMargin - 5) + "\" y=\"" + bottom + "\" text-anchor=\"end\">" +
           tick(y_lo) + "</text>\n";
    out += "<text x=\"" + num(kMargin - 5) + "\" y=\"" + top + "\" text-anchor=\"end\">" +
           tick(y_hi) + "</text>\n";
    out += "<text x=\"" + right + "\" y=\"" + num(kHeight - kMargin + 15) +
           "\" text-anchor=\"end\">" + std::to_string(x_max) + "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto &s = series[k];
        const char *color = colors[k % std::size(colors)];
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" points=\"";
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            out += (i > 0 ? " " : "") + num(px(i)) + "," + num(py(s.y[i]));
        }
        out += "\"/>\n";
        out += "<text x=\"" + num(kWidth - kMargin + 5) + "\" y=\"" +
               num(kMargin + 15.0 * static_cast<double>(k)) + "\" fill=\"" + color +
               "\" font-size=\"10\">" + escape(s.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace falqon::cli
