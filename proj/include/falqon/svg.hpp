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
#pragma once

#include <string>
#include <vector>

namespace falqon::cli {

struct Series {
    std::string label;
    std::vector<double> y; // plotted against x = 1..size
};

/// Minimal line plot: axes, min/max tick labels, one polyline per series.
[[nodiscard]] std::string svg_line_plot(const std::vector<Series> &series,
                                        const std::string &x_label, const std::string &y_label);

} // namespace falqon::cli
