/******************************************************************************
 * Copyright 2026 The dobsteer Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#pragma once

#include <string>
#include <vector>

#include "dobsteer/scenario/scenario.hpp"

namespace dobsteer {

/// Header of every trace CSV.
inline constexpr const char* kTraceHeader = "t,y,dpsi,delta_f,u_new,d_hat,r";

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Writes the trace as CSV. Throws std::runtime_error naming the path on I/O failure.
void write_trace_csv(const SimTrace& trace, const std::string& path);
/// Reads a file written by write_trace_csv.
SimTrace read_trace_csv(const std::string& path);

void write_table_csv(const VertexTable& table, const std::string& path);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
};

/// Plain SVG line chart with labeled axes.
void write_svg(const std::vector<Series>& series, const PlotSpec& spec,
               const std::string& path);

/// Lateral deviation and steering (in degrees) as two SVG files:
/// <stem>_y.svg and <stem>_steer.svg.
void write_trace_svg(const SimTrace& trace, const std::string& stem);

}  // namespace dobsteer
