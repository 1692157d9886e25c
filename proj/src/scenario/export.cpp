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

#include "dobsteer/scenario/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dobsteer {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void check_written(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

double parse_double(std::string_view s, const std::string& path) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::runtime_error("bad number '" + std::string(s) + "' in '" + path + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_trace_csv(const SimTrace& trace, const std::string& path) {
  auto out = open_out(path);
  out << kTraceHeader << '\n';
  for (std::size_t k = 0; k < trace.size(); ++k) {
    out << format_double(trace.t[k]) << ',' << format_double(trace.y[k]) << ','
        << format_double(trace.dpsi[k]) << ',' << format_double(trace.delta_f[k])
        << ',' << format_double(trace.u_new[k]) << ','
        << format_double(trace.d_hat[k]) << ',' << format_double(trace.r[k])
        << '\n';
  }
  check_written(out, path);
}

SimTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw std::runtime_error("'" + path + "' is not a trace CSV");
  }
  SimTrace tr;
  std::vector<double>* cols[] = {&tr.t,     &tr.y,     &tr.dpsi, &tr.delta_f,
                                 &tr.u_new, &tr.d_hat, &tr.r};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t start = 0;
    for (std::size_t c = 0; c < 7; ++c) {
      const std::size_t end = c == 6 ? line.size() : line.find(',', start);
      if (end == std::string::npos) {
        throw std::runtime_error("short row in '" + path + "'");
      }
      cols[c]->push_back(
          parse_double(std::string_view(line).substr(start, end - start), path));
      start = end + 1;
    }
  }
  return tr;
}

void write_table_csv(const VertexTable& table, const std::string& path) {
  auto out = open_out(path);
  out << "vertex,rms_pd,rms_pd_dob,reduction_pct\n";
  for (std::size_t i = 0; i < 4; ++i) {
    out << table.labels[i] << ',' << format_double(table.pd[i]) << ','
        << format_double(table.pd_dob[i]) << ','
        << format_double(table.reduction_pct[i]) << '\n';
  }
  check_written(out, path);
}

void write_svg(const std::vector<Series>& series, const PlotSpec& spec,
               const std::string& path) {
  constexpr double W = 720, H = 420, L = 70, R = 20, T = 40, B = 50;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  auto fx = [&](double x) { return spec.log_x ? std::log10(x) : x; };

  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i]) || (spec.log_x && !(s.x[i] > 0))) continue;
      x0 = std::min(x0, fx(s.x[i]));
      x1 = std::max(x1, fx(s.x[i]));
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  }
  if (!(x1 > x0)) { x0 = 0; x1 = 1; }
  if (!(y1 > y0)) { y0 -= 1; y1 += 1; }
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double x) { return L + (fx(x) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R
      << "\" height=\"" << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n"
      << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << spec.title << "</text>\n"
      << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\">" << spec.x_label << "</text>\n"
      << "<text x=\"16\" y=\"" << (T + H - B) / 2
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << (T + H - B) / 2
      << ")\">" << spec.y_label << "</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    const double gx = L + (W - L - R) * i / 4.0;
    const double gy = H - B - (H - T - B) * i / 4.0;
    std::ostringstream xl, yl;
    xl.precision(3);
    yl.precision(3);
    if (spec.log_x) xl << "1e" << xv; else xl << xv;
    yl << yv;
    svg << "<text x=\"" << gx << "\" y=\"" << H - B + 16
        << "\" text-anchor=\"middle\">" << xl.str() << "</text>\n"
        << "<text x=\"" << L - 6 << "\" y=\"" << gy + 4
        << "\" text-anchor=\"end\">" << yl.str() << "</text>\n";
  }
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kColors[k % 8];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.2\" points=\"";
    // Thin long traces to at most ~2000 vertices.
    const std::size_t stride = std::max<std::size_t>(1, s.x.size() / 2000);
    for (std::size_t i = 0; i < s.x.size(); i += stride) {
      if (!std::isfinite(s.y[i]) || (spec.log_x && !(s.x[i] > 0))) continue;
      svg << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
    }
    svg << "\"/>\n<text x=\"" << L + 10 << "\" y=\"" << T + 16 + 14 * k
        << "\" fill=\"" << color << "\">" << s.label << "</text>\n";
  }
  svg << "</svg>\n";

  auto out = open_out(path);
  out << svg.str();
  check_written(out, path);
}

void write_trace_svg(const SimTrace& trace, const std::string& stem) {
  write_svg({{"y", trace.t, trace.y}},
            {"Lateral deviation", "t [s]", "y [m]", false}, stem + "_y.svg");
  std::vector<double> deg(trace.delta_f.size());
  std::transform(trace.delta_f.begin(), trace.delta_f.end(), deg.begin(),
                 [](double r) { return r * 180.0 / std::numbers::pi; });
  write_svg({{"delta_f", trace.t, deg}},
            {"Steering angle", "t [s]", "delta_f [deg]", false},
            stem + "_steer.svg");
}

}  // namespace dobsteer
