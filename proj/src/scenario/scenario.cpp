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

#include "dobsteer/scenario/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

Profile curve_entry(double t_start, double ramp, double curvature) {
  return [=](double t) {
    if (t < t_start) return 0.0;
    if (ramp <= 0.0 || t >= t_start + ramp) return curvature;
    return curvature * (t - t_start) / ramp;
  };
}

Profile step_profile(double t_start, double size) {
  return [=](double t) { return t < t_start ? 0.0 : size; };
}

Profile sine_profile(double amplitude, double omega) {
  return [=](double t) { return amplitude * std::sin(omega * t); };
}

Profile zero_profile() {
  return [](double) { return 0.0; };
}

Profile default_disturbance(DisturbanceKind kind) {
  switch (kind) {
    case DisturbanceKind::kStep: return step_profile(20.0, 0.1);
    case DisturbanceKind::kSine: return sine_profile(0.05, 0.5);
    case DisturbanceKind::kNone: break;
  }
  return zero_profile();
}

std::size_t Scenario::steps() const {
  if (!(h > 0.0) || !(duration >= 0.0)) {
    throw InvalidInput("scenario: need h > 0 and duration >= 0");
  }
  const double n = duration / h;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) > 1e-6 * std::max(1.0, n)) {
    throw InvalidInput("scenario: duration must be a whole number of steps");
  }
  return static_cast<std::size_t>(rounded);
}

Scenario default_scenario(Architecture arch, const VehicleParams& plant,
                          double delay, DisturbanceKind disturbance) {
  Scenario s;
  s.loop.architecture = arch;
  s.loop.plant = plant;
  s.loop.delay = delay;
  s.d = default_disturbance(disturbance);
  return s;
}

double rms(std::span<const double> series) {
  if (series.empty()) throw InvalidInput("rms of an empty series");
  double acc = 0.0;
  for (double v : series) acc += v * v;
  return std::sqrt(acc / static_cast<double>(series.size()));
}

Metrics compute_metrics(const SimTrace& trace, double h) {
  Metrics m;
  if (trace.y.empty()) return m;
  m.rms_y = rms(trace.y);
  m.rms_steer = rms(trace.delta_f);
  for (double v : trace.y) {
    m.peak_y = std::max(m.peak_y, std::abs(v));
    m.ise_y += v * v * h;
  }
  return m;
}

RunResult run_scenario(const Scenario& s) {
  const std::size_t n = s.steps();
  ClosedLoop loop = assemble_loop(s.loop, s.h);
  std::vector<Probe> probes = {{"y"},     {"delta"}, {"u_new"},
                               {"d_hat"}, {"r"},     {"e"}};
  if (loop.has_yaw_state) probes.push_back({"plant", 2});

  const auto sources = [&](double t, std::span<double> v) {
    v[0] = s.r(t);
    v[1] = s.d(t);
    v[2] = s.rho(t);
  };
  auto cols = loop.run.run(n, sources, probes);

  RunResult out;
  SimTrace& tr = out.trace;
  tr.t.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) tr.t[k] = static_cast<double>(k) * s.h;
  tr.y = std::move(cols[0]);
  tr.delta_f = std::move(cols[1]);
  tr.u_new = std::move(cols[2]);
  tr.d_hat = std::move(cols[3]);
  tr.r = std::move(cols[4]);
  tr.e = std::move(cols[5]);
  tr.dpsi = loop.has_yaw_state ? std::move(cols[6]) : std::vector<double>(n + 1, 0.0);
  out.metrics = compute_metrics(tr, s.h);
  return out;
}

VertexTable compare_vertices(const Scenario& base, const UncertaintyBox& box) {
  if (base.loop.delay != 0.0) {
    throw InvalidInput("vertex comparison runs without actuation delay");
  }
  const auto verts = vertices(box);
  VertexTable table;
  std::vector<std::future<double>> jobs;
  for (const auto arch : {Architecture::kPD, Architecture::kPD_DOB}) {
    for (const auto& v : verts) {
      Scenario s = base;
      s.loop.architecture = arch;
      s.loop.plant = v;
      jobs.push_back(std::async(std::launch::async, [s] {
        return run_scenario(s).metrics.rms_y;
      }));
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    char label[48];
    std::snprintf(label, sizeof(label), "%gkm/h %gkg", verts[i].v_kmh,
                  verts[i].virtual_mass());
    table.labels[i] = label;
    table.pd[i] = jobs[i].get();
  }
  for (std::size_t i = 0; i < 4; ++i) {
    table.pd_dob[i] = jobs[4 + i].get();
    table.reduction_pct[i] = 100.0 * (table.pd[i] - table.pd_dob[i]) / table.pd[i];
  }
  return table;
}

}  // namespace dobsteer
