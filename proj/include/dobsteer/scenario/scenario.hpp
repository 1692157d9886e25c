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

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dobsteer/control/controllers.hpp"

namespace dobsteer {

using Profile = std::function<double(double t)>;

enum class DisturbanceKind { kNone, kStep, kSine };

/// 0 before t_start, linear ramp to @p curvature over @p ramp seconds, then hold.
Profile curve_entry(double t_start = 5.0, double ramp = 2.0,
                    double curvature = 1.0 / 20.0);
Profile step_profile(double t_start, double size);
Profile sine_profile(double amplitude, double omega);
Profile zero_profile();

/// Step of 0.1 m at 20 s, or 0.05 sin(0.5 t) m.
Profile default_disturbance(DisturbanceKind kind);

struct Scenario {
  LoopConfig loop;
  double duration = 60.0;  // s
  double h = 1e-3;         // s
  Profile rho = curve_entry();
  Profile d = zero_profile();
  Profile r = zero_profile();

  /// Throws InvalidInput unless duration / h is an integer and h > 0.
  std::size_t steps() const;
};

/// Path-following scenario on the default curve for one architecture/plant.
Scenario default_scenario(Architecture arch, const VehicleParams& plant = {},
                          double delay = 0.0,
                          DisturbanceKind disturbance = DisturbanceKind::kNone);

struct SimTrace {
  std::vector<double> t;
  std::vector<double> y;
  std::vector<double> dpsi;     // zero for transfer-function plants
  std::vector<double> delta_f;  // applied steering, rad
  std::vector<double> u_new;
  std::vector<double> d_hat;
  std::vector<double> r;
  std::vector<double> e;        // y - Gn delta_f, not exported

  std::size_t size() const { return t.size(); }
};

struct Metrics {
  double rms_y = 0.0;
  double peak_y = 0.0;
  double rms_steer = 0.0;
  double ise_y = 0.0;
};

/// sqrt(mean(x^2)); throws InvalidInput for an empty series.
double rms(std::span<const double> series);

Metrics compute_metrics(const SimTrace& trace, double h);

struct RunResult {
  SimTrace trace;
  Metrics metrics;
};

/// Throws DivergenceError (step index, last finite state) on blow-up.
RunResult run_scenario(const Scenario& s);

struct VertexTable {
  std::array<std::string, 4> labels;
  std::array<double, 4> pd{};
  std::array<double, 4> pd_dob{};
  std::array<double, 4> reduction_pct{};
};

/// rms_y of PD and PD_DOB at the four box vertices, run concurrently.
/// The base scenario's plant and architecture are replaced; its delay must be 0.
VertexTable compare_vertices(const Scenario& base,
                             const UncertaintyBox& box = {});

}  // namespace dobsteer
