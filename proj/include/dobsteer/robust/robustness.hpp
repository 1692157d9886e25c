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

#include <cstddef>
#include <span>
#include <vector>

#include "dobsteer/lti/transfer_function.hpp"
#include "dobsteer/vehicle/vehicle_model.hpp"

namespace dobsteer {

/// 400 log-spaced points over [1e-2, 1e4] rad/s.
std::vector<double> default_robust_grid();

/// Which plant the vertex plants are compared against.
enum class EnvelopeReference {
  kParametric,   // single-track builder at the box's nominal point
  kDesignModel,  // the fixed model inverted by the observer
};

struct UncertaintyEnvelope {
  std::vector<double> omega;
  std::vector<double> magnitude;  // max over vertices of |Gv / Gref - 1|
  std::vector<int> argmax;        // vertex index 0..3 attaining the max
};

UncertaintyEnvelope delta_m_envelope(
    const UncertaintyBox& box, std::span<const double> omega,
    EnvelopeReference reference = EnvelopeReference::kParametric,
    const VehicleParams& base = {});

/// |Gv(jw) / Gref(jw) - 1| for one vertex plant.
double relative_error(const TransferFunction& gv, const TransferFunction& gref,
                      double omega);

struct StabilityReport {
  bool pass = false;
  bool nominal_unstable = false;
  double margin_db = 0.0;        // min over the grid of 20 log10(bound / test)
  double critical_omega = 0.0;   // where the minimum occurs
  std::vector<double> omega;
  std::vector<double> test;
  std::vector<double> bound;     // +inf where the uncertainty vanishes
  std::vector<double> point_margin_db;
};

/// |Q(jw)| < 1 / env(w) on every grid point.
StabilityReport dob_small_gain(const TransferFunction& q,
                               const UncertaintyEnvelope& env);

/// e^{-jwT} - 1.
Complex delay_uncertainty(double omega, double delay);

/// Nominal loop of the delayed observer, C (1 - Q) Gn e^{-jwT} / (1 + C Gn Q).
Complex cdob_nominal_loop(const TransferFunction& c, const TransferFunction& gn,
                          const TransferFunction& q, double delay, double omega);

/// |Ln / (1 + Ln)| < 1 / |e^{-jwT} - 1| on every grid point.
StabilityReport cdob_small_gain(const TransferFunction& c,
                                const TransferFunction& gn,
                                const TransferFunction& q, double delay,
                                std::span<const double> omega);

}  // namespace dobsteer
