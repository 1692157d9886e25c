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
#include <string_view>
#include <variant>
#include <vector>

#include "dobsteer/lti/block_diagram.hpp"
#include "dobsteer/lti/transfer_function.hpp"
#include "dobsteer/vehicle/vehicle_model.hpp"

namespace dobsteer {

struct PDGains {
  double kp = 1.0596;
  double kd = 0.939;    // s
  double tau_d = 0.002; // derivative filter, simulation only
  void validate() const;
};

/// kp + kd s, or kp + kd s / (tau_d s + 1) when filtered.
TransferFunction pd_tf(const PDGains& g, bool filtered);

/// Second-order low pass 1 / (tau s + 1)^2 with tau = 1 / wc.
struct QFilter {
  double wc = 5.0;
  double tau() const { return 1.0 / wc; }
};

TransferFunction q_tf(const QFilter& q);

struct DobTransfers {
  TransferFunction regulation;  // y / u_new
  TransferFunction rejection;   // y / d
};

/**
 * Closed loops of the disturbance observer around G:
 *   regulation = Gn G / (G Q + Gn (1 - Q))
 *   rejection  = Gn (1 - Q) / (G Q + Gn (1 - Q))
 * built from the coefficient polynomials without cancellation.
 * Throws CausalityError when Q / Gn is improper.
 */
DobTransfers dob_transfers(const TransferFunction& g, const TransferFunction& gn,
                           const TransferFunction& q);

/**
 * C Gn e^{-jwT} / (1 + C Gn Q + C Gn (1 - Q) e^{-jwT}) at s = jw.
 * Throws SingularLoop when the denominator magnitude is below 1e-12.
 */
Complex cdob_response(const TransferFunction& c, const TransferFunction& gn,
                      const TransferFunction& q, double delay, double omega);

enum class Architecture { kPD, kPD_DOB, kPD_CDOB, kPD_DDOB };

std::string_view to_string(Architecture a);
/// Accepts pd, pd_dob, pd_cdob, pd_ddob (any case).
Architecture parse_architecture(std::string_view name);

struct LoopConfig {
  Architecture architecture = Architecture::kPD;
  PDGains gains;
  QFilter q_dob{5.0};
  QFilter q_cdob{200.0};
  double delay = 0.08;  // actuation delay T [s]
  /// Simulated plant: the single-track model, or an explicit y / delta_f
  /// transfer function (which ignores the curvature input).
  std::variant<VehicleParams, TransferFunction> plant = VehicleParams{};
  /// Model inverted by the observers.
  TransferFunction nominal = nominal_tf();

  void validate() const;
};

/**
 * Executable closed loop.
 *
 * Exogenous inputs, in order: r (reference), d (output disturbance),
 * rho (path curvature). Named signals: y (measured output, plant + d),
 * cmd (steering command before the delay), delta (applied steering),
 * u_new (PD output), d_hat (observer estimate), e (y - Gn delta).
 * For a vehicle plant, probe {"plant", 2} is the yaw error.
 */
struct ClosedLoop {
  DiagramRun run;
  Architecture architecture;
  bool has_yaw_state = false;
};

ClosedLoop assemble_loop(const LoopConfig& cfg, double h);

}  // namespace dobsteer
