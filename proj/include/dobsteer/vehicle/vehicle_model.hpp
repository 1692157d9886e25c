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
#include <string>

#include "dobsteer/lti/state_space.hpp"
#include "dobsteer/lti/transfer_function.hpp"

namespace dobsteer {

/**
 * @brief Single-track vehicle parameters. Speed is given in km/h.
 *
 * Defaults are the shuttle values used throughout the library.
 */
struct VehicleParams {
  double m = 2000.0;      // kg
  double J = 3728.0;      // kg m^2
  double lf = 1.3008;     // m
  double lr = 1.5453;     // m
  double cf = 195000.0;   // N/rad
  double cr = 50000.0;    // N/rad
  double v_kmh = 5.0;     // km/h
  double mu = 1.0;        // road friction

  double speed() const { return v_kmh / 3.6; }
  /// m / mu.
  double virtual_mass() const { return m / mu; }
  /// Throws InvalidInput unless every field is positive and mu in (0, 1].
  /// A zero speed is reported separately by build_plant().
  void validate() const;
};

/// Operating region spanned by speed and virtual mass.
struct UncertaintyBox {
  double v_min_kmh = 4.0;
  double v_max_kmh = 7.0;
  double mass_min = 1600.0;   // virtual mass, kg
  double mass_max = 5000.0;
  double v_nominal_kmh = 5.0;
  double mass_nominal = 2000.0;

  void validate() const;
  /// Box with both ranges collapsed onto the nominal point.
  static UncertaintyBox collapsed();
};

/// Plant realizing a (speed, virtual mass) pair: m = min(m~, 2000 kg) and
/// mu = m / m~, all other fields from @p base.
VehicleParams params_at(double v_kmh, double virtual_mass,
                        const VehicleParams& base = {});

/// Corners a..d = (v_min, m_min), (v_max, m_min), (v_min, m_max), (v_max, m_max).
std::array<VehicleParams, 4> vertices(const UncertaintyBox& box,
                                      const VehicleParams& base = {});

/// Nominal plant of the box, through the same builder as the vertices.
VehicleParams nominal_params(const UncertaintyBox& box,
                             const VehicleParams& base = {});

/**
 * States [beta, r, dpsi, y], inputs [delta_f, rho_ref], output y.
 * Friction divides both m and J. Throws SingularLoop for V = 0.
 */
StateSpaceModel build_plant(const VehicleParams& p);

/// y / delta_f channel of build_plant().
TransferFunction plant_tf(const VehicleParams& p);

/// Fixed design model (227.6 s^2 + 84790 s + 36270) / (s^4 + 459.2 s^3 + 33290 s^2).
TransferFunction nominal_tf();

/// Reads [vehicle] keys m, J, lf, lr, cf, cr, v_kmh, mu from an INI file.
/// Missing keys keep their defaults.
VehicleParams load_vehicle_params(const std::string& path);

}  // namespace dobsteer
