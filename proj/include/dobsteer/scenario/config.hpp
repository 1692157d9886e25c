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

#include "dobsteer/scenario/scenario.hpp"

namespace dobsteer {

/**
 * Reads a scenario from an INI file.
 *
 *   [vehicle]  m J lf lr cf cr v_kmh mu
 *   [loop]     architecture kp kd tau_d wc_dob wc_cdob delay plant
 *   [scenario] duration h path disturbance step_time step_size
 *              sine_amp sine_omega ref_step
 *
 * plant is "vehicle" (default) or "nominal"; path is "curve" (default),
 * "straight" or "reference" (unit reference step, no curvature);
 * disturbance is none|step|sine. Missing keys keep their defaults.
 */
Scenario load_scenario(const std::string& path);

}  // namespace dobsteer
