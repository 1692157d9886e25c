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

#include "dobsteer/scenario/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

Scenario load_scenario(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw InvalidInput("cannot read scenario '" + path + "': " + e.message());
  }

  Scenario s;
  s.loop.plant = load_vehicle_params(path);

  LoopConfig& lc = s.loop;
  lc.architecture =
      parse_architecture(tree.get<std::string>("loop.architecture", "pd"));
  lc.gains.kp = tree.get("loop.kp", lc.gains.kp);
  lc.gains.kd = tree.get("loop.kd", lc.gains.kd);
  lc.gains.tau_d = tree.get("loop.tau_d", lc.gains.tau_d);
  lc.q_dob.wc = tree.get("loop.wc_dob", lc.q_dob.wc);
  lc.q_cdob.wc = tree.get("loop.wc_cdob", lc.q_cdob.wc);
  lc.delay = tree.get("loop.delay", lc.delay);
  const auto plant = tree.get<std::string>("loop.plant", "vehicle");
  if (plant == "nominal") {
    lc.plant = nominal_tf();
  } else if (plant != "vehicle") {
    throw InvalidInput("loop.plant must be 'vehicle' or 'nominal'");
  }

  s.duration = tree.get("scenario.duration", s.duration);
  s.h = tree.get("scenario.h", s.h);
  const auto shape = tree.get<std::string>("scenario.path", "curve");
  if (shape == "straight") {
    s.rho = zero_profile();
  } else if (shape == "reference") {
    s.rho = zero_profile();
    s.r = step_profile(0.0, tree.get("scenario.ref_step", 1.0));
  } else if (shape != "curve") {
    throw InvalidInput("scenario.path must be curve, straight or reference");
  }

  const auto dist = tree.get<std::string>("scenario.disturbance", "none");
  if (dist == "step") {
    s.d = step_profile(tree.get("scenario.step_time", 20.0),
                       tree.get("scenario.step_size", 0.1));
  } else if (dist == "sine") {
    s.d = sine_profile(tree.get("scenario.sine_amp", 0.05),
                       tree.get("scenario.sine_omega", 0.5));
  } else if (dist != "none") {
    throw InvalidInput("scenario.disturbance must be none, step or sine");
  }
  lc.validate();
  s.steps();
  return s;
}

}  // namespace dobsteer
