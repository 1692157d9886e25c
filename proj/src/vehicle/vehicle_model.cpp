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

#include "dobsteer/vehicle/vehicle_model.hpp"

#include <algorithm>
#include <cmath>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidInput(std::string("vehicle: ") + name + " must be positive");
  }
}

}  // namespace

void VehicleParams::validate() const {
  require_positive(m, "m");
  require_positive(J, "J");
  require_positive(lf, "lf");
  require_positive(lr, "lr");
  require_positive(cf, "cf");
  require_positive(cr, "cr");
  if (!(v_kmh >= 0.0) || !std::isfinite(v_kmh)) {
    throw InvalidInput("vehicle: v_kmh must be non-negative");
  }
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw InvalidInput("vehicle: mu must lie in (0, 1]");
  }
}

void UncertaintyBox::validate() const {
  if (!(v_min_kmh > 0.0) || v_max_kmh < v_min_kmh || !(mass_min > 0.0) ||
      mass_max < mass_min) {
    throw InvalidInput("uncertainty box: bad ranges");
  }
  if (v_nominal_kmh < v_min_kmh || v_nominal_kmh > v_max_kmh ||
      mass_nominal < mass_min || mass_nominal > mass_max) {
    throw InvalidInput("uncertainty box: nominal point outside the box");
  }
}

UncertaintyBox UncertaintyBox::collapsed() {
  UncertaintyBox b;
  b.v_min_kmh = b.v_max_kmh = b.v_nominal_kmh;
  b.mass_min = b.mass_max = b.mass_nominal;
  return b;
}

VehicleParams params_at(double v_kmh, double virtual_mass,
                        const VehicleParams& base) {
  require_positive(virtual_mass, "virtual mass");
  VehicleParams p = base;
  p.v_kmh = v_kmh;
  p.m = std::min(virtual_mass, 2000.0);
  p.mu = p.m / virtual_mass;
  return p;
}

std::array<VehicleParams, 4> vertices(const UncertaintyBox& box,
                                      const VehicleParams& base) {
  box.validate();
  return {params_at(box.v_min_kmh, box.mass_min, base),
          params_at(box.v_max_kmh, box.mass_min, base),
          params_at(box.v_min_kmh, box.mass_max, base),
          params_at(box.v_max_kmh, box.mass_max, base)};
}

VehicleParams nominal_params(const UncertaintyBox& box,
                             const VehicleParams& base) {
  box.validate();
  return params_at(box.v_nominal_kmh, box.mass_nominal, base);
}

StateSpaceModel build_plant(const VehicleParams& p) {
  p.validate();
  const double v = p.speed();
  if (v == 0.0) throw SingularLoop("vehicle: plant is singular at zero speed");
  const double m = p.m / p.mu;
  const double j = p.J / p.mu;
  const double cf = p.cf, cr = p.cr, lf = p.lf, lr = p.lr;

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(4, 4);
  A(0, 0) = -(cf + cr) / (m * v);
  A(0, 1) = -1.0 + (cr * lr - cf * lf) / (m * v * v);
  A(1, 0) = (cr * lr - cf * lf) / j;
  A(1, 1) = -(cf * lf * lf + cr * lr * lr) / (j * v);
  A(2, 1) = 1.0;
  A(3, 0) = v;
  A(3, 2) = v;

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 2);
  B(0, 0) = cf / (m * v);
  B(1, 0) = cf * lf / j;
  B(2, 1) = -v;

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(1, 4);
  C(0, 3) = 1.0;
  return {std::move(A), std::move(B), std::move(C), Eigen::MatrixXd::Zero(1, 2)};
}

TransferFunction plant_tf(const VehicleParams& p) {
  return ss_to_tf(build_plant(p), 0, 0);
}

TransferFunction nominal_tf() {
  return {Polynomial{227.6, 84790.0, 36270.0},
          Polynomial{1.0, 459.2, 33290.0, 0.0, 0.0}};
}

VehicleParams load_vehicle_params(const std::string& path) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(path, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw InvalidInput("cannot read vehicle parameters from '" + path +
                       "': " + e.message());
  }
  VehicleParams p;
  p.m = tree.get("vehicle.m", p.m);
  p.J = tree.get("vehicle.J", p.J);
  p.lf = tree.get("vehicle.lf", p.lf);
  p.lr = tree.get("vehicle.lr", p.lr);
  p.cf = tree.get("vehicle.cf", p.cf);
  p.cr = tree.get("vehicle.cr", p.cr);
  p.v_kmh = tree.get("vehicle.v_kmh", p.v_kmh);
  p.mu = tree.get("vehicle.mu", p.mu);
  p.validate();
  return p;
}

}  // namespace dobsteer
