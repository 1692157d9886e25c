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
#include <cstdint>
#include <string>
#include <vector>

#include "dobsteer/lti/transfer_function.hpp"

namespace dobsteer {

/// Pole region: Re <= -sigma, inside the damping cone of half-angle
/// theta - 90 deg around the negative real axis, and |p| <= radius for the
/// dominant pair.
struct DRegion {
  double sigma = 0.3;
  double theta_deg = 135.0;
  double radius = 1.3;
  void validate() const;
};

/// Monic den(C) den(Gn) + num(C) num(Gn). Throws SingularLoop when it vanishes.
Polynomial char_poly(const TransferFunction& c, const TransferFunction& gn);

bool in_d_region(Complex pole, const DRegion& region, bool dominant);

/// Roots with the smallest |Re| (a real root or a conjugate pair).
std::vector<Complex> dominant_roots(const std::vector<Complex>& roots);

struct GainCheck {
  bool feasible = false;
  std::vector<Complex> roots;
  Complex dominant;  // upper-half-plane member of the dominant set
  std::string diagnostic;  // set when root finding failed
};

/// Closed-loop poles of the unfiltered PD kp + kd s around gn, checked against
/// the region (sigma and theta on every root, radius on the dominant set).
GainCheck check_gains(double kp, double kd, const TransferFunction& gn,
                      const DRegion& region);

struct GridSpec {
  double kp_min = 0.0, kp_max = 3.0;
  double kd_min = 0.0, kd_max = 3.0;
  double step = 0.02;
  void validate() const;
};

struct GainGrid {
  GridSpec spec;
  std::size_t n_kp = 0;
  std::size_t n_kd = 0;
  std::vector<std::uint8_t> feasible;  // row-major, kp index outer
  std::vector<Complex> dominant;
  std::vector<std::string> diagnostics;

  double kp(std::size_t i) const;
  double kd(std::size_t j) const;
  bool at(std::size_t i, std::size_t j) const { return feasible[i * n_kd + j] != 0; }
  std::size_t feasible_count() const;
  /// Cell nearest to (kp, kd).
  std::pair<std::size_t, std::size_t> nearest(double kp, double kd) const;
  /// Size of the 4-connected feasible component containing cell (i, j),
  /// zero if that cell is infeasible.
  std::size_t component_size(std::size_t i, std::size_t j) const;
};

GainGrid feasible_map(const TransferFunction& gn, const GridSpec& spec,
                      const DRegion& region);

}  // namespace dobsteer
