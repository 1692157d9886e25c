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

#include "dobsteer/design/dstability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

void DRegion::validate() const {
  if (!(sigma > 0.0) || !(theta_deg > 90.0 && theta_deg <= 180.0) ||
      !(radius > sigma)) {
    throw InvalidInput("D-region needs sigma > 0, 90 < theta <= 180, R > sigma");
  }
}

Polynomial char_poly(const TransferFunction& c, const TransferFunction& gn) {
  Polynomial p = c.den() * gn.den() + c.num() * gn.num();
  if (p.is_zero()) throw SingularLoop("characteristic polynomial vanishes");
  return p.monic();
}

bool in_d_region(Complex pole, const DRegion& region, bool dominant) {
  if (!(pole.real() <= -region.sigma)) return false;
  const double half_cone = (region.theta_deg - 90.0) * std::numbers::pi / 180.0;
  if (std::atan2(std::abs(pole.imag()), -pole.real()) > half_cone) return false;
  return !dominant || std::abs(pole) <= region.radius;
}

std::vector<Complex> dominant_roots(const std::vector<Complex>& roots) {
  if (roots.empty()) return {};
  double min_re = std::abs(roots.front().real());
  for (const auto& r : roots) min_re = std::min(min_re, std::abs(r.real()));
  std::vector<Complex> out;
  for (const auto& r : roots) {
    if (std::abs(r.real()) - min_re <= 1e-9 * std::max(1.0, min_re)) {
      out.push_back(r);
    }
  }
  return out;
}

GainCheck check_gains(double kp, double kd, const TransferFunction& gn,
                      const DRegion& region) {
  GainCheck out;
  const TransferFunction c(Polynomial{kd, kp}, Polynomial{1.0});
  try {
    out.roots = poly_roots(char_poly(c, gn));
  } catch (const std::exception& e) {
    out.diagnostic = e.what();
    return out;
  }
  const auto dom = dominant_roots(out.roots);
  out.dominant = dom.front();
  for (const auto& r : dom) {
    if (r.imag() > out.dominant.imag()) out.dominant = r;
  }
  out.feasible = std::all_of(out.roots.begin(), out.roots.end(), [&](Complex r) {
    return in_d_region(r, region, false);
  }) && std::all_of(dom.begin(), dom.end(), [&](Complex r) {
    return in_d_region(r, region, true);
  });
  return out;
}

void GridSpec::validate() const {
  if (!(step > 0.0) || kp_max < kp_min || kd_max < kd_min) {
    throw InvalidInput("gain grid: bad ranges or step");
  }
}

double GainGrid::kp(std::size_t i) const {
  return spec.kp_min + static_cast<double>(i) * spec.step;
}

double GainGrid::kd(std::size_t j) const {
  return spec.kd_min + static_cast<double>(j) * spec.step;
}

std::size_t GainGrid::feasible_count() const {
  return static_cast<std::size_t>(
      std::count(feasible.begin(), feasible.end(), std::uint8_t{1}));
}

std::pair<std::size_t, std::size_t> GainGrid::nearest(double kp_v,
                                                      double kd_v) const {
  auto idx = [&](double v, double lo, std::size_t n) {
    const double k = std::round((v - lo) / spec.step);
    return static_cast<std::size_t>(
        std::clamp(k, 0.0, static_cast<double>(n - 1)));
  };
  return {idx(kp_v, spec.kp_min, n_kp), idx(kd_v, spec.kd_min, n_kd)};
}

std::size_t GainGrid::component_size(std::size_t i, std::size_t j) const {
  if (i >= n_kp || j >= n_kd || !at(i, j)) return 0;
  std::vector<std::uint8_t> seen(feasible.size(), 0);
  std::vector<std::size_t> stack{i * n_kd + j};
  seen[stack.back()] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    const std::size_t cell = stack.back();
    stack.pop_back();
    ++count;
    const std::size_t ci = cell / n_kd, cj = cell % n_kd;
    auto visit = [&](std::size_t ni, std::size_t nj) {
      const std::size_t nc = ni * n_kd + nj;
      if (feasible[nc] && !seen[nc]) {
        seen[nc] = 1;
        stack.push_back(nc);
      }
    };
    if (ci > 0) visit(ci - 1, cj);
    if (ci + 1 < n_kp) visit(ci + 1, cj);
    if (cj > 0) visit(ci, cj - 1);
    if (cj + 1 < n_kd) visit(ci, cj + 1);
  }
  return count;
}

GainGrid feasible_map(const TransferFunction& gn, const GridSpec& spec,
                      const DRegion& region) {
  spec.validate();
  region.validate();
  GainGrid grid;
  grid.spec = spec;
  grid.n_kp = static_cast<std::size_t>(
                  std::floor((spec.kp_max - spec.kp_min) / spec.step + 1e-9)) + 1;
  grid.n_kd = static_cast<std::size_t>(
                  std::floor((spec.kd_max - spec.kd_min) / spec.step + 1e-9)) + 1;
  const std::size_t cells = grid.n_kp * grid.n_kd;
  grid.feasible.assign(cells, 0);
  grid.dominant.assign(cells, Complex());
  grid.diagnostics.assign(cells, std::string());
  for (std::size_t i = 0; i < grid.n_kp; ++i) {
    for (std::size_t j = 0; j < grid.n_kd; ++j) {
      const GainCheck g = check_gains(grid.kp(i), grid.kd(j), gn, region);
      const std::size_t cell = i * grid.n_kd + j;
      grid.feasible[cell] = g.feasible ? 1 : 0;
      grid.dominant[cell] = g.dominant;
      grid.diagnostics[cell] = g.diagnostic;
    }
  }
  return grid;
}

}  // namespace dobsteer
