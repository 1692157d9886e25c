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

#include "dobsteer/robust/robustness.hpp"

#include <cmath>
#include <limits>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Margins this close to zero count as failures.
constexpr double kTieDb = 1e-9;

void check_grid(std::span<const double> omega) {
  if (omega.empty()) throw InvalidInput("frequency grid is empty");
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0) || (i > 0 && !(omega[i] > omega[i - 1]))) {
      throw InvalidInput("frequency grid must be positive and increasing");
    }
  }
}

double margin_db(double bound, double test) {
  if (bound == kInf || test == 0.0) return kInf;
  return 20.0 * std::log10(bound / test);
}

void finish(StabilityReport& rep) {
  rep.margin_db = kInf;
  rep.pass = !rep.nominal_unstable;
  for (std::size_t i = 0; i < rep.omega.size(); ++i) {
    const double m = rep.point_margin_db[i];
    if (m < rep.margin_db || (std::isnan(m))) {
      rep.margin_db = m;
      rep.critical_omega = rep.omega[i];
    }
    if (!(m > kTieDb)) rep.pass = false;
  }
}

}  // namespace

std::vector<double> default_robust_grid() { return log_grid(1e-2, 1e4, 400); }

double relative_error(const TransferFunction& gv, const TransferFunction& gref,
                      double omega) {
  const Complex r = gref.at_frequency(omega);
  return std::abs(gv.at_frequency(omega) - r) / std::abs(r);
}

UncertaintyEnvelope delta_m_envelope(const UncertaintyBox& box,
                                     std::span<const double> omega,
                                     EnvelopeReference reference,
                                     const VehicleParams& base) {
  check_grid(omega);
  const TransferFunction gref = reference == EnvelopeReference::kParametric
                                    ? plant_tf(nominal_params(box, base))
                                    : nominal_tf();
  const auto verts = vertices(box, base);
  std::vector<TransferFunction> plants;
  for (const auto& v : verts) plants.push_back(plant_tf(v));

  UncertaintyEnvelope env;
  env.omega.assign(omega.begin(), omega.end());
  env.magnitude.assign(omega.size(), 0.0);
  env.argmax.assign(omega.size(), 0);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    for (std::size_t v = 0; v < plants.size(); ++v) {
      const double e = relative_error(plants[v], gref, omega[i]);
      if (e > env.magnitude[i]) {
        env.magnitude[i] = e;
        env.argmax[i] = static_cast<int>(v);
      }
    }
  }
  return env;
}

StabilityReport dob_small_gain(const TransferFunction& q,
                               const UncertaintyEnvelope& env) {
  check_grid(env.omega);
  if (env.magnitude.size() != env.omega.size()) {
    throw InvalidInput("envelope magnitude and grid differ in length");
  }
  StabilityReport rep;
  rep.omega = env.omega;
  for (std::size_t i = 0; i < env.omega.size(); ++i) {
    const double t = std::abs(q.at_frequency(env.omega[i]));
    const double b = env.magnitude[i] == 0.0 ? kInf : 1.0 / env.magnitude[i];
    rep.test.push_back(t);
    rep.bound.push_back(b);
    rep.point_margin_db.push_back(margin_db(b, t));
  }
  finish(rep);
  return rep;
}

Complex delay_uncertainty(double omega, double delay) {
  return std::exp(Complex(0.0, -omega * delay)) - 1.0;
}

Complex cdob_nominal_loop(const TransferFunction& c, const TransferFunction& gn,
                          const TransferFunction& q, double delay,
                          double omega) {
  const Complex s(0.0, omega);
  const Complex cg = c(s) * gn(s);
  const Complex qv = q(s);
  return cg * (1.0 - qv) * std::exp(Complex(0.0, -omega * delay)) /
         (1.0 + cg * qv);
}

StabilityReport cdob_small_gain(const TransferFunction& c,
                                const TransferFunction& gn,
                                const TransferFunction& q, double delay,
                                std::span<const double> omega) {
  if (!(delay >= 0.0)) throw InvalidInput("delay must be non-negative");
  check_grid(omega);
  StabilityReport rep;
  rep.omega.assign(omega.begin(), omega.end());
  for (double w : omega) {
    const Complex ln = cdob_nominal_loop(c, gn, q, delay, w);
    const double dm = std::abs(delay_uncertainty(w, delay));
    const double one_plus = std::abs(1.0 + ln);
    double t = kInf;
    if (one_plus < 1e-12) {
      rep.nominal_unstable = true;
    } else {
      t = std::abs(ln) / one_plus;
    }
    const double b = dm == 0.0 ? kInf : 1.0 / dm;
    rep.test.push_back(t);
    rep.bound.push_back(b);
    rep.point_margin_db.push_back(t == kInf ? -kInf : margin_db(b, t));
  }
  finish(rep);
  return rep;
}

}  // namespace dobsteer
