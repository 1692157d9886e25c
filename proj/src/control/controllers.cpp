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

#include "dobsteer/control/controllers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

void PDGains::validate() const {
  if (!(kp > 0.0) || !(kd >= 0.0) || !(tau_d > 0.0)) {
    throw InvalidInput("PD gains need kp > 0, kd >= 0, tau_d > 0");
  }
}

TransferFunction pd_tf(const PDGains& g, bool filtered) {
  g.validate();
  if (!filtered) return {Polynomial{g.kd, g.kp}, Polynomial{1.0}};
  // kp + kd s / (tau s + 1) = ((kp tau + kd) s + kp) / (tau s + 1)
  return {Polynomial{g.kp * g.tau_d + g.kd, g.kp}, Polynomial{g.tau_d, 1.0}};
}

TransferFunction q_tf(const QFilter& q) {
  if (!(q.wc > 0.0) || !std::isfinite(q.wc)) {
    throw InvalidInput("Q filter cutoff must be positive");
  }
  const double tau = q.tau();
  return {Polynomial{1.0}, Polynomial{tau * tau, 2.0 * tau, 1.0}};
}

DobTransfers dob_transfers(const TransferFunction& g, const TransferFunction& gn,
                           const TransferFunction& q) {
  const Polynomial& a = g.num();
  const Polynomial& b = g.den();
  const Polynomial& c = gn.num();
  const Polynomial& d = gn.den();
  const Polynomial& qn = q.num();
  const Polynomial& p = q.den();
  if (c.is_zero()) throw InvalidInput("nominal model must not be zero");
  if (qn.degree() + d.degree() > p.degree() + c.degree()) {
    throw CausalityError("Q / Gn is improper");
  }
  const Polynomial p_minus_q = p - qn;
  Polynomial den = a * qn * d + c * p_minus_q * b;
  if (den.is_zero()) throw SingularLoop("DOB loop denominator is identically zero");
  return {TransferFunction(c * a * p, den),
          TransferFunction(c * p_minus_q * b, den)};
}

Complex cdob_response(const TransferFunction& c, const TransferFunction& gn,
                      const TransferFunction& q, double delay, double omega) {
  if (!(delay >= 0.0)) throw InvalidInput("delay must be non-negative");
  const Complex s(0.0, omega);
  const Complex l = c(s) * gn(s);
  const Complex qv = q(s);
  const Complex e = std::exp(Complex(0.0, -omega * delay));
  const Complex den = 1.0 + l * qv + l * (1.0 - qv) * e;
  if (std::abs(den) < 1e-12) {
    throw SingularLoop("CDOB loop is singular at w = " + std::to_string(omega));
  }
  return l * e / den;
}

std::string_view to_string(Architecture a) {
  switch (a) {
    case Architecture::kPD: return "PD";
    case Architecture::kPD_DOB: return "PD_DOB";
    case Architecture::kPD_CDOB: return "PD_CDOB";
    case Architecture::kPD_DDOB: return "PD_DDOB";
  }
  return "?";
}

Architecture parse_architecture(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (s == "pd") return Architecture::kPD;
  if (s == "pd_dob" || s == "dob") return Architecture::kPD_DOB;
  if (s == "pd_cdob" || s == "cdob") return Architecture::kPD_CDOB;
  if (s == "pd_ddob" || s == "ddob") return Architecture::kPD_DDOB;
  throw InvalidInput("unknown architecture '" + std::string(name) + "'");
}

void LoopConfig::validate() const {
  gains.validate();
  if (!(delay >= 0.0) || !std::isfinite(delay)) {
    throw InvalidInput("loop delay must be non-negative");
  }
  q_tf(q_dob);
  q_tf(q_cdob);
  if (const auto* vp = std::get_if<VehicleParams>(&plant)) vp->validate();
}

ClosedLoop assemble_loop(const LoopConfig& cfg, double h) {
  cfg.validate();
  const TransferFunction& gn = cfg.nominal;
  const TransferFunction c = pd_tf(cfg.gains, true);
  const bool dob = cfg.architecture == Architecture::kPD_DOB ||
                   cfg.architecture == Architecture::kPD_DDOB;
  const bool cdob = cfg.architecture == Architecture::kPD_CDOB ||
                    cfg.architecture == Architecture::kPD_DDOB;

  BlockDiagram bd;
  bd.input("r").input("d").input("rho");

  bool yaw = false;
  if (const auto* vp = std::get_if<VehicleParams>(&cfg.plant)) {
    bd.lti("plant", build_plant(*vp), {"delta", "rho"});
    yaw = true;
  } else {
    bd.lti("plant", std::get<TransferFunction>(cfg.plant), "delta");
  }
  bd.sum("y", {{"plant", 1.0}, {"d", 1.0}});
  bd.delay("delta", cfg.delay, "cmd");

  // Extended disturbance seen by a delay-free nominal model.
  bd.lti("gn_delta", gn, "delta");
  bd.sum("e", {{"y", 1.0}, {"gn_delta", -1.0}});

  std::string feedback = "y";
  if (cdob) {
    // Network disturbance estimate Q (u - Gn^-1 y) on the pre-DOB command,
    // added back through Gn to undo the delay in the fed-back output.
    const TransferFunction qc = q_tf(cfg.q_cdob);
    bd.lti("qc_u", qc, "u_new");
    bd.lti("qc_gn_y", qc / gn, "y");
    bd.sum("d_hat", {{"qc_u", 1.0}, {"qc_gn_y", -1.0}});
    bd.lti("gn_dhat", gn, "d_hat");
    bd.sum("y_comp", {{"y", 1.0}, {"gn_dhat", 1.0}});
    feedback = "y_comp";
  }
  bd.sum("err", {{"r", 1.0}, {feedback, -1.0}});
  bd.lti("u_new", c, "err");

  if (dob) {
    const TransferFunction qd = q_tf(cfg.q_dob);
    bd.lti("qd_gn_y", qd / gn, "y");
    bd.lti("qd_cmd", qd, "cmd");
    bd.sum("cmd", {{"u_new", 1.0}, {"qd_gn_y", -1.0}, {"qd_cmd", 1.0}});
    if (!cdob) bd.sum("d_hat", {{"qd_gn_y", 1.0}, {"qd_cmd", -1.0}});
  } else {
    bd.sum("cmd", {{"u_new", 1.0}});
    if (!cdob) bd.sum("d_hat", {});
  }

  return {bd.compile(h), cfg.architecture, yaw};
}

}  // namespace dobsteer
