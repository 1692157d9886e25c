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

// Acceptance checks. One line per criterion; exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "dobsteer/control/controllers.hpp"
#include "dobsteer/design/dstability.hpp"
#include "dobsteer/lti/delay_line.hpp"
#include "dobsteer/lti/state_space.hpp"
#include "dobsteer/robust/robustness.hpp"
#include "dobsteer/scenario/scenario.hpp"

namespace {

using namespace dobsteer;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("failed: ") + what;
  }
}

void note(Outcome& o, const std::string& what) {
  o.detail += (o.detail.empty() ? "" : "; ") + what;
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

std::string fmt2(const char* f, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}

Outcome criterion1() {
  Outcome o;
  const auto gn = nominal_tf();
  const auto t = dob_transfers(gn, gn, q_tf({5.0}));
  const Polynomial lhs = t.regulation.num() * gn.den();
  const Polynomial rhs = t.regulation.den() * gn.num();
  const double rel = (lhs - rhs).norm2() / lhs.norm2();
  require(o, rel <= 1e-9, "polynomial identity");
  double worst = 0.0;
  for (double w : log_grid(1e-2, 1e2, 400)) {
    const Complex a = t.regulation.at_frequency(w);
    const Complex b = gn.at_frequency(w);
    worst = std::max(worst, std::abs(a - b) / std::abs(b));
  }
  require(o, worst <= 1e-9, "frequency agreement");
  note(o, fmt2("coef rel %.2e, freq rel %.2e", rel, worst));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto grid = default_robust_grid();
  const auto env = delta_m_envelope(UncertaintyBox{}, grid, EnvelopeReference::kDesignModel);
  const auto rep = dob_small_gain(q_tf({5.0}), env);
  bool all_positive = true;
  for (double m : rep.point_margin_db) all_positive = all_positive && m > 0.0;
  require(o, rep.pass, "small-gain test");
  require(o, all_positive, "positive margin at every grid point");
  note(o, fmt2("min margin %.3f dB at w=%.3g", rep.margin_db, rep.critical_omega));
  const auto par = dob_small_gain(
      q_tf({5.0}), delta_m_envelope(UncertaintyBox{}, grid, EnvelopeReference::kParametric));
  note(o, fmt("parametric-reference envelope: %.3f dB (informational)", par.margin_db));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const double T = 0.08;
  const auto grid = default_robust_grid();
  double worst = 0.0;
  for (double w : grid) {
    worst = std::max(worst, std::abs(std::abs(delay_uncertainty(w, T)) -
                                     2.0 * std::abs(std::sin(w * T / 2.0))));
  }
  require(o, worst <= 1e-12, "|dm| identity");
  const auto rep = cdob_small_gain(pd_tf(PDGains{}, false), nominal_tf(), q_tf({200.0}), T, grid);
  require(o, rep.pass, "small-gain test");
  note(o, fmt2("min margin %.3f dB at w=%.4g", rep.margin_db, rep.critical_omega));
  note(o, fmt("|dm| err %.1e", worst));
  return o;
}

// Quadratic factor s^2 + u s + v by Bairstow's method.
std::pair<double, double> bairstow(const std::vector<double>& a, double u, double v) {
  const std::size_t n = a.size() - 1;
  for (int it = 0; it < 200; ++it) {
    std::vector<double> b(n + 1), c(n + 1);
    b[0] = a[0];
    b[1] = a[1] - u * b[0];
    for (std::size_t k = 2; k <= n; ++k) b[k] = a[k] - u * b[k - 1] - v * b[k - 2];
    c[0] = b[0];
    c[1] = b[1] - u * c[0];
    for (std::size_t k = 2; k <= n; ++k) c[k] = b[k] - u * c[k - 1] - v * c[k - 2];
    const double det = c[n - 2] * c[n - 2] - c[n - 1] * c[n - 3];
    const double du = (b[n - 1] * c[n - 2] - b[n] * c[n - 3]) / det;
    const double dv = (b[n] * c[n - 2] - b[n - 1] * c[n - 1]) / det;
    u += du;
    v += dv;
    if (std::abs(du) + std::abs(dv) < 1e-14 * (1.0 + std::abs(u) + std::abs(v))) break;
  }
  return {u, v};
}

Outcome criterion4() {
  Outcome o;
  const DRegion region;
  const auto check = check_gains(1.0596, 0.939, nominal_tf(), region);
  require(o, check.feasible, "selected gains feasible");
  const auto p = char_poly(pd_tf(PDGains{}, false), nominal_tf());
  const auto [u, v] = bairstow(p.coeffs(), 1.1, 0.34);
  const Complex oracle(-u / 2.0, std::sqrt(std::max(0.0, v - u * u / 4.0)));
  require(o, std::abs(oracle.real() + 0.548) <= 0.02 && std::abs(oracle.imag() - 0.20) <= 0.02,
          "oracle pair near -0.548 +/- 0.20j");
  require(o, std::abs(check.dominant - oracle) <= 1e-6, "solver matches oracle");
  const auto grid = feasible_map(nominal_tf(), GridSpec{}, region);
  const auto [i, j] = grid.nearest(1.0596, 0.939);
  const std::size_t feasible = grid.feasible_count();
  const std::size_t component = grid.component_size(i, j);
  require(o, feasible > 0, "region nonempty");
  require(o, component == feasible, "region connected around selected point");
  note(o, fmt2("dominant %.5f %+.5fj", oracle.real(), oracle.imag()));
  note(o, std::to_string(feasible) + "/" + std::to_string(grid.feasible.size()) +
              " cells feasible, component " + std::to_string(component));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto t = compare_vertices(default_scenario(Architecture::kPD));
  for (std::size_t i = 0; i < 4; ++i) {
    require(o, t.pd_dob[i] < t.pd[i], "ordering at " + t.labels[i]);
    require(o, t.reduction_pct[i] >= 20.0, "20% floor at " + t.labels[i]);
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %.4f->%.4f (%.1f%%)", t.labels[i].c_str(), t.pd[i],
                  t.pd_dob[i], t.reduction_pct[i]);
    note(o, buf);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto pd = run_scenario(default_scenario(Architecture::kPD, {}, 0.08)).metrics;
  const auto cdob = run_scenario(default_scenario(Architecture::kPD_CDOB, {}, 0.08)).metrics;
  require(o, cdob.rms_y < pd.rms_y, "rms_y(PD_CDOB) < rms_y(PD)");
  require(o, cdob.rms_steer <= pd.rms_steer, "rms_steer(PD_CDOB) <= rms_steer(PD)");
  note(o, fmt2("rms_y PD %.4g vs CDOB %.4g", pd.rms_y, cdob.rms_y));
  note(o, fmt2("rms_steer PD %.4g vs CDOB %.4g", pd.rms_steer, cdob.rms_steer));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto cdob = run_scenario(default_scenario(Architecture::kPD_CDOB, {}, 0.08,
                                                  DisturbanceKind::kStep)).metrics;
  const auto ddob = run_scenario(default_scenario(Architecture::kPD_DDOB, {}, 0.08,
                                                  DisturbanceKind::kStep)).metrics;
  require(o, ddob.rms_y <= cdob.rms_y, "rms_y(PD_DDOB) <= rms_y(PD_CDOB)");
  note(o, fmt2("rms_y DDOB %.4g vs CDOB %.4g", ddob.rms_y, cdob.rms_y));
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937 rng(20261019);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  // Realization fidelity.
  double real_err = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Complex> poles;
    for (int i = 0; i < n; ++i) poles.emplace_back(-0.1 - 50.0 * (unit(rng) + 1.0) / 2.0, 0.0);
    std::vector<double> nc(static_cast<std::size_t>(1 + trial % (n + 1)));
    for (auto& c : nc) c = 5.0 * unit(rng);
    const TransferFunction g(Polynomial(nc), Polynomial::from_roots(poles));
    const auto m = tf_to_ss(g);
    for (int k = -2; k <= 2; ++k) {
      const Complex s(0.0, std::pow(10.0, k));
      const Complex a = g(s);
      real_err = std::max(real_err, std::abs(a - m.evaluate(s, 0, 0)) / (1.0 + std::abs(a)));
    }
  }
  require(o, real_err <= 1e-9, "realization fidelity");

  // Root residuals.
  double root_ratio = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(static_cast<std::size_t>(2 + trial % 8));
    for (auto& v : c) v = unit(rng) * std::pow(10.0, 2.5 * (unit(rng) + 1.0) - 2.0);
    const Polynomial p(c);
    if (p.degree() < 1) continue;
    for (const auto& r : poly_roots(p)) {
      const double bound = 1e-8 * (1.0 + p.norm_inf()) * std::pow(1.0 + std::abs(r), p.degree());
      root_ratio = std::max(root_ratio, std::abs(p(r)) / bound);
    }
  }
  require(o, root_ratio <= 1.0, "root residuals");

  // Simulation vs frequency response.
  const double h = 1e-3;
  double gain_err = 0.0;
  for (double w : {0.5, 5.0, 50.0, 100.0}) {
    const TransferFunction g(Polynomial{100.0}, Polynomial{1.0, 12.0, 100.0});
    const double period = 2.0 * std::numbers::pi / w;
    const std::size_t n = static_cast<std::size_t>((5.0 + 3.0 * period) / h) + 1;
    std::vector<double> u(n);
    for (std::size_t k = 0; k < n; ++k) u[k] = std::sin(w * static_cast<double>(k) * h);
    const auto y = simulate(tf_to_ss(g), u, h);
    double amp = 0.0;
    for (std::size_t k = static_cast<std::size_t>(5.0 / h); k < n; ++k) amp = std::max(amp, std::abs(y[k]));
    const double ref = std::abs(g.at_frequency(w));
    gain_err = std::max(gain_err, std::abs(amp - ref) / ref);
  }
  require(o, gain_err <= 0.01, "simulation gain");

  // Delay exactness.
  std::vector<double> sig(1000);
  for (auto& v : sig) v = unit(rng);
  const auto shifted = delay_apply(DelayLine(0.08, h), sig);
  bool exact = true;
  for (std::size_t k = 0; k < sig.size(); ++k) {
    exact = exact && shifted[k] == (k < 80 ? 0.0 : sig[k - 80]);
  }
  require(o, exact, "80-step shift");

  // Linearity and superposition of the full loop.
  double lin_err = 0.0, sup_err = 0.0;
  for (auto arch : {Architecture::kPD, Architecture::kPD_DOB, Architecture::kPD_CDOB,
                    Architecture::kPD_DDOB}) {
    Scenario s = default_scenario(arch, params_at(7.0, 5000.0), 0.08);
    s.duration = 20.0;
    s.rho = zero_profile();
    s.r = [](double t) { return std::sin(0.4 * t); };
    const auto y1 = run_scenario(s).trace.y;
    s.r = [](double t) { return 2.0 * std::sin(0.4 * t); };
    const auto y2 = run_scenario(s).trace.y;
    s.d = step_profile(8.0, 0.1);
    const auto y2d = run_scenario(s).trace.y;
    s.r = zero_profile();
    const auto yd = run_scenario(s).trace.y;
    double scale = 0.0;
    for (double v : y2d) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < y1.size(); ++k) {
      if (y2[k] != 0.0) lin_err = std::max(lin_err, std::abs(y2[k] - 2.0 * y1[k]) / std::abs(y2[k]));
      sup_err = std::max(sup_err, std::abs(y2d[k] - y2[k] - yd[k]) / scale);
    }
  }
  require(o, lin_err <= 1e-6, "linearity");
  require(o, sup_err <= 1e-6, "superposition");
  note(o, fmt2("fidelity %.1e, root residual ratio %.1e", real_err, root_ratio));
  note(o, fmt("sim gain %.2e", gain_err));
  note(o, fmt2("linearity %.1e, superposition %.1e", lin_err, sup_err));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto c = pd_tf(PDGains{}, false);
  const auto gn = nominal_tf();
  const auto q = q_tf({200.0});
  const auto one = TransferFunction::gain(1.0);
  const double T = 0.08;
  double e0 = 0.0, e1 = 0.0;
  for (double w : default_robust_grid()) {
    const Complex l = c.at_frequency(w) * gn.at_frequency(w);
    const Complex t = l / (1.0 + l);
    e0 = std::max(e0, std::abs(cdob_response(c, gn, q, 0.0, w) - t) / (1.0 + std::abs(t)));
    const Complex shifted = t * std::exp(Complex(0.0, -w * T));
    e1 = std::max(e1, std::abs(cdob_response(c, gn, one, T, w) - shifted) / (1.0 + std::abs(t)));
  }
  require(o, e0 <= 1e-12, "T = 0 form");
  require(o, e1 <= 1e-12, "Q = 1 form");
  note(o, fmt2("T=0 err %.1e, Q=1 err %.1e", e0, e1));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "nominal-model identity", 1.0, criterion1},
      {2, "DOB robust stability, wc=5", 1.0, criterion2},
      {3, "CDOB robust stability, wc=200, T=0.08", 1.0, criterion3},
      {4, "D-stability of selected gains", 30.0, criterion4},
      {5, "vertex table PD vs PD+DOB", 60.0, criterion5},
      {6, "delay scenario PD vs PD+CDOB", 20.0, criterion6},
      {7, "DDOB vs CDOB with delay and step", 20.0, criterion7},
      {8, "numerical kernel properties", 30.0, criterion8},
      {9, "delayed-loop evaluator degenerations", 1.0, criterion9},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.limit_s) {
      o.pass = false;
      o.detail += fmt("; failed: runtime over %.0f s", c.limit_s);
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %d %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, dt,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}
