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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dobsteer/control/controllers.hpp"
#include "dobsteer/design/dstability.hpp"
#include "dobsteer/lti/errors.hpp"
#include "dobsteer/robust/robustness.hpp"
#include "dobsteer/scenario/config.hpp"
#include "dobsteer/scenario/export.hpp"

namespace {

using namespace dobsteer;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kRobustFail = 2;
constexpr int kDiverged = 3;

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

void print_metrics(const Scenario& s, const Metrics& m) {
  std::printf("architecture %s  delay %g s  (%zu delay steps)\n",
              std::string(to_string(s.loop.architecture)).c_str(), s.loop.delay,
              delay_steps(s.loop.delay, s.h));
  std::printf("rms_y %.6g m  peak_y %.6g m  rms_steer %.6g rad  ise_y %.6g m^2 s\n",
              m.rms_y, m.peak_y, m.rms_steer, m.ise_y);
}

struct SimOpts {
  std::string config, arch, csv, svg;
  double delay = -1.0;
};

int cmd_sim(const SimOpts& o) {
  Scenario s = o.config.empty() ? Scenario{} : load_scenario(o.config);
  if (!o.arch.empty()) s.loop.architecture = parse_architecture(o.arch);
  if (o.delay >= 0.0) s.loop.delay = o.delay;
  const RunResult res = run_scenario(s);
  print_metrics(s, res.metrics);
  if (!o.csv.empty()) write_trace_csv(res.trace, o.csv);
  if (!o.svg.empty()) write_trace_svg(res.trace, o.svg);
  return kOk;
}

struct TableOpts {
  std::string csv, disturbance = "none";
};

int cmd_table2(const TableOpts& o) {
  DisturbanceKind kind = DisturbanceKind::kNone;
  if (o.disturbance == "step") kind = DisturbanceKind::kStep;
  else if (o.disturbance == "sine") kind = DisturbanceKind::kSine;
  const Scenario base = default_scenario(Architecture::kPD, {}, 0.0, kind);
  const VertexTable t = compare_vertices(base);
  std::printf("%-18s %12s %12s %10s\n", "vertex", "rms PD", "rms PD+DOB",
              "reduction");
  for (std::size_t i = 0; i < 4; ++i) {
    std::printf("%-18s %12.5f %12.5f %9.1f%%\n", t.labels[i].c_str(), t.pd[i],
                t.pd_dob[i], t.reduction_pct[i]);
  }
  if (!o.csv.empty()) write_table_csv(t, o.csv);
  return kOk;
}

struct SweepOpts {
  std::string out = "sweep.csv";
  double wmin = 1e-2, wmax = 1e4, wc_dob = 5.0, wc_cdob = 200.0, delay = 0.08;
  std::size_t points = 400;
};

int cmd_sweep(const SweepOpts& o) {
  const auto grid = log_grid(o.wmin, o.wmax, o.points);
  const TransferFunction gn = nominal_tf();
  const TransferFunction c = pd_tf(PDGains{}, false);
  const TransferFunction qd = q_tf({o.wc_dob});
  const TransferFunction qc = q_tf({o.wc_cdob});
  const UncertaintyBox box;
  const auto env = delta_m_envelope(box, grid, EnvelopeReference::kDesignModel);
  const auto verts = vertices(box);
  std::vector<TransferFunction> pd_cl, dob_cl;
  for (const auto& v : verts) {
    const TransferFunction g = plant_tf(v);
    pd_cl.push_back(feedback(c * g, TransferFunction::gain(1.0)));
    dob_cl.push_back(
        feedback(c * dob_transfers(g, gn, qd).regulation, TransferFunction::gain(1.0)));
  }
  auto out = open_csv(o.out);
  out << "omega,q_dob,inv_env,pd_a,pd_b,pd_c,pd_d,dob_a,dob_b,dob_c,dob_d,"
         "cdob_test,cdob_bound\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double w = grid[i];
    out << format_double(w) << ',' << format_double(std::abs(qd.at_frequency(w)))
        << ',' << format_double(1.0 / env.magnitude[i]);
    for (const auto& g : pd_cl) out << ',' << format_double(std::abs(g.at_frequency(w)));
    for (const auto& g : dob_cl) out << ',' << format_double(std::abs(g.at_frequency(w)));
    const Complex ln = cdob_nominal_loop(c, gn, qc, o.delay, w);
    out << ',' << format_double(std::abs(ln / (1.0 + ln))) << ','
        << format_double(1.0 / std::abs(delay_uncertainty(w, o.delay))) << '\n';
  }
  std::printf("wrote %zu frequencies to %s\n", grid.size(), o.out.c_str());
  return kOk;
}

struct DesignOpts {
  std::string csv = "design.csv", svg;
  double step = 0.02, kp_max = 3.0, kd_max = 3.0;
  double sigma = 0.3, theta = 135.0, radius = 1.3;
};

int cmd_design(const DesignOpts& o) {
  GridSpec spec;
  spec.kp_max = o.kp_max;
  spec.kd_max = o.kd_max;
  spec.step = o.step;
  const DRegion region{o.sigma, o.theta, o.radius};
  const GainGrid grid = feasible_map(nominal_tf(), spec, region);
  auto out = open_csv(o.csv);
  out << "K_p,K_d,feasible,dominant_pole_re,dominant_pole_im\n";
  for (std::size_t i = 0; i < grid.n_kp; ++i) {
    for (std::size_t j = 0; j < grid.n_kd; ++j) {
      const Complex p = grid.dominant[i * grid.n_kd + j];
      out << format_double(grid.kp(i)) << ',' << format_double(grid.kd(j)) << ','
          << (grid.at(i, j) ? 1 : 0) << ',' << format_double(p.real()) << ','
          << format_double(p.imag()) << '\n';
    }
  }
  const GainCheck sel = check_gains(1.0596, 0.939, nominal_tf(), region);
  const auto [si, sj] = grid.nearest(1.0596, 0.939);
  std::printf("feasible cells %zu of %zu; component around (1.0596, 0.939): %zu\n",
              grid.feasible_count(), grid.feasible.size(), grid.component_size(si, sj));
  std::printf("selected gains %s, dominant pole %.5f %+.5fj\n",
              sel.feasible ? "feasible" : "infeasible", sel.dominant.real(),
              sel.dominant.imag());
  if (!o.svg.empty()) {
    // Boundary: smallest and largest feasible K_d for every K_p column.
    Series lo{"K_d min", {}, {}}, hi{"K_d max", {}, {}}, pick{"selected", {1.0596}, {0.939}};
    for (std::size_t i = 0; i < grid.n_kp; ++i) {
      for (std::size_t j = 0; j < grid.n_kd; ++j) {
        if (grid.at(i, j)) {
          lo.x.push_back(grid.kp(i));
          lo.y.push_back(grid.kd(j));
          break;
        }
      }
      for (std::size_t j = grid.n_kd; j-- > 0;) {
        if (grid.at(i, j)) {
          hi.x.push_back(grid.kp(i));
          hi.y.push_back(grid.kd(j));
          break;
        }
      }
    }
    pick.x.push_back(1.0596 + 1e-3);
    pick.y.push_back(0.939 + 1e-3);
    write_svg({lo, hi, pick}, {"D-stable PD gains", "K_p", "K_d [s]", false}, o.svg);
  }
  return kOk;
}

struct RobustOpts {
  std::string mode = "dob", csv, envelope_ref = "design";
  double wc = -1.0, delay = 0.08, wmin = 1e-2, wmax = 1e4;
  std::size_t points = 400;
};

int cmd_robust(const RobustOpts& o) {
  const auto grid = log_grid(o.wmin, o.wmax, o.points);
  StabilityReport rep;
  if (o.mode == "dob") {
    const auto ref = o.envelope_ref == "parametric" ? EnvelopeReference::kParametric
                                                    : EnvelopeReference::kDesignModel;
    if (o.envelope_ref != "parametric" && o.envelope_ref != "design") {
      throw InvalidInput("--envelope-ref must be design or parametric");
    }
    const auto env = delta_m_envelope(UncertaintyBox{}, grid, ref);
    rep = dob_small_gain(q_tf({o.wc > 0 ? o.wc : 5.0}), env);
  } else if (o.mode == "cdob") {
    rep = cdob_small_gain(pd_tf(PDGains{}, false), nominal_tf(),
                          q_tf({o.wc > 0 ? o.wc : 200.0}), o.delay, grid);
  } else {
    throw InvalidInput("--mode must be dob or cdob");
  }
  if (!o.csv.empty()) {
    auto out = open_csv(o.csv);
    out << "omega,test,bound,margin_db\n";
    for (std::size_t i = 0; i < rep.omega.size(); ++i) {
      out << format_double(rep.omega[i]) << ',' << format_double(rep.test[i]) << ','
          << format_double(rep.bound[i]) << ','
          << format_double(rep.point_margin_db[i]) << '\n';
    }
  }
  std::printf("%s: %s, min margin %.3f dB at w = %.4g rad/s%s\n", o.mode.c_str(),
              rep.pass ? "PASS" : "FAIL", rep.margin_db, rep.critical_omega,
              rep.nominal_unstable ? " (nominal loop singular)" : "");
  return rep.pass ? kOk : kRobustFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observer-based steering control toolkit"};
  app.require_subcommand(1);

  SimOpts sim;
  auto* s = app.add_subcommand("sim", "run one scenario");
  s->add_option("-c,--config", sim.config, "INI scenario file")->check(CLI::ExistingFile);
  s->add_option("-a,--arch", sim.arch, "pd | pd_dob | pd_cdob | pd_ddob");
  s->add_option("-T,--delay", sim.delay, "actuation delay [s]");
  s->add_option("--csv", sim.csv, "trace CSV output");
  s->add_option("--svg", sim.svg, "SVG output stem");

  TableOpts table;
  auto* t = app.add_subcommand("table2", "PD vs PD+DOB rms at the box vertices");
  t->add_option("--csv", table.csv, "table CSV output");
  t->add_option("--disturbance", table.disturbance, "none | step | sine")
      ->check(CLI::IsMember({"none", "step", "sine"}));

  SweepOpts sweep;
  auto* w = app.add_subcommand("sweep", "frequency-response data");
  w->add_option("-o,--out", sweep.out, "CSV output");
  w->add_option("--wmin", sweep.wmin);
  w->add_option("--wmax", sweep.wmax);
  w->add_option("--points", sweep.points);
  w->add_option("--wc-dob", sweep.wc_dob);
  w->add_option("--wc-cdob", sweep.wc_cdob);
  w->add_option("-T,--delay", sweep.delay);

  DesignOpts design;
  auto* d = app.add_subcommand("design", "D-stable PD gain region");
  d->add_option("--csv", design.csv, "feasibility CSV output");
  d->add_option("--svg", design.svg, "contour SVG output");
  d->add_option("--step", design.step, "grid resolution");
  d->add_option("--kp-max", design.kp_max);
  d->add_option("--kd-max", design.kd_max);
  d->add_option("--sigma", design.sigma);
  d->add_option("--theta", design.theta, "damping angle [deg]");
  d->add_option("--radius", design.radius);

  RobustOpts robust;
  auto* r = app.add_subcommand("robust", "small-gain robust stability check");
  r->add_option("--mode", robust.mode, "dob | cdob")
      ->check(CLI::IsMember({"dob", "cdob"}));
  r->add_option("--wc", robust.wc, "Q cutoff [rad/s] (5 for dob, 200 for cdob)");
  r->add_option("-T,--delay", robust.delay, "delay [s] for cdob");
  r->add_option("--wmin", robust.wmin);
  r->add_option("--wmax", robust.wmax);
  r->add_option("--points", robust.points);
  r->add_option("--envelope-ref", robust.envelope_ref, "design | parametric")
      ->check(CLI::IsMember({"design", "parametric"}));
  r->add_option("--csv", robust.csv, "per-frequency CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*s) return cmd_sim(sim);
    if (*t) return cmd_table2(table);
    if (*w) return cmd_sweep(sweep);
    if (*d) return cmd_design(design);
    if (*r) return cmd_robust(robust);
  } catch (const DivergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDiverged;
  } catch (const InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
