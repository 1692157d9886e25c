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
#include <numbers>

#include <gtest/gtest.h>

#include "dobsteer/control/controllers.hpp"
#include "dobsteer/lti/errors.hpp"

namespace dobsteer {
namespace {

TEST(RobustnessTest, DefaultGrid) {
  const auto g = default_robust_grid();
  ASSERT_EQ(g.size(), 400u);
  EXPECT_NEAR(g.front(), 1e-2, 1e-15);
  EXPECT_NEAR(g.back(), 1e4, 1e-8);
}

TEST(RobustnessTest, CollapsedBoxHasNoUncertainty) {
  const auto env = delta_m_envelope(UncertaintyBox::collapsed(), default_robust_grid());
  for (double m : env.magnitude) EXPECT_EQ(m, 0.0);
  const auto rep = dob_small_gain(q_tf({5.0}), env);
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(std::isinf(rep.margin_db));
}

TEST(RobustnessTest, EnvelopeBoundsEveryVertex) {
  const UncertaintyBox box;
  const auto grid = default_robust_grid();
  for (auto ref : {EnvelopeReference::kParametric, EnvelopeReference::kDesignModel}) {
    const auto env = delta_m_envelope(box, grid, ref);
    const auto gref = ref == EnvelopeReference::kParametric ? plant_tf(nominal_params(box))
                                                            : nominal_tf();
    const auto verts = vertices(box);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_GE(env.magnitude[i], 0.0);
      for (std::size_t v = 0; v < 4; ++v) {
        EXPECT_LE(relative_error(plant_tf(verts[v]), gref, grid[i]), env.magnitude[i]);
      }
      EXPECT_EQ(relative_error(plant_tf(verts[env.argmax[i]]), gref, grid[i]),
                env.magnitude[i]);
    }
  }
}

TEST(RobustnessTest, EnvelopeIgnoresVertexOrder) {
  const UncertaintyBox box;
  const auto grid = log_grid(0.01, 100.0, 30);
  const auto env = delta_m_envelope(box, grid);
  const auto verts = vertices(box);
  const auto gref = plant_tf(nominal_params(box));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double m = 0.0;
    for (int v : {3, 1, 2, 0}) m = std::max(m, relative_error(plant_tf(verts[v]), gref, grid[i]));
    EXPECT_EQ(m, env.magnitude[i]);
  }
  std::printf("envelope(0.01) = %.4f, envelope(100) = %.4f\n", env.magnitude.front(),
              delta_m_envelope(box, std::vector<double>{100.0}).magnitude[0]);
}

TEST(RobustnessTest, DelayUncertaintyMagnitude) {
  const double T = 0.08;
  for (double w : default_robust_grid()) {
    EXPECT_NEAR(std::abs(delay_uncertainty(w, T)), 2.0 * std::abs(std::sin(w * T / 2.0)),
                1e-12);
  }
  EXPECT_NEAR(std::abs(delay_uncertainty(std::numbers::pi / T, T)), 2.0, 1e-12);
}

TEST(RobustnessTest, ZeroDelayPassesWithInfiniteMargin) {
  const auto rep = cdob_small_gain(pd_tf(PDGains{}, false), nominal_tf(), q_tf({200.0}),
                                   0.0, default_robust_grid());
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(std::isinf(rep.margin_db));
}

TEST(RobustnessTest, SmallGainFormsAgree) {
  const auto c = pd_tf(PDGains{}, false);
  const auto gn = nominal_tf();
  const auto q = q_tf({200.0});
  const double T = 0.08;
  for (double w : default_robust_grid()) {
    const Complex ln = cdob_nominal_loop(c, gn, q, T, w);
    const double dm = std::abs(delay_uncertainty(w, T));
    const double a = std::abs(dm * ln) / std::abs(1.0 + ln);
    const double b = dm * std::abs(ln / (1.0 + ln));
    EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, a));
  }
}

TEST(RobustnessTest, DobMarginShrinksWithCutoff) {
  const auto env =
      delta_m_envelope(UncertaintyBox{}, default_robust_grid(), EnvelopeReference::kDesignModel);
  double last = INFINITY;
  for (double wc : {5.0, 10.0, 20.0, 50.0, 100.0}) {
    const auto rep = dob_small_gain(q_tf({wc}), env);
    EXPECT_LE(rep.margin_db, last + 1e-9);
    last = rep.margin_db;
    std::printf("wc = %5.1f  margin %.3f dB  %s\n", wc, rep.margin_db,
                rep.pass ? "pass" : "fail");
  }
}

TEST(RobustnessTest, TieCountsAsFailure) {
  UncertaintyEnvelope env{{1.0}, {1.0}, {0}};
  const auto rep = dob_small_gain(TransferFunction::gain(1.0), env);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.margin_db, 0.0);
}

TEST(RobustnessTest, ReportsAreDeterministic) {
  const auto grid = default_robust_grid();
  const auto a = cdob_small_gain(pd_tf(PDGains{}, false), nominal_tf(), q_tf({200.0}), 0.08, grid);
  const auto b = cdob_small_gain(pd_tf(PDGains{}, false), nominal_tf(), q_tf({200.0}), 0.08, grid);
  EXPECT_EQ(a.point_margin_db, b.point_margin_db);
  EXPECT_EQ(a.margin_db, b.margin_db);
}

TEST(RobustnessTest, RejectsBadGrid) {
  const std::vector<double> bad = {1.0, 1.0};
  EXPECT_THROW(delta_m_envelope(UncertaintyBox{}, bad), InvalidInput);
  EXPECT_THROW(cdob_small_gain(pd_tf(PDGains{}, false), nominal_tf(), q_tf({200.0}), -1.0,
                               default_robust_grid()),
               InvalidInput);
}

}  // namespace
}  // namespace dobsteer
