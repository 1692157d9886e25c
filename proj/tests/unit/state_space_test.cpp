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

#include "dobsteer/lti/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {
namespace {

TEST(StateSpaceTest, FirstOrderRealization) {
  auto m = tf_to_ss({Polynomial{1.0}, Polynomial{1.0, 1.0}});
  EXPECT_EQ(m.states(), 1);
  EXPECT_EQ(m.D(0, 0), 0.0);
}

TEST(StateSpaceTest, BiproperRealizationHasFeedthrough) {
  auto m = tf_to_ss({Polynomial{1.0, 2.0}, Polynomial{1.0, 1.0}});
  EXPECT_EQ(m.D(0, 0), 1.0);
}

TEST(StateSpaceTest, DesignModelRealization) {
  auto m = tf_to_ss({Polynomial{227.6, 84790.0, 36270.0},
                     Polynomial{1.0, 459.2, 33290.0, 0.0, 0.0}});
  EXPECT_EQ(m.states(), 4);
  EXPECT_EQ(m.D(0, 0), 0.0);
}

TEST(StateSpaceTest, ImproperRejected) {
  EXPECT_THROW(tf_to_ss({Polynomial{1.0, 0.0}, Polynomial{1.0}}), CausalityError);
}

TEST(StateSpaceTest, RoundTripThroughDeterminants) {
  TransferFunction g(Polynomial{2.0, 3.0, 4.0}, Polynomial{1.0, 5.0, 6.0, 0.0});
  TransferFunction back = ss_to_tf(tf_to_ss(g));
  for (double w : {0.1, 1.0, 10.0}) {
    const Complex s(0.0, w);
    EXPECT_LE(std::abs(back(s) - g(s)), 1e-12 * std::abs(g(s)));
  }
}

// Random proper transfer functions: realization agrees with the rational
// evaluation at w = 10^k, k = -2..2.
TEST(StateSpaceTest, RealizationFidelityProperty) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pole(0.1, 50.0);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_int_distribution<int> order(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = order(rng);
    std::vector<Complex> poles;
    for (int i = 0; i < n; ++i) poles.emplace_back(-pole(rng), 0.0);
    Polynomial den = Polynomial::from_roots(poles);
    std::vector<double> nc(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, n + 1)(rng)));
    for (auto& v : nc) v = coef(rng);
    TransferFunction g(Polynomial(nc), den);
    const auto m = tf_to_ss(g);
    for (int k = -2; k <= 2; ++k) {
      const Complex s(0.0, std::pow(10.0, k));
      const Complex a = g(s);
      const Complex b = m.evaluate(s, 0, 0);
      EXPECT_LE(std::abs(a - b), 1e-9 * (1.0 + std::abs(a))) << "trial " << trial;
    }
  }
}

TEST(StateSpaceTest, StepIntoFirstOrderLag) {
  auto m = tf_to_ss({Polynomial{1.0}, Polynomial{1.0, 1.0}});
  const double h = 1e-3;
  std::vector<double> u(1001, 1.0);
  auto y = simulate(m, u, h);
  EXPECT_NEAR(y[1000], 1.0 - std::exp(-1.0), 1e-4);
}

TEST(StateSpaceTest, StepIntoIntegrator) {
  auto m = tf_to_ss({Polynomial{1.0}, Polynomial{1.0, 0.0}});
  const double h = 1e-3;
  std::vector<double> u(5001, 1.0);
  auto y = simulate(m, u, h);
  for (std::size_t k = 0; k < y.size(); k += 250) {
    EXPECT_NEAR(y[k], static_cast<double>(k) * h, 1e-6);
  }
}

double steady_amplitude(const std::vector<double>& y, std::size_t from) {
  double a = 0.0;
  for (std::size_t k = from; k < y.size(); ++k) a = std::max(a, std::abs(y[k]));
  return a;
}

TEST(StateSpaceTest, SinusoidGainMatchesFrequencyResponse) {
  TransferFunction g(Polynomial{1.0}, Polynomial{1.0, 1.0});
  auto m = tf_to_ss(g);
  const double h = 1e-3;
  std::vector<double> u(40001);
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = std::sin(static_cast<double>(k) * h);
  auto y = simulate(m, u, h);
  const double gain = std::abs(g.at_frequency(1.0));
  EXPECT_NEAR(steady_amplitude(y, 20000), gain, 0.01 * gain);
}

// Random stable second-order systems at random w <= 0.1 / h.
TEST(StateSpaceTest, SinusoidGainProperty) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> wn(0.5, 20.0);
  std::uniform_real_distribution<double> zeta(0.3, 1.5);
  std::uniform_real_distribution<double> lw(std::log(0.2), std::log(100.0));
  const double h = 1e-3;
  for (int trial = 0; trial < 12; ++trial) {
    const double w0 = wn(rng), z = zeta(rng), w = std::exp(lw(rng));
    TransferFunction g(Polynomial{w0 * w0}, Polynomial{1.0, 2.0 * z * w0, w0 * w0});
    const double period = 2.0 * std::numbers::pi / w;
    // Slowest homogeneous decay rate, overdamped or not.
    const double decay = z > 1.0 ? w0 * (z - std::sqrt(z * z - 1.0)) : z * w0;
    const double settle = 12.0 / decay;
    const std::size_t n =
        static_cast<std::size_t>((settle + 3.0 * period) / h) + 1;
    std::vector<double> u(n);
    for (std::size_t k = 0; k < n; ++k) u[k] = std::sin(w * static_cast<double>(k) * h);
    auto y = simulate(tf_to_ss(g), u, h);
    const double gain = std::abs(g.at_frequency(w));
    const auto from = static_cast<std::size_t>(settle / h);
    EXPECT_NEAR(steady_amplitude(y, from), gain, 0.01 * gain) << "trial " << trial;
  }
}

TEST(StateSpaceTest, DivergenceReportsStep) {
  StateSpaceModel m(Eigen::MatrixXd::Constant(1, 1, 1e6), Eigen::MatrixXd::Ones(1, 1),
                    Eigen::MatrixXd::Ones(1, 1), Eigen::MatrixXd::Zero(1, 1));
  std::vector<double> u(2000, 1.0);
  try {
    simulate(m, u, 1.0);
    FAIL() << "expected divergence";
  } catch (const DivergenceError& e) {
    EXPECT_GT(e.step(), 0u);
    EXPECT_LT(e.step(), 2000u);
    ASSERT_EQ(e.last_finite_state().size(), 1u);
    EXPECT_TRUE(std::isfinite(e.last_finite_state()[0]));
  }
}

TEST(StateSpaceTest, SimulateRejectsBadArguments) {
  auto m = tf_to_ss({Polynomial{1.0}, Polynomial{1.0, 1.0}});
  std::vector<double> u(10, 1.0);
  EXPECT_THROW(simulate(m, u, 0.0), InvalidInput);
  EXPECT_THROW(simulate(m, std::vector<double>{}, 1e-3), InvalidInput);
}

}  // namespace
}  // namespace dobsteer
