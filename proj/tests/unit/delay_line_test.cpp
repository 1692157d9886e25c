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

#include "dobsteer/lti/delay_line.hpp"

#include <random>

#include <gtest/gtest.h>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {
namespace {

std::vector<double> ramp(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = 1.0 + static_cast<double>(k) * 0.37;
  return v;
}

TEST(DelayLineTest, EightyStepShift) {
  DelayLine line(0.08, 1e-3);
  EXPECT_EQ(line.steps(), 80u);
  const auto in = ramp(500);
  const auto out = delay_apply(line, in);
  ASSERT_EQ(out.size(), in.size());
  for (std::size_t k = 0; k < 80; ++k) EXPECT_EQ(out[k], 0.0);
  for (std::size_t k = 80; k < in.size(); ++k) EXPECT_EQ(out[k], in[k - 80]);
}

TEST(DelayLineTest, ZeroDelayIsIdentity) {
  DelayLine line(0.0, 1e-3);
  const auto in = ramp(50);
  EXPECT_EQ(delay_apply(line, in), in);
}

TEST(DelayLineTest, TiesRoundUp) {
  EXPECT_EQ(delay_steps(0.0805, 1e-3), 81u);
  EXPECT_EQ(delay_steps(0.0804, 1e-3), 80u);
  EXPECT_EQ(delay_steps(0.0025, 1e-3), 3u);
  // 0.00065 / 0.0001 evaluates just below 6.5.
  EXPECT_EQ(delay_steps(0.00065, 1e-4), 7u);
}

TEST(DelayLineTest, NegativeDelayRejected) {
  EXPECT_THROW(DelayLine(-0.01, 1e-3), InvalidInput);
  EXPECT_THROW(DelayLine(0.01, 0.0), InvalidInput);
}

TEST(DelayLineTest, ComposesAdditively) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> steps(0, 120);
  std::normal_distribution<double> noise;
  const double h = 1e-3;
  for (int trial = 0; trial < 50; ++trial) {
    const int a = steps(rng), b = steps(rng);
    std::vector<double> in(400);
    for (auto& v : in) v = noise(rng);
    const DelayLine la(a * h, h), lab((a + b) * h, h);
    const auto twice = delay_apply(DelayLine(b * h, h), delay_apply(la, in));
    EXPECT_EQ(twice, delay_apply(lab, in)) << a << " + " << b;
  }
}

TEST(DelayLineTest, PeekDoesNotSeeCurrentInput) {
  DelayLine line(2e-3, 1e-3);
  EXPECT_EQ(line.push(5.0), 0.0);
  EXPECT_EQ(line.push(6.0), 0.0);
  EXPECT_EQ(line.peek(), 5.0);
  EXPECT_EQ(line.push(7.0), 5.0);
  line.reset();
  EXPECT_EQ(line.peek(), 0.0);
}

}  // namespace
}  // namespace dobsteer
