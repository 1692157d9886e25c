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
#include <span>
#include <vector>

namespace dobsteer {

/// Number of whole steps used for a delay: nearest integer, ties round up.
/// Quotients within 1e-9 of a half step count as ties.
std::size_t delay_steps(double delay_seconds, double step_seconds);

/**
 * @brief Exact integer-sample delay: out[k] = in[k - N], zero for k < N.
 */
class DelayLine {
 public:
  DelayLine(double delay_seconds, double step_seconds);

  double delay_seconds() const { return delay_; }
  double step_seconds() const { return step_; }
  std::size_t steps() const { return steps_; }

  /// Output for the current sample, which does not depend on the current
  /// input when steps() > 0.
  double peek() const;
  /// Stores the current input and moves to the next sample.
  void advance(double input);
  /// peek() then advance(); for steps() == 0 this returns the input itself.
  double push(double input);
  void reset();

 private:
  double delay_;
  double step_;
  std::size_t steps_;
  std::vector<double> ring_;
  std::size_t head_ = 0;
};

/// Applies a fresh DelayLine to a whole sampled signal.
std::vector<double> delay_apply(const DelayLine& line,
                                std::span<const double> samples);

}  // namespace dobsteer
