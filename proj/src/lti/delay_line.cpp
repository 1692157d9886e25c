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

#include <algorithm>
#include <cmath>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

std::size_t delay_steps(double delay_seconds, double step_seconds) {
  if (!(step_seconds > 0.0) || !std::isfinite(step_seconds)) {
    throw InvalidInput("delay: step must be positive");
  }
  if (!(delay_seconds >= 0.0) || !std::isfinite(delay_seconds)) {
    throw InvalidInput("delay: delay must be non-negative");
  }
  const double q = delay_seconds / step_seconds;
  return static_cast<std::size_t>(std::floor(q + 0.5 + 1e-9));
}

DelayLine::DelayLine(double delay_seconds, double step_seconds)
    : delay_(delay_seconds),
      step_(step_seconds),
      steps_(delay_steps(delay_seconds, step_seconds)),
      ring_(steps_, 0.0) {}

double DelayLine::peek() const { return steps_ == 0 ? 0.0 : ring_[head_]; }

void DelayLine::advance(double input) {
  if (steps_ == 0) return;
  ring_[head_] = input;
  head_ = (head_ + 1) % steps_;
}

double DelayLine::push(double input) {
  if (steps_ == 0) return input;
  const double out = peek();
  advance(input);
  return out;
}

void DelayLine::reset() {
  std::fill(ring_.begin(), ring_.end(), 0.0);
  head_ = 0;
}

std::vector<double> delay_apply(const DelayLine& line,
                                std::span<const double> samples) {
  DelayLine work(line.delay_seconds(), line.step_seconds());
  std::vector<double> out;
  out.reserve(samples.size());
  for (double v : samples) out.push_back(work.push(v));
  return out;
}

}  // namespace dobsteer
