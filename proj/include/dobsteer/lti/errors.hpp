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
#include <stdexcept>
#include <string>
#include <vector>

namespace dobsteer {

/// Bad argument or violated precondition on a public operation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational function was evaluated at (numerically) one of its poles.
class PoleEvaluation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A transfer function cannot be realized or composed causally.
class CausalityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Block-diagram assembly failed (algebraic loop, dangling signal, ...).
class AssemblyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Near-singular closed-loop denominator at an evaluation point.
class SingularLoop : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Fixed-step integration produced a non-finite state.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(std::size_t step, std::vector<double> last_finite_state)
      : std::runtime_error("simulation diverged at step " +
                           std::to_string(step)),
        step_(step),
        last_state_(std::move(last_finite_state)) {}

  std::size_t step() const { return step_; }
  const std::vector<double>& last_finite_state() const { return last_state_; }

 private:
  std::size_t step_;
  std::vector<double> last_state_;
};

}  // namespace dobsteer
