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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dobsteer/lti/transfer_function.hpp"

namespace dobsteer {

/**
 * @brief Continuous-time LTI system  x' = A x + B u,  y = C x + D u.
 */
struct StateSpaceModel {
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  Eigen::MatrixXd C;
  Eigen::MatrixXd D;

  StateSpaceModel() = default;
  /// Throws InvalidInput when the block dimensions disagree.
  StateSpaceModel(Eigen::MatrixXd a, Eigen::MatrixXd b, Eigen::MatrixXd c,
                  Eigen::MatrixXd d);

  Eigen::Index states() const { return A.rows(); }
  Eigen::Index inputs() const { return B.cols(); }
  Eigen::Index outputs() const { return C.rows(); }

  /// C (sI - A)^{-1} B + D.
  Eigen::MatrixXcd evaluate(Complex s) const;
  /// Single channel (output, input) of evaluate().
  Complex evaluate(Complex s, Eigen::Index output, Eigen::Index input) const;
};

/// Controllable canonical realization. Throws CausalityError for improper g.
StateSpaceModel tf_to_ss(const TransferFunction& g);

/**
 * Transfer function of one SISO channel, from det(sI - A) and
 * det([sI - A, B_j; -C_i, D_ij]) expanded with exact polynomial arithmetic.
 * Structural zeros in A stay exact, so integrators show up as exact s factors.
 */
TransferFunction ss_to_tf(const StateSpaceModel& model, Eigen::Index output = 0,
                          Eigen::Index input = 0);

/// Samples of a multi-input signal: samples[k] holds all inputs at t = k h.
using InputSamples = std::vector<std::vector<double>>;

/**
 * Classic fourth-order Runge-Kutta from x(0) = 0. Inputs are linearly
 * interpolated between samples for the mid-step stages. Returns the first
 * output channel sampled at every input sample. Throws DivergenceError on a
 * non-finite state.
 */
std::vector<double> simulate(const StateSpaceModel& model,
                             std::span<const double> input, double h);
std::vector<std::vector<double>> simulate(const StateSpaceModel& model,
                                          const InputSamples& input, double h);

}  // namespace dobsteer
