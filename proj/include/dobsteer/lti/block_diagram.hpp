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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dobsteer/lti/delay_line.hpp"
#include "dobsteer/lti/state_space.hpp"

namespace dobsteer {

class DiagramRun;

/**
 * @brief Builder for a scalar-signal block diagram.
 *
 * Nodes are referenced by name, so loops can be wired before every node
 * exists. Names are resolved and the evaluation order fixed in compile(),
 * which rejects algebraic loops: every cycle must pass through a strictly
 * proper LTI block or a delay of at least one sample.
 */
class BlockDiagram {
 public:
  using Term = std::pair<std::string, double>;

  /// Exogenous signal supplied by the caller at every evaluation time.
  BlockDiagram& input(std::string name);
  /// Weighted sum of other signals.
  BlockDiagram& sum(std::string name, std::vector<Term> terms);
  /// Single-output LTI block; inputs map to the columns of B and D.
  BlockDiagram& lti(std::string name, StateSpaceModel model,
                    std::vector<std::string> inputs);
  BlockDiagram& lti(std::string name, const TransferFunction& g,
                    std::string input);
  /// Pure delay, sampled once per step and held across the step.
  BlockDiagram& delay(std::string name, double seconds, std::string input);

  bool has(std::string_view name) const;

  DiagramRun compile(double step) const;

 private:
  friend class DiagramRun;
  enum class Kind { kInput, kSum, kLti, kDelay };
  struct Node {
    std::string name;
    Kind kind;
    std::vector<std::string> inputs;
    std::vector<double> gains;  // sum weights
    StateSpaceModel model;      // kLti
    double delay_seconds = 0.0;
  };
  BlockDiagram& add(Node node);

  std::vector<Node> nodes_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// What run() records at each sample: a signal, or one state of an LTI block.
struct Probe {
  std::string signal;
  int state = -1;
};

/**
 * @brief Compiled, executable diagram with its own mutable state.
 *
 * One instance belongs to one run at a time; separate instances may run
 * concurrently.
 */
class DiagramRun {
 public:
  /// Fills one value per declared input, in input_names() order.
  using Sources = std::function<void(double t, std::span<double> values)>;

  double step() const { return step_; }
  const std::vector<std::string>& input_names() const { return input_names_; }
  std::size_t state_size() const { return static_cast<std::size_t>(x_.size()); }

  void reset();

  /**
   * Simulates samples 0..steps (steps + 1 records) from the zero state with
   * classic RK4. Returns one column per probe. Throws DivergenceError if the
   * state stops being finite.
   */
  std::vector<std::vector<double>> run(std::size_t steps, const Sources& sources,
                                       std::span<const Probe> probes);

 private:
  friend class BlockDiagram;
  DiagramRun() = default;

  struct Block {
    std::size_t node;
    Eigen::Index offset;
    Eigen::Index n;
    Eigen::MatrixXd A, B, C, D;
    std::vector<std::size_t> inputs;
  };
  struct Delay {
    std::size_t node;
    std::size_t input;
    DelayLine line;
  };
  struct Sum {
    std::size_t node;
    std::vector<std::size_t> inputs;
    std::vector<double> gains;
  };
  struct Step {
    enum class Op { kSum, kBlockOutput, kDelayPass } op;
    std::size_t index;
  };

  void evaluate(const Eigen::VectorXd& x, std::span<const double> exo,
                std::vector<double>& sig) const;
  void derivative(const std::vector<double>& sig, const Eigen::VectorXd& x,
                  Eigen::VectorXd& dx) const;
  std::size_t resolve_probe(const Probe& p, bool& is_state,
                            Eigen::Index& state_index) const;

  double step_ = 0.0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::string> input_names_;
  std::vector<std::size_t> input_nodes_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_node_;
  std::vector<Delay> delays_;
  std::vector<Sum> sums_;
  std::vector<Step> order_;
  Eigen::VectorXd x_;
};

}  // namespace dobsteer
