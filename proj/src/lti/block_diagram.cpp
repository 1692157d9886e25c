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

#include "dobsteer/lti/block_diagram.hpp"

#include <cmath>
#include <deque>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

BlockDiagram& BlockDiagram::add(Node node) {
  if (node.name.empty()) throw AssemblyError("block name must not be empty");
  if (index_.count(node.name) != 0) {
    throw AssemblyError("duplicate block name '" + node.name + "'");
  }
  index_.emplace(node.name, nodes_.size());
  nodes_.push_back(std::move(node));
  return *this;
}

BlockDiagram& BlockDiagram::input(std::string name) {
  return add(Node{std::move(name), Kind::kInput, {}, {}, {}, 0.0});
}

BlockDiagram& BlockDiagram::sum(std::string name, std::vector<Term> terms) {
  Node n{std::move(name), Kind::kSum, {}, {}, {}, 0.0};
  for (auto& [sig, gain] : terms) {
    n.inputs.push_back(std::move(sig));
    n.gains.push_back(gain);
  }
  return add(std::move(n));
}

BlockDiagram& BlockDiagram::lti(std::string name, StateSpaceModel model,
                                std::vector<std::string> inputs) {
  if (model.outputs() != 1) {
    throw AssemblyError("block '" + name + "' must have exactly one output");
  }
  if (model.inputs() != static_cast<Eigen::Index>(inputs.size())) {
    throw AssemblyError("block '" + name + "' input count mismatch");
  }
  return add(Node{std::move(name), Kind::kLti, std::move(inputs), {},
                  std::move(model), 0.0});
}

BlockDiagram& BlockDiagram::lti(std::string name, const TransferFunction& g,
                                std::string input) {
  return lti(std::move(name), tf_to_ss(g), {std::move(input)});
}

BlockDiagram& BlockDiagram::delay(std::string name, double seconds,
                                  std::string input) {
  if (!(seconds >= 0.0)) throw InvalidInput("delay must be non-negative");
  return add(Node{std::move(name), Kind::kDelay, {std::move(input)}, {}, {},
                  seconds});
}

bool BlockDiagram::has(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

DiagramRun BlockDiagram::compile(double step) const {
  if (!(step > 0.0)) throw InvalidInput("diagram step must be positive");
  DiagramRun run;
  run.step_ = step;
  run.index_ = index_;
  const std::size_t count = nodes_.size();
  run.names_.reserve(count);
  run.block_of_node_.assign(count, static_cast<std::size_t>(-1));

  auto resolve = [&](const Node& owner, const std::string& ref) {
    auto it = index_.find(ref);
    if (it == index_.end()) {
      throw AssemblyError("block '" + owner.name + "' references unknown signal '" +
                          ref + "'");
    }
    return it->second;
  };

  // deps[i]: nodes that must be evaluated before node i within a sample.
  std::vector<std::vector<std::size_t>> deps(count);
  std::vector<bool> ordered(count, false);
  Eigen::Index offset = 0;
  std::vector<std::size_t> sum_of_node(count), delay_of_node(count);

  for (std::size_t i = 0; i < count; ++i) {
    const Node& n = nodes_[i];
    run.names_.push_back(n.name);
    switch (n.kind) {
      case Kind::kInput:
        run.input_names_.push_back(n.name);
        run.input_nodes_.push_back(i);
        break;
      case Kind::kSum: {
        DiagramRun::Sum s{i, {}, n.gains};
        for (const auto& ref : n.inputs) s.inputs.push_back(resolve(n, ref));
        deps[i] = s.inputs;
        ordered[i] = true;
        sum_of_node[i] = run.sums_.size();
        run.sums_.push_back(std::move(s));
        break;
      }
      case Kind::kLti: {
        DiagramRun::Block b;
        b.node = i;
        b.offset = offset;
        b.n = n.model.states();
        b.A = n.model.A;
        b.B = n.model.B;
        b.C = n.model.C;
        b.D = n.model.D;
        for (std::size_t j = 0; j < n.inputs.size(); ++j) {
          const std::size_t src = resolve(n, n.inputs[j]);
          b.inputs.push_back(src);
          if (b.D(0, static_cast<Eigen::Index>(j)) != 0.0) {
            deps[i].push_back(src);
            ordered[i] = true;
          }
        }
        offset += b.n;
        run.block_of_node_[i] = run.blocks_.size();
        run.blocks_.push_back(std::move(b));
        break;
      }
      case Kind::kDelay: {
        const std::size_t src = resolve(n, n.inputs[0]);
        DiagramRun::Delay d{i, src, DelayLine(n.delay_seconds, step)};
        if (d.line.steps() == 0) {
          deps[i].push_back(src);
          ordered[i] = true;
        }
        delay_of_node[i] = run.delays_.size();
        run.delays_.push_back(std::move(d));
        break;
      }
    }
  }

  // Kahn's algorithm over the nodes that need in-sample evaluation.
  std::vector<std::size_t> pending(count, 0);
  std::vector<std::vector<std::size_t>> users(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!ordered[i]) continue;
    for (std::size_t d : deps[i]) {
      if (ordered[d]) {
        ++pending[i];
        users[d].push_back(i);
      }
    }
  }
  std::deque<std::size_t> ready;
  for (std::size_t i = 0; i < count; ++i) {
    if (ordered[i] && pending[i] == 0) ready.push_back(i);
  }
  std::size_t emitted = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.front();
    ready.pop_front();
    ++emitted;
    using Op = DiagramRun::Step::Op;
    switch (nodes_[i].kind) {
      case Kind::kSum:
        run.order_.push_back({Op::kSum, sum_of_node[i]});
        break;
      case Kind::kLti:
        run.order_.push_back({Op::kBlockOutput, run.block_of_node_[i]});
        break;
      case Kind::kDelay:
        run.order_.push_back({Op::kDelayPass, delay_of_node[i]});
        break;
      case Kind::kInput:
        break;
    }
    for (std::size_t u : users[i]) {
      if (--pending[u] == 0) ready.push_back(u);
    }
  }
  std::size_t total_ordered = 0;
  for (bool o : ordered) total_ordered += o ? 1 : 0;
  if (emitted != total_ordered) {
    std::string members;
    for (std::size_t i = 0; i < count; ++i) {
      if (ordered[i] && pending[i] != 0) {
        members += (members.empty() ? "" : ", ") + nodes_[i].name;
      }
    }
    throw AssemblyError(
        "algebraic loop without a strictly proper element through: " + members);
  }

  run.x_ = Eigen::VectorXd::Zero(offset);
  return run;
}

void DiagramRun::reset() {
  x_.setZero();
  for (auto& d : delays_) d.line.reset();
}

void DiagramRun::evaluate(const Eigen::VectorXd& x, std::span<const double> exo,
                          std::vector<double>& sig) const {
  for (std::size_t i = 0; i < input_nodes_.size(); ++i) {
    sig[input_nodes_[i]] = exo[i];
  }
  for (const Block& b : blocks_) {
    double y = 0.0;
    for (Eigen::Index j = 0; j < b.n; ++j) y += b.C(0, j) * x[b.offset + j];
    sig[b.node] = y;
  }
  for (const Delay& d : delays_) {
    if (d.line.steps() > 0) sig[d.node] = d.line.peek();
  }
  for (const Step& s : order_) {
    switch (s.op) {
      case Step::Op::kSum: {
        const Sum& sum = sums_[s.index];
        double acc = 0.0;
        for (std::size_t j = 0; j < sum.inputs.size(); ++j) {
          acc += sum.gains[j] * sig[sum.inputs[j]];
        }
        sig[sum.node] = acc;
        break;
      }
      case Step::Op::kBlockOutput: {
        const Block& b = blocks_[s.index];
        double acc = sig[b.node];
        for (std::size_t j = 0; j < b.inputs.size(); ++j) {
          acc += b.D(0, static_cast<Eigen::Index>(j)) * sig[b.inputs[j]];
        }
        sig[b.node] = acc;
        break;
      }
      case Step::Op::kDelayPass: {
        const Delay& d = delays_[s.index];
        sig[d.node] = sig[d.input];
        break;
      }
    }
  }
}

void DiagramRun::derivative(const std::vector<double>& sig,
                            const Eigen::VectorXd& x,
                            Eigen::VectorXd& dx) const {
  for (const Block& b : blocks_) {
    for (Eigen::Index r = 0; r < b.n; ++r) {
      double acc = 0.0;
      for (Eigen::Index c = 0; c < b.n; ++c) {
        const double a = b.A(r, c);
        if (a != 0.0) acc += a * x[b.offset + c];
      }
      for (std::size_t j = 0; j < b.inputs.size(); ++j) {
        acc += b.B(r, static_cast<Eigen::Index>(j)) * sig[b.inputs[j]];
      }
      dx[b.offset + r] = acc;
    }
  }
}

std::size_t DiagramRun::resolve_probe(const Probe& p, bool& is_state,
                                      Eigen::Index& state_index) const {
  auto it = index_.find(p.signal);
  if (it == index_.end()) {
    throw InvalidInput("unknown probe signal '" + p.signal + "'");
  }
  is_state = p.state >= 0;
  if (!is_state) return it->second;
  const std::size_t bi = block_of_node_[it->second];
  if (bi == static_cast<std::size_t>(-1) || p.state >= blocks_[bi].n) {
    throw InvalidInput("probe '" + p.signal + "' has no state " +
                       std::to_string(p.state));
  }
  state_index = blocks_[bi].offset + p.state;
  return it->second;
}

std::vector<std::vector<double>> DiagramRun::run(std::size_t steps,
                                                 const Sources& sources,
                                                 std::span<const Probe> probes) {
  reset();
  const std::size_t count = names_.size();
  std::vector<bool> probe_is_state(probes.size());
  std::vector<std::size_t> probe_node(probes.size());
  std::vector<Eigen::Index> probe_state(probes.size(), 0);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    bool is_state = false;
    probe_node[i] = resolve_probe(probes[i], is_state, probe_state[i]);
    probe_is_state[i] = is_state;
  }

  std::vector<std::vector<double>> out(probes.size());
  for (auto& col : out) col.reserve(steps + 1);

  const double h = step_;
  const Eigen::Index n = x_.size();
  std::vector<double> exo(input_names_.size(), 0.0);
  std::vector<double> sig(count, 0.0);
  Eigen::VectorXd k1(n), k2(n), k3(n), k4(n), xs(n);

  auto stage = [&](double t, const Eigen::VectorXd& xv, Eigen::VectorXd& dx) {
    if (sources) sources(t, exo);
    evaluate(xv, exo, sig);
    derivative(sig, xv, dx);
  };

  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * h;
    if (sources) sources(t, exo);
    evaluate(x_, exo, sig);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      out[i].push_back(probe_is_state[i] ? x_[probe_state[i]]
                                         : sig[probe_node[i]]);
    }
    if (k == steps) break;

    // k1 reuses the signals just evaluated at (t, x_).
    derivative(sig, x_, k1);
    // Delay outputs stay at their sample-k values across the step.
    std::vector<double> delay_inputs(delays_.size());
    for (std::size_t i = 0; i < delays_.size(); ++i) {
      delay_inputs[i] = sig[delays_[i].input];
    }
    xs = x_ + 0.5 * h * k1;
    stage(t + 0.5 * h, xs, k2);
    xs = x_ + 0.5 * h * k2;
    stage(t + 0.5 * h, xs, k3);
    xs = x_ + h * k3;
    stage(t + h, xs, k4);
    xs = x_ + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!xs.allFinite()) {
      throw DivergenceError(k + 1,
                            std::vector<double>(x_.data(), x_.data() + n));
    }
    x_ = xs;
    for (std::size_t i = 0; i < delays_.size(); ++i) {
      delays_[i].line.advance(delay_inputs[i]);
    }
  }
  return out;
}

}  // namespace dobsteer
