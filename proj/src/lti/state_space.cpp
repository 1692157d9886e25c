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

#include <cmath>
#include <cstdint>
#include <optional>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

StateSpaceModel::StateSpaceModel(Eigen::MatrixXd a, Eigen::MatrixXd b,
                                 Eigen::MatrixXd c, Eigen::MatrixXd d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
  const auto n = A.rows();
  if (A.cols() != n || B.rows() != n || C.cols() != n ||
      D.rows() != C.rows() || D.cols() != B.cols()) {
    throw InvalidInput("state-space dimensions are inconsistent");
  }
}

Eigen::MatrixXcd StateSpaceModel::evaluate(Complex s) const {
  const auto n = states();
  Eigen::MatrixXcd out = D.cast<Complex>();
  if (n == 0) return out;
  Eigen::MatrixXcd sI_A =
      s * Eigen::MatrixXcd::Identity(n, n) - A.cast<Complex>();
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sI_A);
  out += C.cast<Complex>() * lu.solve(B.cast<Complex>());
  return out;
}

Complex StateSpaceModel::evaluate(Complex s, Eigen::Index output,
                                  Eigen::Index input) const {
  return evaluate(s)(output, input);
}

StateSpaceModel tf_to_ss(const TransferFunction& g) {
  if (!g.is_proper()) {
    throw CausalityError("cannot realize an improper transfer function");
  }
  const Polynomial& den = g.den();
  const int n = den.degree();
  const double lead = den.leading();

  std::vector<double> a(static_cast<std::size_t>(n + 1));
  std::vector<double> b(static_cast<std::size_t>(n + 1), 0.0);
  for (int p = 0; p <= n; ++p) {
    a[static_cast<std::size_t>(n - p)] = den.coeff(p) / lead;
    b[static_cast<std::size_t>(n - p)] = g.num().coeff(p) / lead;
  }
  const double d = b[0];

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, 1);
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(1, n);
  Eigen::MatrixXd D = Eigen::MatrixXd::Constant(1, 1, d);
  if (n > 0) {
    for (int j = 0; j < n; ++j) {
      A(0, j) = -a[static_cast<std::size_t>(j + 1)];
      C(0, j) = b[static_cast<std::size_t>(j + 1)] -
                d * a[static_cast<std::size_t>(j + 1)];
    }
    for (int i = 1; i < n; ++i) A(i, i - 1) = 1.0;
    B(0, 0) = 1.0;
  }
  return {std::move(A), std::move(B), std::move(C), std::move(D)};
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Laplace expansion along rows, memoized on the set of columns still free.
Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(1.0);
  if (n > 16) throw InvalidInput("determinant: matrix too large for expansion");
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << n);

  auto rec = [&](auto&& self, std::uint32_t used) -> Polynomial {
    const auto row = static_cast<std::size_t>(__builtin_popcount(used));
    if (row == n) return Polynomial::constant(1.0);
    auto& slot = memo[used];
    if (slot) return *slot;
    Polynomial acc;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      if (!m[row][j].is_zero()) {
        Polynomial term = m[row][j] * self(self, used | (1u << j));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    slot = acc;
    return acc;
  };
  return rec(rec, 0u);
}

}  // namespace

TransferFunction ss_to_tf(const StateSpaceModel& model, Eigen::Index output,
                          Eigen::Index input) {
  const auto n = static_cast<std::size_t>(model.states());
  if (output < 0 || output >= model.outputs() || input < 0 ||
      input >= model.inputs()) {
    throw InvalidInput("ss_to_tf: channel out of range");
  }
  PolyMatrix sI_A(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = model.A(static_cast<Eigen::Index>(i),
                               static_cast<Eigen::Index>(j));
      sI_A[i][j] = (i == j) ? Polynomial({1.0, -a}) : Polynomial({-a});
    }
  }
  Polynomial den = determinant(sI_A);

  PolyMatrix aug(n + 1, std::vector<Polynomial>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = sI_A[i][j];
    aug[i][n] = Polynomial({model.B(static_cast<Eigen::Index>(i), input)});
    aug[n][i] = Polynomial({-model.C(output, static_cast<Eigen::Index>(i))});
  }
  aug[n][n] = Polynomial({model.D(output, input)});
  return {determinant(aug), std::move(den)};
}

namespace {

void check_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidInput("simulate: step must be positive and finite");
  }
}

}  // namespace

std::vector<std::vector<double>> simulate(const StateSpaceModel& model,
                                          const InputSamples& input,
                                          double h) {
  check_step(h);
  if (input.empty()) throw InvalidInput("simulate: empty input signal");
  const auto m = model.inputs();
  for (const auto& u : input) {
    if (static_cast<Eigen::Index>(u.size()) != m) {
      throw InvalidInput("simulate: input sample width does not match model");
    }
  }
  const auto n = model.states();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd u0(m), u1(m), um(m);
  std::vector<std::vector<double>> out;
  out.reserve(input.size());

  auto emit = [&](const Eigen::VectorXd& u) {
    Eigen::VectorXd y = model.C * x + model.D * u;
    out.emplace_back(y.data(), y.data() + y.size());
  };
  auto f = [&](const Eigen::VectorXd& xs, const Eigen::VectorXd& u) {
    return Eigen::VectorXd(model.A * xs + model.B * u);
  };

  for (std::size_t k = 0; k < input.size(); ++k) {
    u0 = Eigen::Map<const Eigen::VectorXd>(input[k].data(), m);
    emit(u0);
    if (k + 1 == input.size()) break;
    u1 = Eigen::Map<const Eigen::VectorXd>(input[k + 1].data(), m);
    um = 0.5 * (u0 + u1);
    const Eigen::VectorXd k1 = f(x, u0);
    const Eigen::VectorXd k2 = f(x + 0.5 * h * k1, um);
    const Eigen::VectorXd k3 = f(x + 0.5 * h * k2, um);
    const Eigen::VectorXd k4 = f(x + h * k3, u1);
    Eigen::VectorXd next = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.allFinite()) {
      throw DivergenceError(k + 1, std::vector<double>(x.data(), x.data() + n));
    }
    x = std::move(next);
  }
  return out;
}

std::vector<double> simulate(const StateSpaceModel& model,
                             std::span<const double> input, double h) {
  if (model.inputs() != 1) {
    throw InvalidInput("simulate: scalar input needs a single-input model");
  }
  InputSamples samples;
  samples.reserve(input.size());
  for (double u : input) samples.push_back({u});
  auto rows = simulate(model, samples, h);
  std::vector<double> y;
  y.reserve(rows.size());
  for (const auto& r : rows) y.push_back(r.empty() ? 0.0 : r[0]);
  return y;
}

}  // namespace dobsteer
