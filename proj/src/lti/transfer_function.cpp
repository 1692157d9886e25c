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

#include "dobsteer/lti/transfer_function.hpp"

#include <algorithm>
#include <cmath>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

TransferFunction::TransferFunction() : num_{0.0}, den_{1.0} {}

TransferFunction::TransferFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw InvalidInput("transfer function denominator is the zero polynomial");
  }
}

TransferFunction TransferFunction::gain(double k) {
  return {Polynomial::constant(k), Polynomial::constant(1.0)};
}

int TransferFunction::relative_degree() const {
  if (num_.is_zero()) return den_.degree();
  return den_.degree() - num_.degree();
}

Complex TransferFunction::operator()(Complex s) const {
  const Complex d = den_(s);
  // Scale of the Horner sum, used to decide whether d is a rounding-level 0.
  double scale = 0.0;
  double mag = 1.0;
  const double as = std::abs(s);
  for (int p = 0; p <= den_.degree(); ++p) {
    scale += std::abs(den_.coeff(p)) * mag;
    mag *= as;
  }
  if (std::abs(d) <= 1e-14 * scale) {
    throw PoleEvaluation("transfer function evaluated at a pole");
  }
  return num_(s) / d;
}

TransferFunction TransferFunction::operator-() const { return {-num_, den_}; }

TransferFunction operator*(const TransferFunction& a,
                           const TransferFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

TransferFunction operator+(const TransferFunction& a,
                           const TransferFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

TransferFunction operator-(const TransferFunction& a,
                           const TransferFunction& b) {
  return a + (-b);
}

TransferFunction operator*(double k, const TransferFunction& g) {
  return {g.num_.scaled(k), g.den_};
}

TransferFunction operator/(const TransferFunction& a,
                           const TransferFunction& b) {
  if (b.num_.is_zero()) throw InvalidInput("division by zero transfer function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

TransferFunction TransferFunction::minimal(double tol) const {
  if (num_.is_zero() || num_.degree() == 0 || den_.degree() == 0) return *this;
  std::vector<Complex> zeros = poly_roots(num_);
  std::vector<Complex> poles = poly_roots(den_);
  std::vector<bool> pole_used(poles.size(), false);
  std::vector<Complex> kept_zeros;
  for (const Complex& z : zeros) {
    bool cancelled = false;
    for (std::size_t i = 0; i < poles.size(); ++i) {
      if (pole_used[i]) continue;
      if (std::abs(z - poles[i]) <= tol * std::max(1.0, std::abs(z))) {
        pole_used[i] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) kept_zeros.push_back(z);
  }
  std::vector<Complex> kept_poles;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    if (!pole_used[i]) kept_poles.push_back(poles[i]);
  }
  return {num_.leading() * Polynomial::from_roots(kept_zeros),
          den_.leading() * Polynomial::from_roots(kept_poles)};
}

TransferFunction feedback(const TransferFunction& forward,
                          const TransferFunction& feedback_path) {
  // F/(1+FH) = nF dH / (dF dH + nF nH)
  Polynomial den = forward.den() * feedback_path.den() +
                   forward.num() * feedback_path.num();
  if (den.is_zero()) {
    throw InvalidInput("feedback: closed-loop denominator is identically zero");
  }
  return {forward.num() * feedback_path.den(), std::move(den)};
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw InvalidInput("log_grid: need 0 < lo < hi and n >= 2");
  }
  std::vector<double> w(n);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    w[i] = std::pow(10.0, a + (b - a) * t);
  }
  w.front() = lo;
  w.back() = hi;
  return w;
}

FrequencyResponse frequency_response(const TransferFunction& g,
                                     std::span<const double> omega) {
  FrequencyResponse fr;
  fr.omega.assign(omega.begin(), omega.end());
  fr.values.reserve(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0) || (i > 0 && !(omega[i] > omega[i - 1]))) {
      throw InvalidInput("frequency grid must be strictly increasing and > 0");
    }
    fr.values.push_back(g.at_frequency(omega[i]));
  }
  return fr;
}

}  // namespace dobsteer
