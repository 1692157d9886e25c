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

#include "dobsteer/lti/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "dobsteer/lti/errors.hpp"

namespace dobsteer {

Polynomial::Polynomial() : coeffs_{0.0} {}

Polynomial::Polynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs) {
  strip();
}

Polynomial::Polynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
  strip();
}

Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> acc{Complex(1.0)};
  for (const Complex& r : roots) {
    std::vector<Complex> next(acc.size() + 1, Complex(0.0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i];
      next[i + 1] -= acc[i] * r;
    }
    acc = std::move(next);
  }
  std::vector<double> re(acc.size());
  std::transform(acc.begin(), acc.end(), re.begin(),
                 [](const Complex& c) { return c.real(); });
  return Polynomial(std::move(re));
}

void Polynomial::strip() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](double c) { return c != 0.0; });
  if (first == coeffs_.end()) {
    coeffs_.assign(1, 0.0);
    return;
  }
  coeffs_.erase(coeffs_.begin(), first);
}

double Polynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(degree() - power)];
}

double Polynomial::norm_inf() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Polynomial::norm2() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

double Polynomial::operator()(double s) const {
  double acc = 0.0;
  for (double c : coeffs_) acc = acc * s + c;
  return acc;
}

Complex Polynomial::operator()(Complex s) const {
  Complex acc(0.0);
  for (double c : coeffs_) acc = acc * s + c;
  return acc;
}

Polynomial Polynomial::derivative() const {
  const int n = degree();
  if (n <= 0) return Polynomial();
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] =
        coeffs_[static_cast<std::size_t>(i)] * static_cast<double>(n - i);
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw InvalidInput("monic: zero polynomial");
  return scaled(1.0 / leading());
}

Polynomial Polynomial::scaled(double k) const {
  std::vector<double> c = coeffs_;
  for (double& v : c) v *= k;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const { return scaled(-1.0); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& x = a.coeffs_;
  const auto& y = b.coeffs_;
  std::vector<double> out(std::max(x.size(), y.size()), 0.0);
  const std::size_t ox = out.size() - x.size();
  const std::size_t oy = out.size() - y.size();
  for (std::size_t i = 0; i < x.size(); ++i) out[ox + i] += x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[oy + i] += y[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  const auto& x = a.coeffs_;
  const auto& y = b.coeffs_;
  std::vector<double> out(x.size() + y.size() - 1, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(double k, const Polynomial& p) { return p.scaled(k); }

namespace {

// A few Newton steps, kept only while |p(z)| strictly decreases. Multiple
// roots converge slowly, so a step that does not help is simply dropped.
Complex polish(const Polynomial& p, const Polynomial& dp, Complex z) {
  double best = std::abs(p(z));
  for (int it = 0; it < 8 && best > 0.0; ++it) {
    const Complex d = dp(z);
    if (d == Complex(0.0)) break;
    const Complex cand = z - p(z) / d;
    const double r = std::abs(p(cand));
    if (!(r < best)) break;
    z = cand;
    best = r;
  }
  return z;
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("poly_roots: zero polynomial");
  const int n = p.degree();
  if (n < 1) throw InvalidInput("poly_roots: degree must be at least 1");

  const Polynomial m = p.monic();
  // Exact zero roots are peeled off first so they come back as exact zeros.
  int zeros = 0;
  while (zeros < n && m.coeff(zeros) == 0.0) ++zeros;
  const int k = n - zeros;

  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  if (k > 0) {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
    for (int j = 0; j < k; ++j) companion(0, j) = -m.coeffs()[1 + j];
    for (int i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    if (es.info() != Eigen::Success) {
      throw InvalidInput("poly_roots: eigenvalue iteration did not converge");
    }
    const Polynomial dm = m.derivative();
    for (int i = 0; i < k; ++i) {
      Complex z = es.eigenvalues()[i];
      z = polish(m, dm, z);
      roots.push_back(z);
    }
  }
  for (int i = 0; i < zeros; ++i) roots.emplace_back(0.0, 0.0);
  std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return roots;
}

double relative_residual(const Polynomial& p, std::span<const Complex> roots) {
  double worst = 0.0;
  for (const Complex& r : roots) worst = std::max(worst, std::abs(p(r)));
  return worst / p.norm_inf();
}

}  // namespace dobsteer
