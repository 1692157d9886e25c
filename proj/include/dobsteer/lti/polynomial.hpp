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

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace dobsteer {

using Complex = std::complex<double>;

/**
 * @brief Real polynomial in the Laplace variable s.
 *
 * Coefficients are stored in descending powers: {a_n, ..., a_1, a_0}.
 * Leading zeros are stripped on construction, so the leading coefficient is
 * nonzero unless the polynomial is the zero polynomial, which is stored as
 * the single coefficient {0}.
 */
class Polynomial {
 public:
  Polynomial();
  Polynomial(std::initializer_list<double> coeffs);
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c);
  /// (s - root) for every root; roots must come in conjugate pairs.
  static Polynomial from_roots(std::span<const Complex> roots);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  double leading() const { return coeffs_.front(); }
  /// Coefficient of s^power (0 when power exceeds the degree).
  double coeff(int power) const;

  double norm_inf() const;
  double norm2() const;

  double operator()(double s) const;
  Complex operator()(Complex s) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial scaled(double k) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double k, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void strip();
  std::vector<double> coeffs_;
};

/**
 * Roots of @p p with multiplicity, from the eigenvalues of the companion
 * matrix followed by a guarded Newton polish. Throws InvalidInput for the
 * zero polynomial or a constant.
 */
std::vector<Complex> poly_roots(const Polynomial& p);

/// max |p(r)| over the given roots, divided by ||p||_inf.
double relative_residual(const Polynomial& p, std::span<const Complex> roots);

}  // namespace dobsteer
