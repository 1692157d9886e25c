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

#include "dobsteer/lti/polynomial.hpp"

namespace dobsteer {

/**
 * @brief SISO rational transfer function num(s)/den(s).
 *
 * Composition never cancels common factors. The only place cancellation
 * happens is minimal(), which is meant for diagnostics.
 */
class TransferFunction {
 public:
  TransferFunction();
  TransferFunction(Polynomial num, Polynomial den);
  static TransferFunction gain(double k);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  /// deg(den) - deg(num); the zero transfer function reports deg(den).
  int relative_degree() const;
  bool is_proper() const { return relative_degree() >= 0; }
  bool is_strictly_proper() const { return relative_degree() >= 1; }

  /// Throws PoleEvaluation when s is (numerically) a root of den.
  Complex operator()(Complex s) const;
  Complex at_frequency(double omega) const { return (*this)(Complex(0.0, omega)); }

  TransferFunction operator-() const;
  friend TransferFunction operator*(const TransferFunction& a,
                                    const TransferFunction& b);
  friend TransferFunction operator+(const TransferFunction& a,
                                    const TransferFunction& b);
  friend TransferFunction operator-(const TransferFunction& a,
                                    const TransferFunction& b);
  friend TransferFunction operator*(double k, const TransferFunction& g);
  /// a / b as a single rational function; b must not be identically zero.
  friend TransferFunction operator/(const TransferFunction& a,
                                    const TransferFunction& b);

  /// Cancels pole/zero pairs closer than tol (relative to max(1,|root|)) and
  /// rebuilds both polynomials from the remaining roots.
  TransferFunction minimal(double tol = 1e-6) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// forward / (1 + forward * feedback_path); throws InvalidInput when the loop
/// denominator is identically zero.
TransferFunction feedback(const TransferFunction& forward,
                          const TransferFunction& feedback_path);

/// Sampled frequency response on an ascending, strictly positive grid.
struct FrequencyResponse {
  std::vector<double> omega;
  std::vector<Complex> values;
};

/// n log-spaced points covering [lo, hi] inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// Validates the grid (ascending, > 0) and evaluates g on it.
FrequencyResponse frequency_response(const TransferFunction& g,
                                     std::span<const double> omega);

}  // namespace dobsteer
