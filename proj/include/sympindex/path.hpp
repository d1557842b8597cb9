// Copyright 2026 The sympindex authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <vector>

#include "sympindex/symplectic.hpp"

namespace sympindex {

// A continuous path in Sp(n) over t in [0, 1] starting at the identity.  It
// stands for an element of the universal cover: every index below factors
// through continuously lifted angles, which are homotopy invariants, so the
// sampled representative is all that is ever needed.  Analytic paths carry a
// generator closure that adaptive lifting can evaluate at new parameters;
// raw sample lists cannot be refined and fail loudly when under-resolved.
class SymplecticPath {
 public:
  using Generator = std::function<Mat(double)>;

  /// Path backed by a closure; sampled on a uniform grid of the given size.
  static SymplecticPath from_generator(int dof, Generator gen,
                                       int initial_samples = 33);

  /// Path backed by explicit samples at strictly increasing times
  /// t0 = 0 < ... < tN = 1 with S(0) = I; cannot be refined.
  static SymplecticPath from_samples(std::vector<double> times,
                                     std::vector<Mat> samples);

  static SymplecticPath identity(int dof);

  int dof() const { return dof_; }
  bool refinable() const { return static_cast<bool>(gen_); }
  const std::vector<double> &times() const { return times_; }
  const std::vector<Mat> &samples() const { return samples_; }
  const Mat &endpoint() const { return samples_.back(); }

  /// Evaluate at t; raw paths interpolate to the nearest sample.
  Mat at(double t) const;

  /// Pointwise product t -> S_t S'_t (the covering-group product).
  friend SymplecticPath pointwise_product(const SymplecticPath &a,
                                          const SymplecticPath &b);
  /// Pointwise inverse t -> S_t^{-1}.
  friend SymplecticPath pointwise_inverse(const SymplecticPath &a);
  /// Pointwise power t -> S_t^r for r >= 1.
  friend SymplecticPath pointwise_power(const SymplecticPath &a, int r);
  /// Block direct sum in the interleaved (x, p) ordering.
  friend SymplecticPath direct_sum_path(const SymplecticPath &a,
                                        const SymplecticPath &b);

 private:
  SymplecticPath() = default;
  void validate() const;

  int dof_ = 0;
  Generator gen_;
  std::vector<double> times_;
  std::vector<Mat> samples_;
};

// Named path generators --------------------------------------------------

/// t -> [[cos(a t), sin(a t)], [-sin(a t), cos(a t)]] with a = angle*fraction.
/// This is the flow direction of a harmonic oscillator; its polar image in
/// U(1) is e^{-i a t}.
SymplecticPath rotation_path(double angle, double fraction = 1.0);

/// One-degree oscillator flow e^{omega t J} over reps periods of 2 pi/omega.
SymplecticPath oscillator_path(double omega, double period, int reps = 1);

/// The generator alpha of pi_1[Sp(n)] to the power r: t -> exp(-2 pi r t J1)
/// in the first degree of freedom (rho-winding +r).
SymplecticPath alpha_power(int r, int dof = 1);

// Lifted angles -----------------------------------------------------------

/// Samples of a continuous branch of the argument of a unit-modulus function.
struct LiftedAngle {
  std::vector<double> times;
  std::vector<double> theta;

  double start() const { return theta.front(); }
  double end() const { return theta.back(); }
  double total() const { return theta.back() - theta.front(); }
};

/// Tracks arg f(t) continuously from theta0 over the grid, bisecting any step
/// whose principal-argument gap reaches pi/2 (up to max_depth) when the
/// function can be evaluated at new parameters.  e^{i theta_k} reproduces
/// f(t_k) exactly at every accepted sample.
LiftedAngle track_argument(const std::function<Complex(double)> &unit_fn,
                           double theta0, const std::vector<double> &grid,
                           bool refinable, int max_depth = 40);

/// Continuous branch of arg rho(S_t) along the path, started at 0.
LiftedAngle rho_lift(const SymplecticPath &path);

}  // namespace sympindex
