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

#include <variant>

#include "sympindex/path.hpp"

namespace sympindex {

// Hamiltonians the monodromy integrator understands.  All of them are
// time-independent on R^{2n} with z = (q, p).

struct QuadraticHamiltonian {
  Mat h;  // 2n x 2n symmetric; H(z) = <Hz, z>/2, flow exp(t J H)
};

/// H = |p|^2/2 + sum_i V_i(q_i) with V_i polynomial (coefficients by
/// ascending power, one vector per coordinate).
struct SeparablePolynomialHamiltonian {
  std::vector<std::vector<double>> potential;
};

/// H = |p|^2/2 + c |q|^k.
struct CentralPotentialHamiltonian {
  int dof;
  double coefficient;
  int exponent;
};

class HamiltonianSpec {
 public:
  explicit HamiltonianSpec(QuadraticHamiltonian q);
  explicit HamiltonianSpec(SeparablePolynomialHamiltonian s);
  explicit HamiltonianSpec(CentralPotentialHamiltonian c);

  int dof() const { return dof_; }
  double value(const Vec &z) const;
  Vec gradient(const Vec &z) const;
  Mat hessian(const Vec &z) const;

  const QuadraticHamiltonian *quadratic() const {
    return std::get_if<QuadraticHamiltonian>(&kind_);
  }

 private:
  int dof_;
  std::variant<QuadraticHamiltonian, SeparablePolynomialHamiltonian,
               CentralPotentialHamiltonian>
      kind_;
};

struct PeriodicOrbit {
  Vec z0;
  double period;
  double closure_residual = 0.0;
};

/// Circular orbit of a central potential at the given radius, with the
/// period fixed by radial force balance.
PeriodicOrbit circular_orbit(const HamiltonianSpec &h, double radius);

/// The paper's 2-D oscillator libration path S_t = Sigma_t (+) S~_t over
/// t in [0, reps] periods of the x oscillator, sampled exactly.
SymplecticPath oscillator_monodromy(double omega_x, double omega_y, int reps);

/// Jointly integrates dz/dt = J grad H and dS/dt = J H''(z) S with classical
/// RK4 at fixed step, re-projecting S onto Sp(n) after every step.  The path
/// parameter is scaled to [0, 1] over one orbit period times reps.
SymplecticPath integrate_monodromy(const HamiltonianSpec &h,
                                   const PeriodicOrbit &orbit, int steps,
                                   int reps = 1);

/// Monodromy path started from z' = f_{t'}(z0) instead of z0.
SymplecticPath origin_shift_monodromy(const HamiltonianSpec &h,
                                      const PeriodicOrbit &orbit,
                                      double t_shift, int steps, int reps = 1);

/// Flow map f_t(z0) by the same integrator (for conjugacy checks).
Vec flow_point(const HamiltonianSpec &h, const Vec &z0, double t, int steps);

/// Nearest-symplectic projection through the polar decomposition: the
/// orthogonal factor snaps to U(n), the positive factor to exp of the
/// J-anticommuting part of its log.
Mat project_symplectic(const Mat &s);

}  // namespace sympindex
