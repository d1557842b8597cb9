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

#include "sympindex/lagrangian.hpp"
#include "sympindex/path.hpp"

namespace sympindex {

// A point of the universal cover of the Lagrangian Grassmannian: a plane
// together with an angle theta satisfying det w = e^{i theta}.  Different
// admissible thetas for the same plane differ by multiples of 2 pi and are
// different points of the cover.
struct LagrangianLift {
  LagrangianPlane plane;
  double theta;
};

/// Validates det w = e^{i theta} within tolerance.
LagrangianLift make_lift(LagrangianPlane plane, double theta);

/// Lift with theta the principal argument of det w.
LagrangianLift principal_lift(const LagrangianPlane &plane);

/// Action of the generator of pi_1[Lag(n)]: theta advances by 2 pi r.
LagrangianLift beta_action(const LagrangianLift &lift, int r);

/// Continuation of a lift along a plane path t -> plane(t) on [0, 1].
/// plane(0) must project to start.plane; returns the endpoint lift and the
/// tracked angle.
std::pair<LagrangianLift, LiftedAngle> lift_lagrangian_path(
    const std::function<LagrangianPlane(double)> &plane_path,
    const LagrangianLift &start, const std::vector<double> &grid,
    bool refinable, int max_depth = 40);

/// ALM index of a transversal pair through the Souriau formula
///   mu = (theta - theta' + i Tr Log(-w (w')^{-1})) / pi.
/// Throws NotTransversal when the planes intersect and IntegralityViolation
/// when the residual against the nearest integer exceeds tolerance.
int alm_transversal(const LagrangianLift &l, const LagrangianLift &lp);

/// ALM index of an arbitrary pair.  Non-transversal pairs route through a
/// deterministic auxiliary plane transversal to both; the result is verified
/// against a second auxiliary choice.
int alm(const LagrangianLift &l, const LagrangianLift &lp);

/// Loop index of a closed path: twice the winding number of rho(S_t).
int loop_maslov(const SymplecticPath &path);

/// Relative Maslov index mu_l = mu(S l lifted along the path, l lifted).
int relative_maslov(const SymplecticPath &path, const LagrangianPlane &l);

/// Reduced index m_l = (mu_l + n + dim(S l and l)) / 2.
int reduced_maslov(const SymplecticPath &path, const LagrangianPlane &l);

}  // namespace sympindex
