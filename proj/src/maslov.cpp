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

#include "sympindex/maslov.hpp"

#include <cmath>
#include <sstream>

namespace sympindex {

namespace {

// Safety margin (radians) for routing decisions: a pair is treated as
// transversal only when every eigen-angle of -w(w')^{-1} clears the branch
// cut by this much; borderline pairs take the auxiliary route, which only
// divides by well-separated quantities.
constexpr double kRouteMargin = 1e-3;

CVec relative_eigenangles(const LagrangianPlane &l, const LagrangianPlane &lp) {
  const CMat c = -(l.souriau() * lp.souriau().inverse());
  Eigen::ComplexEigenSolver<CMat> es(c, false);
  if (es.info() != Eigen::Success)
    throw IndexError("alm: eigensolver failed on -w (w')^{-1}");
  return es.eigenvalues();
}

/// Distance of the eigenvalue spectrum from the negative real axis.
double branch_margin(const CVec &eigenvalues) {
  double margin = M_PI;
  for (int i = 0; i < eigenvalues.size(); ++i)
    margin = std::min(margin, M_PI - std::abs(std::arg(eigenvalues[i])));
  return margin;
}

int round_checked(double value, const char *what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > tol::integrality) {
    std::ostringstream msg;
    msg << what << ": residual " << std::abs(value - rounded)
        << " from nearest integer " << rounded;
    throw IntegralityViolation(msg.str());
  }
  return static_cast<int>(rounded);
}

/// Auxiliary plane e^{i phi} l_P with a valid lift attached.
LagrangianLift auxiliary_lift(int dof, double phi) {
  const CMat u = std::polar(1.0, phi) * CMat::Identity(dof, dof);
  return make_lift(LagrangianPlane::from_unitary(u),
                   static_cast<double>(dof) * 2.0 * phi);
}

}  // namespace

LagrangianLift make_lift(LagrangianPlane plane, double theta) {
  const Complex det = plane.souriau_det();
  if (std::abs(det - std::polar(1.0, theta)) > 1e-6)
    throw IntegralityViolation("make_lift: e^{i theta} does not match det w");
  return LagrangianLift{std::move(plane), theta};
}

LagrangianLift principal_lift(const LagrangianPlane &plane) {
  const double theta = std::arg(plane.souriau_det());
  return LagrangianLift{plane, theta};
}

LagrangianLift beta_action(const LagrangianLift &lift, int r) {
  return LagrangianLift{lift.plane, lift.theta + 2.0 * M_PI * r};
}

std::pair<LagrangianLift, LiftedAngle> lift_lagrangian_path(
    const std::function<LagrangianPlane(double)> &plane_path,
    const LagrangianLift &start, const std::vector<double> &grid,
    bool refinable, int max_depth) {
  auto unit_fn = [&plane_path](double t) {
    return plane_path(t).souriau_det();
  };
  LiftedAngle lift =
      track_argument(unit_fn, start.theta, grid, refinable, max_depth);
  LagrangianLift end = make_lift(plane_path(grid.back()), lift.end());
  return {std::move(end), std::move(lift)};
}

int alm_transversal(const LagrangianLift &l, const LagrangianLift &lp) {
  const CVec ev = relative_eigenangles(l.plane, lp.plane);
  if (branch_margin(ev) <= tol::branch_cut)
    throw NotTransversal("alm_transversal: planes intersect");
  // mu = (theta - theta' + i Tr Log(-w (w')^{-1})) / pi; the trace of the
  // principal log of a unitary matrix is i times the sum of eigen-angles.
  double angle_sum = 0.0;
  for (int i = 0; i < ev.size(); ++i) angle_sum += std::arg(ev[i]);
  const double mu = (l.theta - lp.theta - angle_sum) / M_PI;
  const int value = round_checked(mu, "alm_transversal");
  const int n = l.plane.dof();
  if (((value - n) % 2 + 2) % 2 != 0)
    throw IntegralityViolation(
        "alm_transversal: parity disagrees with n + dim(l and l') mod 2");
  return value;
}

int alm(const LagrangianLift &l, const LagrangianLift &lp) {
  if (l.plane.dof() != lp.plane.dof())
    throw IndexError("alm: dimension mismatch");
  const int n = l.plane.dof();
  const CVec rel = relative_eigenangles(l.plane, lp.plane);
  if (branch_margin(rel) > kRouteMargin) return alm_transversal(l, lp);

  // Sweep e^{i pi/(2k+1)} l_P until one plane is comfortably transversal to
  // both arguments; 2n+1 distinct candidates always beat the 2n forbidden
  // eigen-angles, the margin floor just keeps the arithmetic well away from
  // the cut.
  auto margin_for = [&](double phi) {
    const CMat scaled =
        std::polar(1.0, -2.0 * phi) * CMat::Identity(n, n);
    double m = M_PI;
    for (const auto &plane : {l.plane, lp.plane}) {
      Eigen::ComplexEigenSolver<CMat> es(-(plane.souriau() * scaled), false);
      m = std::min(m, branch_margin(es.eigenvalues()));
    }
    return m;
  };

  std::vector<double> found;
  for (int k = 1; k <= 4 * n + 8 && found.size() < 2; ++k) {
    const double phi = M_PI / (2 * k + 1);
    if (margin_for(phi) > kRouteMargin) found.push_back(phi);
  }
  if (found.size() < 2)
    throw AuxiliarySearchFailed(
        "alm: no auxiliary plane is transversal to both arguments");

  int result = 0;
  bool have_result = false;
  for (double phi : found) {
    const LagrangianLift aux = auxiliary_lift(n, phi);
    const int tau = wall_kashiwara(l.plane, lp.plane, aux.plane);
    const int value =
        alm_transversal(l, aux) - alm_transversal(lp, aux) + tau;
    if (have_result && value != result)
      throw IntegralityViolation(
          "alm: auxiliary-plane results disagree, cocycle is broken");
    result = value;
    have_result = true;
  }
  const int d = intersection_dim(l.plane, lp.plane);
  if (((result - n - d) % 2 + 2) % 2 != 0)
    throw IntegralityViolation(
        "alm: parity disagrees with n + dim(l and l') mod 2");
  return result;
}

int loop_maslov(const SymplecticPath &path) {
  const Mat &first = path.samples().front();
  const Mat &last = path.samples().back();
  const double scale = std::max(1.0, first.cwiseAbs().maxCoeff());
  if ((last - first).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw NotALoop("loop_maslov: path endpoint differs from its start");
  const LiftedAngle lift = rho_lift(path);
  const double winding = lift.total() / (2.0 * M_PI);
  // The loop index is the degree of the squared determinant, twice the
  // rho-winding.
  return 2 * round_checked(winding, "loop_maslov");
}

int relative_maslov(const SymplecticPath &path, const LagrangianPlane &l) {
  if (2 * l.dof() != static_cast<int>(path.endpoint().rows()))
    throw IndexError("relative_maslov: dimension mismatch");
  const LagrangianLift base = principal_lift(l);
  auto moving = [&path, &l](double t) { return l.apply(path.at(t)); };
  auto [end, lift] =
      lift_lagrangian_path(moving, base, path.times(), path.refinable());
  (void)lift;
  return alm(end, base);
}

int reduced_maslov(const SymplecticPath &path, const LagrangianPlane &l) {
  const int mu = relative_maslov(path, l);
  const int n = l.dof();
  const int d = intersection_dim(l.apply(path.endpoint()), l);
  if ((mu + n + d) % 2 != 0)
    throw IntegralityViolation("reduced_maslov: parity is broken");
  return (mu + n + d) / 2;
}

}  // namespace sympindex
