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

#include "sympindex/hamflow.hpp"

#include <cmath>
#include <sstream>

namespace sympindex {

namespace {

double poly_eval(const std::vector<double> &coeff, double x) {
  double acc = 0.0;
  for (std::size_t k = coeff.size(); k-- > 0;) acc = acc * x + coeff[k];
  return acc;
}

std::vector<double> poly_derivative(const std::vector<double> &coeff) {
  std::vector<double> d;
  for (std::size_t k = 1; k < coeff.size(); ++k)
    d.push_back(coeff[k] * static_cast<double>(k));
  return d;
}

Mat rotation_block(double a) {
  Mat r(2, 2);
  r << std::cos(a), std::sin(a), -std::sin(a), std::cos(a);
  return r;
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(QuadraticHamiltonian q)
    : dof_(static_cast<int>(q.h.rows()) / 2), kind_(std::move(q)) {
  const auto &h = std::get<QuadraticHamiltonian>(kind_).h;
  if (h.rows() != h.cols() || h.rows() % 2 != 0)
    throw IndexError("HamiltonianSpec: quadratic matrix must be 2n x 2n");
  if ((h - h.transpose()).cwiseAbs().maxCoeff() >
      1e-10 * std::max(1.0, h.cwiseAbs().maxCoeff()))
    throw IndexError("HamiltonianSpec: quadratic matrix must be symmetric");
}

HamiltonianSpec::HamiltonianSpec(SeparablePolynomialHamiltonian s)
    : dof_(static_cast<int>(s.potential.size())), kind_(std::move(s)) {
  if (dof_ == 0) throw IndexError("HamiltonianSpec: empty potential");
}

HamiltonianSpec::HamiltonianSpec(CentralPotentialHamiltonian c)
    : dof_(c.dof), kind_(std::move(c)) {
  if (dof_ < 1 || std::get<CentralPotentialHamiltonian>(kind_).exponent < 1)
    throw IndexError("HamiltonianSpec: bad central potential");
}

double HamiltonianSpec::value(const Vec &z) const {
  const int n = dof_;
  if (const auto *q = std::get_if<QuadraticHamiltonian>(&kind_))
    return 0.5 * z.dot(q->h * z);
  const Vec qpos = z.head(n);
  const Vec p = z.tail(n);
  if (const auto *s = std::get_if<SeparablePolynomialHamiltonian>(&kind_)) {
    double v = 0.5 * p.squaredNorm();
    for (int i = 0; i < n; ++i) v += poly_eval(s->potential[i], qpos[i]);
    return v;
  }
  const auto &c = std::get<CentralPotentialHamiltonian>(kind_);
  return 0.5 * p.squaredNorm() +
         c.coefficient * std::pow(qpos.norm(), c.exponent);
}

Vec HamiltonianSpec::gradient(const Vec &z) const {
  const int n = dof_;
  if (const auto *q = std::get_if<QuadraticHamiltonian>(&kind_))
    return q->h * z;
  const Vec qpos = z.head(n);
  const Vec p = z.tail(n);
  Vec g(2 * n);
  g.tail(n) = p;
  if (const auto *s = std::get_if<SeparablePolynomialHamiltonian>(&kind_)) {
    for (int i = 0; i < n; ++i)
      g[i] = poly_eval(poly_derivative(s->potential[i]), qpos[i]);
    return g;
  }
  const auto &c = std::get<CentralPotentialHamiltonian>(kind_);
  const double r = qpos.norm();
  if (r == 0.0) {
    g.head(n).setZero();
    return g;
  }
  // d/dq c r^k = c k r^{k-2} q
  g.head(n) = c.coefficient * c.exponent * std::pow(r, c.exponent - 2) * qpos;
  return g;
}

Mat HamiltonianSpec::hessian(const Vec &z) const {
  const int n = dof_;
  if (const auto *q = std::get_if<QuadraticHamiltonian>(&kind_)) return q->h;
  Mat h = Mat::Zero(2 * n, 2 * n);
  h.bottomRightCorner(n, n) = Mat::Identity(n, n);
  const Vec qpos = z.head(n);
  if (const auto *s = std::get_if<SeparablePolynomialHamiltonian>(&kind_)) {
    for (int i = 0; i < n; ++i)
      h(i, i) =
          poly_eval(poly_derivative(poly_derivative(s->potential[i])), qpos[i]);
    return h;
  }
  const auto &c = std::get<CentralPotentialHamiltonian>(kind_);
  const double r = qpos.norm();
  if (r == 0.0) return h;
  const double k = c.exponent;
  h.topLeftCorner(n, n) =
      c.coefficient * k * std::pow(r, k - 2) * Mat::Identity(n, n) +
      c.coefficient * k * (k - 2) * std::pow(r, k - 4) * qpos * qpos.transpose();
  return h;
}

PeriodicOrbit circular_orbit(const HamiltonianSpec &h, double radius) {
  if (h.dof() != 2)
    throw IndexError("circular_orbit: only 2-dof central potentials");
  // Force balance: omega^2 R = V'(R), so omega = sqrt(V'(R)/R).
  Vec probe = Vec::Zero(4);
  probe[0] = radius;
  const double vprime = h.gradient(probe)[0];
  if (vprime <= 0.0)
    throw IndexError("circular_orbit: potential is not confining here");
  const double omega = std::sqrt(vprime / radius);
  PeriodicOrbit orbit;
  orbit.z0 = Vec::Zero(4);
  orbit.z0[0] = radius;
  orbit.z0[3] = radius * omega;  // p = (0, R omega) at t = 0
  orbit.period = 2.0 * M_PI / omega;
  return orbit;
}

SymplecticPath oscillator_monodromy(double omega_x, double omega_y, int reps) {
  if (omega_x <= 0.0 || omega_y <= 0.0 || reps < 1)
    throw IndexError("oscillator_monodromy: need positive frequencies");
  const double chi = 2.0 * M_PI * omega_y / omega_x;
  const double r = static_cast<double>(reps);
  const int samples =
      std::max(65, 8 * static_cast<int>(std::ceil(r * (2.0 * M_PI + chi))));
  return SymplecticPath::from_generator(
      2,
      [chi, r](double t) {
        Mat s = Mat::Zero(4, 4);
        const Mat sx = rotation_block(2.0 * M_PI * r * t);
        const Mat sy = rotation_block(chi * r * t);
        s(0, 0) = sx(0, 0);
        s(0, 2) = sx(0, 1);
        s(2, 0) = sx(1, 0);
        s(2, 2) = sx(1, 1);
        s(1, 1) = sy(0, 0);
        s(1, 3) = sy(0, 1);
        s(3, 1) = sy(1, 0);
        s(3, 3) = sy(1, 1);
        return s;
      },
      samples);
}

Mat project_symplectic(const Mat &s) {
  const int n = static_cast<int>(s.rows()) / 2;
  // Orthogonal polar factor, snapped to the unitary subgroup.
  Eigen::SelfAdjointEigenSolver<Mat> es(s * s.transpose());
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw PolarFailure("project_symplectic: polar decomposition failed");
  const Mat qfac = es.eigenvectors() *
                   es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                   es.eigenvectors().transpose() * s;
  const Mat a = 0.5 * (qfac.topLeftCorner(n, n) + qfac.bottomRightCorner(n, n));
  const Mat b = 0.5 * (qfac.bottomLeftCorner(n, n) - qfac.topRightCorner(n, n));
  CMat u = a.cast<Complex>() + Complex(0, 1) * b.cast<Complex>();
  // Re-unitarise u by its own polar factor.
  Eigen::JacobiSVD<CMat> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  u = svd.matrixU() * svd.matrixV().adjoint();

  // Positive factor: keep only the J-anticommuting part of log P.
  const Mat p = embed_unitary(u).transpose() * s;
  Eigen::SelfAdjointEigenSolver<Mat> pes(0.5 * (p + p.transpose()));
  if (pes.info() != Eigen::Success || pes.eigenvalues().minCoeff() <= 0.0)
    throw PolarFailure("project_symplectic: positive factor failed");
  const Mat logp = pes.eigenvectors() *
                   pes.eigenvalues().array().log().matrix().asDiagonal() *
                   pes.eigenvectors().transpose();
  const Mat j = standard_J(n);
  const Mat sp_part = 0.5 * (logp + j * logp * j);
  Eigen::SelfAdjointEigenSolver<Mat> ses(0.5 * (sp_part + sp_part.transpose()));
  const Mat pproj = ses.eigenvectors() *
                    ses.eigenvalues().array().exp().matrix().asDiagonal() *
                    ses.eigenvectors().transpose();
  return embed_unitary(u) * pproj;
}

namespace {

struct FlowState {
  Vec z;
  Mat s;
};

/// One RK4 step of the coupled point + variational system.
FlowState rk4_step(const HamiltonianSpec &h, const FlowState &y, double dt) {
  const int n2 = static_cast<int>(y.z.size());
  const Mat j = standard_J(n2 / 2);
  auto deriv = [&](const FlowState &w) {
    FlowState d;
    d.z = j * h.gradient(w.z);
    d.s = j * h.hessian(w.z) * w.s;
    return d;
  };
  auto advance = [&](const FlowState &w, const FlowState &d, double f) {
    FlowState out;
    out.z = w.z + f * d.z;
    out.s = w.s + f * d.s;
    return out;
  };
  const FlowState k1 = deriv(y);
  const FlowState k2 = deriv(advance(y, k1, dt / 2));
  const FlowState k3 = deriv(advance(y, k2, dt / 2));
  const FlowState k4 = deriv(advance(y, k3, dt));
  FlowState out;
  out.z = y.z + dt / 6.0 * (k1.z + 2 * k2.z + 2 * k3.z + k4.z);
  out.s = y.s + dt / 6.0 * (k1.s + 2 * k2.s + 2 * k3.s + k4.s);
  return out;
}

}  // namespace

SymplecticPath integrate_monodromy(const HamiltonianSpec &h,
                                   const PeriodicOrbit &orbit, int steps,
                                   int reps) {
  if (steps < 16) throw IndexError("integrate_monodromy: too few steps");
  const int n = h.dof();
  const double total_time = orbit.period * reps;
  const double dt = total_time / (steps * reps);

  FlowState state{orbit.z0, Mat::Identity(2 * n, 2 * n)};
  std::vector<double> times{0.0};
  std::vector<Mat> samples{state.s};
  const double h0 = h.value(orbit.z0);
  const int total_steps = steps * reps;
  for (int k = 1; k <= total_steps; ++k) {
    state = rk4_step(h, state, dt);
    const double drift = symplectic_residual(state.s);
    if (drift > 1e-7)
      throw SymplecticDriftExceeded(
          "integrate_monodromy: variational drift exceeded 1e-7 before "
          "projection");
    state.s = project_symplectic(state.s);
    times.push_back(static_cast<double>(k) / total_steps);
    samples.push_back(state.s);
  }
  const double closure = (state.z - orbit.z0).norm();
  if (closure > 1e-6 * std::max(1.0, orbit.z0.norm()))
    throw OrbitNotClosed("integrate_monodromy: orbit failed to close");
  const double econs = std::abs(h.value(state.z) - h0);
  if (econs > 1e-6 * std::max(1.0, std::abs(h0)))
    throw OrbitNotClosed("integrate_monodromy: energy drifted along orbit");
  return SymplecticPath::from_samples(std::move(times), std::move(samples));
}

SymplecticPath origin_shift_monodromy(const HamiltonianSpec &h,
                                      const PeriodicOrbit &orbit,
                                      double t_shift, int steps, int reps) {
  PeriodicOrbit shifted = orbit;
  if (t_shift != 0.0)
    shifted.z0 = flow_point(h, orbit.z0, t_shift, steps);
  return integrate_monodromy(h, shifted, steps, reps);
}

Vec flow_point(const HamiltonianSpec &h, const Vec &z0, double t, int steps) {
  FlowState state{z0, Mat::Identity(z0.size(), z0.size())};
  const double dt = t / steps;
  for (int k = 0; k < steps; ++k) state = rk4_step(h, state, dt);
  return state.z;
}

}  // namespace sympindex
