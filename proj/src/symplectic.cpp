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

#include "sympindex/symplectic.hpp"

#include <cmath>
#include <sstream>

namespace sympindex {

Mat standard_J(int dof) {
  if (dof < 1) throw IndexError("standard_J: dof must be positive");
  Mat j = Mat::Zero(2 * dof, 2 * dof);
  j.topRightCorner(dof, dof) = Mat::Identity(dof, dof);
  j.bottomLeftCorner(dof, dof) = -Mat::Identity(dof, dof);
  return j;
}

double symplectic_form(const Vec &z, const Vec &zp) {
  const int dof = static_cast<int>(z.size()) / 2;
  // <Jz, z'> = <p, x'> - <x, p'>
  return z.tail(dof).dot(zp.head(dof)) - z.head(dof).dot(zp.tail(dof));
}

double symplectic_residual(const Mat &s) {
  const int dof = static_cast<int>(s.rows()) / 2;
  const Mat j = standard_J(dof);
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  return (s.transpose() * j * s - j).cwiseAbs().maxCoeff() / (scale * scale);
}

bool is_symplectic(const Mat &s, double tolerance) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) return false;
  return symplectic_residual(s) <= tolerance;
}

SymmetricForm::SymmetricForm(const Mat &a, double tolerance) {
  if (a.rows() != a.cols())
    throw IndexError("SymmetricForm: matrix is not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff() / scale;
  if (asym > tolerance) {
    std::ostringstream msg;
    msg << "SymmetricForm: asymmetry " << asym << " exceeds " << tolerance;
    throw IndexError(msg.str());
  }
  m_ = 0.5 * (a + a.transpose());
}

InertiaTriple inertia(const Mat &a, double eps_rel) {
  const Mat sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw IndexError("inertia: eigensolver failed");
  const Vec ev = es.eigenvalues();
  const double scale = ev.size() == 0 ? 0.0 : ev.cwiseAbs().maxCoeff();
  const double eps = eps_rel * std::max(1.0, scale);
  InertiaTriple t;
  for (int i = 0; i < ev.size(); ++i) {
    if (ev[i] > eps)
      ++t.n_plus;
    else if (ev[i] < -eps)
      ++t.n_minus;
    else
      ++t.n_zero;
  }
  return t;
}

InertiaTriple inertia(const SymmetricForm &a, double eps_rel) {
  return inertia(a.matrix(), eps_rel);
}

SymplecticMatrix::SymplecticMatrix(Mat entries, double tolerance)
    : dof_(static_cast<int>(entries.rows()) / 2), m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0 || m_.rows() == 0)
    throw NotSymplectic("SymplecticMatrix: dimensions are not 2n x 2n");
  const double res = symplectic_residual(m_);
  if (res > tolerance) {
    std::ostringstream msg;
    msg << "SymplecticMatrix: |S^T J S - J| = " << res << " exceeds "
        << tolerance;
    throw NotSymplectic(msg.str());
  }
  // det S = 1 is implied by S^T J S = J together with connectivity; a cheap
  // determinant check catches corrupted input early.
  const double det = m_.partialPivLu().determinant();
  if (std::abs(det - 1.0) > 1e-6 * std::max(1.0, std::abs(det)))
    throw NotSymplectic("SymplecticMatrix: det S deviates from 1");
}

UnitaryMatrix::UnitaryMatrix(CMat entries, double tolerance)
    : m_(std::move(entries)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw IndexError("UnitaryMatrix: matrix is not square");
  const CMat gram = m_.adjoint() * m_;
  const double res =
      (gram - CMat::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
  if (res > tolerance) {
    std::ostringstream msg;
    msg << "UnitaryMatrix: |U*U - I| = " << res << " exceeds " << tolerance;
    throw IndexError(msg.str());
  }
}

CMat unitary_part_complex(const Mat &u_embedded) {
  const int dof = static_cast<int>(u_embedded.rows()) / 2;
  const Mat a = u_embedded.topLeftCorner(dof, dof);
  const Mat b = u_embedded.bottomLeftCorner(dof, dof);
  const Mat minus_b = u_embedded.topRightCorner(dof, dof);
  const Mat a2 = u_embedded.bottomRightCorner(dof, dof);
  const double blockres = std::max((minus_b + b).cwiseAbs().maxCoeff(),
                                   (a2 - a).cwiseAbs().maxCoeff());
  if (blockres > 1e-6)
    throw PolarFailure(
        "unitary_part_complex: matrix is not in U(n) block form");
  return a.cast<Complex>() + Complex(0.0, 1.0) * b.cast<Complex>();
}

Mat embed_unitary(const CMat &u) {
  const int dof = static_cast<int>(u.rows());
  Mat out(2 * dof, 2 * dof);
  out.topLeftCorner(dof, dof) = u.real();
  out.topRightCorner(dof, dof) = -u.imag();
  out.bottomLeftCorner(dof, dof) = u.imag();
  out.bottomRightCorner(dof, dof) = u.real();
  return out;
}

CMat polar_unitary(const Mat &s) {
  if (!is_symplectic(s))
    throw NotSymplectic("polar_unitary: input is not symplectic");
  // U = (S S^T)^{-1/2} S through an eigendecomposition of the SPD factor.
  Eigen::SelfAdjointEigenSolver<Mat> es(s * s.transpose());
  if (es.info() != Eigen::Success)
    throw PolarFailure("polar_unitary: eigensolver failed");
  const Vec ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0)
    throw PolarFailure("polar_unitary: S S^T has a non-positive eigenvalue");
  const Vec inv_sqrt = ev.cwiseSqrt().cwiseInverse();
  const Mat u = es.eigenvectors() * inv_sqrt.asDiagonal() *
                es.eigenvectors().transpose() * s;
  const int n2 = static_cast<int>(s.rows());
  const double orth = (u * u.transpose() - Mat::Identity(n2, n2))
                          .cwiseAbs()
                          .maxCoeff();
  if (orth > 1e-7 || !is_symplectic(u, 1e-7))
    throw PolarFailure("polar_unitary: polar factor left Sp(n) or O(2n)");
  return unitary_part_complex(u);
}

Complex rho(const Mat &s) {
  const CMat u = polar_unitary(s);
  const Complex det = u.determinant();
  if (std::abs(std::abs(det) - 1.0) > 1e-7)
    throw PolarFailure("rho: determinant is not on the unit circle");
  return det / std::abs(det);
}

Complex unitary_log_trace(const CMat &u, double eps_branch) {
  Eigen::ComplexEigenSolver<CMat> es(u, false);
  if (es.info() != Eigen::Success)
    throw IndexError("unitary_log_trace: eigensolver failed");
  Complex sum(0.0, 0.0);
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const Complex lambda = es.eigenvalues()[i];
    if (std::abs(std::abs(lambda) - 1.0) > 1e-7)
      throw IndexError("unitary_log_trace: eigenvalue off the unit circle");
    const double angle = std::arg(lambda);
    if (M_PI - std::abs(angle) < eps_branch)
      throw BranchCut("unitary_log_trace: eigenvalue on the negative axis");
    sum += Complex(std::log(std::abs(lambda)), angle);
  }
  return sum;
}

double wrap_angle(double theta) {
  double w = std::remainder(theta, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  return w;
}

}  // namespace sympindex
