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

#include "sympindex/lagrangian.hpp"

#include <sstream>

namespace sympindex {

namespace {

/// Matrix of the pairing (a, b) -> sigma(B1 a, B2 b).
Mat form_matrix(const Mat &b1, const Mat &b2) {
  const int dof = static_cast<int>(b1.rows()) / 2;
  const Mat j = standard_J(dof);
  return b1.transpose() * j.transpose() * b2;
}

int rank_of(const Mat &m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const Vec sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = tol::rank * std::max(1.0, sv[0]);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

}  // namespace

LagrangianPlane::LagrangianPlane(int dof, Mat basis, CMat souriau)
    : dof_(dof), basis_(std::move(basis)), souriau_(std::move(souriau)) {}

LagrangianPlane LagrangianPlane::from_basis(const Mat &basis) {
  if (basis.rows() % 2 != 0 || basis.rows() == 0 ||
      basis.cols() * 2 != basis.rows())
    throw IndexError("LagrangianPlane: basis must be 2n x n");
  const int dof = static_cast<int>(basis.cols());

  Eigen::JacobiSVD<Mat> svd(basis, Eigen::ComputeThinU);
  const Vec sv = svd.singularValues();
  if (sv[sv.size() - 1] <= tol::rank * std::max(1.0, sv[0]))
    throw RankDeficient("LagrangianPlane: basis is rank deficient");

  const double scale = std::max(1.0, basis.cwiseAbs().maxCoeff());
  const double iso =
      form_matrix(basis, basis).cwiseAbs().maxCoeff() / (scale * scale);
  if (iso > tol::symplectic) {
    std::ostringstream msg;
    msg << "LagrangianPlane: sigma does not vanish on the span, residual "
        << iso;
    throw NotIsotropic(msg.str());
  }

  // Orthonormal real basis of an isotropic plane gives a unitary X + iP,
  // since X^T X + P^T P = I and X^T P = P^T X.
  const Mat ortho = svd.matrixU();
  const CMat m = ortho.topRows(dof).cast<Complex>() +
                 Complex(0.0, 1.0) * ortho.bottomRows(dof).cast<Complex>();
  const CMat gram = m.adjoint() * m;
  if ((gram - CMat::Identity(dof, dof)).cwiseAbs().maxCoeff() > 1e-7)
    throw NotIsotropic("LagrangianPlane: complex frame failed unitarity");

  // l = u l_P with u = -iM, hence w = u u^T = -M M^T.
  CMat w = -(m * m.transpose());
  w = 0.5 * (w + w.transpose()).eval();
  return LagrangianPlane(dof, ortho, std::move(w));
}

LagrangianPlane LagrangianPlane::horizontal(int dof) {
  Mat b = Mat::Zero(2 * dof, dof);
  b.topRows(dof) = Mat::Identity(dof, dof);
  return from_basis(b);
}

LagrangianPlane LagrangianPlane::vertical(int dof) {
  Mat b = Mat::Zero(2 * dof, dof);
  b.bottomRows(dof) = Mat::Identity(dof, dof);
  return from_basis(b);
}

LagrangianPlane LagrangianPlane::from_unitary(const CMat &u) {
  UnitaryMatrix checked(u);
  const int dof = static_cast<int>(u.rows());
  // Columns u (i e_j) = -Im(u e_j) + i Re(u e_j).
  Mat b(2 * dof, dof);
  b.topRows(dof) = -u.imag();
  b.bottomRows(dof) = u.real();
  return from_basis(b);
}

LagrangianPlane LagrangianPlane::graph_of(const Mat &a) {
  const int dof = static_cast<int>(a.rows());
  Mat b(2 * dof, dof);
  b.topRows(dof) = Mat::Identity(dof, dof);
  b.bottomRows(dof) = a;
  return from_basis(b);
}

LagrangianPlane LagrangianPlane::apply(const Mat &s) const {
  return from_basis(s * basis_);
}

int intersection_dim(const LagrangianPlane &l, const LagrangianPlane &lp) {
  if (l.dof() != lp.dof())
    throw IndexError("intersection_dim: dimension mismatch");
  Mat joint(2 * l.dof(), 2 * l.dof());
  joint << l.basis(), lp.basis();
  return 2 * l.dof() - rank_of(joint);
}

int wall_kashiwara(const LagrangianPlane &l, const LagrangianPlane &lp,
                   const LagrangianPlane &lpp) {
  const int n = l.dof();
  if (lp.dof() != n || lpp.dof() != n)
    throw IndexError("wall_kashiwara: dimension mismatch");
  const Mat c1 = form_matrix(l.basis(), lp.basis());
  const Mat c2 = form_matrix(lp.basis(), lpp.basis());
  const Mat c3 = form_matrix(lpp.basis(), l.basis());
  Mat g = Mat::Zero(3 * n, 3 * n);
  g.block(0, n, n, n) = 0.5 * c1;
  g.block(n, 0, n, n) = 0.5 * c1.transpose();
  g.block(n, 2 * n, n, n) = 0.5 * c2;
  g.block(2 * n, n, n, n) = 0.5 * c2.transpose();
  g.block(2 * n, 0, n, n) = 0.5 * c3;
  g.block(0, 2 * n, n, n) = 0.5 * c3.transpose();
  return inertia(g).signature();
}

int wall_kashiwara_transversal(const LagrangianPlane &l,
                               const LagrangianPlane &lp,
                               const LagrangianPlane &lpp) {
  const int n = l.dof();
  if (lp.dof() != n || lpp.dof() != n)
    throw IndexError("wall_kashiwara_transversal: dimension mismatch");
  if (intersection_dim(l, lpp) != 0)
    throw NotTransversal("wall_kashiwara_transversal: l and l'' intersect");
  Mat t(2 * n, 2 * n);
  t << l.basis(), lpp.basis();
  // Projection onto l along l'': z = B a + B'' b -> B a.
  Mat selector = Mat::Zero(2 * n, 2 * n);
  selector.topLeftCorner(n, n) = Mat::Identity(n, n);
  const Mat projector = t * selector * t.inverse();
  const Mat projected = projector * lp.basis();
  const Mat f = form_matrix(projected, lp.basis());
  return inertia(0.5 * (f + f.transpose())).signature();
}

int inert_triple(const LagrangianPlane &l, const LagrangianPlane &lp,
                 const LagrangianPlane &lpp) {
  const int n = l.dof();
  const int tau = wall_kashiwara(l, lp, lpp);
  const int sum = tau + n + intersection_dim(l, lp) -
                  intersection_dim(lp, lpp) + intersection_dim(lpp, l);
  if (sum % 2 != 0)
    throw IntegralityViolation(
        "inert_triple: half-sum is not an integer, tau parity is broken");
  return sum / 2;
}

Mat direct_sum_embedding_first(int dof1, int dof2) {
  const int n = dof1 + dof2;
  Mat e = Mat::Zero(2 * n, 2 * dof1);
  e.block(0, 0, dof1, dof1) = Mat::Identity(dof1, dof1);
  e.block(n, dof1, dof1, dof1) = Mat::Identity(dof1, dof1);
  return e;
}

Mat direct_sum_embedding_second(int dof1, int dof2) {
  const int n = dof1 + dof2;
  Mat e = Mat::Zero(2 * n, 2 * dof2);
  e.block(dof1, 0, dof2, dof2) = Mat::Identity(dof2, dof2);
  e.block(n + dof1, dof2, dof2, dof2) = Mat::Identity(dof2, dof2);
  return e;
}

LagrangianPlane direct_sum_plane(const LagrangianPlane &l1,
                                 const LagrangianPlane &l2) {
  const Mat e1 = direct_sum_embedding_first(l1.dof(), l2.dof());
  const Mat e2 = direct_sum_embedding_second(l1.dof(), l2.dof());
  Mat b(2 * (l1.dof() + l2.dof()), l1.dof() + l2.dof());
  b << e1 * l1.basis(), e2 * l2.basis();
  return LagrangianPlane::from_basis(b);
}

DoubledSymplecticSpace::DoubledSymplecticSpace(int dof) : dof_(dof) {
  if (dof < 1) throw IndexError("DoubledSymplecticSpace: dof must be positive");
  const int n = dof;
  phi_ = Mat::Zero(4 * n, 4 * n);
  // (x1, p1, x2, p2) -> (x1, p2; p1, x2): position block (x1, p2),
  // momentum block (p1, x2).
  phi_.block(0, 0, n, n) = Mat::Identity(n, n);
  phi_.block(n, 3 * n, n, n) = Mat::Identity(n, n);
  phi_.block(2 * n, n, n, n) = Mat::Identity(n, n);
  phi_.block(3 * n, 2 * n, n, n) = Mat::Identity(n, n);

  j_minus_ = Mat::Zero(4 * n, 4 * n);
  j_minus_.topLeftCorner(2 * n, 2 * n) = standard_J(n);
  j_minus_.bottomRightCorner(2 * n, 2 * n) = -standard_J(n);

  const Mat j_std = standard_J(2 * n);
  const double res =
      (phi_.transpose() * j_std * phi_ - j_minus_).cwiseAbs().maxCoeff();
  if (res > tol::symplectic)
    throw IndexError("DoubledSymplecticSpace: embedding is not symplectic");
}

LagrangianPlane DoubledSymplecticSpace::graph_plane(const Mat &s) const {
  const int n2 = 2 * dof_;
  if (s.rows() != n2 || s.cols() != n2)
    throw IndexError("graph_plane: matrix size mismatch");
  Mat stacked(4 * dof_, n2);
  stacked.topRows(n2) = Mat::Identity(n2, n2);
  stacked.bottomRows(n2) = s;
  return LagrangianPlane::from_basis(phi_ * stacked);
}

LagrangianPlane DoubledSymplecticSpace::diagonal() const {
  return graph_plane(Mat::Identity(2 * dof_, 2 * dof_));
}

LagrangianPlane DoubledSymplecticSpace::product_plane(
    const LagrangianPlane &l1, const LagrangianPlane &l2) const {
  if (l1.dof() != dof_ || l2.dof() != dof_)
    throw IndexError("product_plane: dimension mismatch");
  Mat stacked = Mat::Zero(4 * dof_, 2 * dof_);
  stacked.block(0, 0, 2 * dof_, dof_) = l1.basis();
  stacked.block(2 * dof_, dof_, 2 * dof_, dof_) = l2.basis();
  return LagrangianPlane::from_basis(phi_ * stacked);
}

}  // namespace sympindex
