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

#include "sympindex/symplectic.hpp"

namespace sympindex {

// An n-plane in R^{2n} on which the symplectic form vanishes.  The stored
// basis is orthonormal; the Souriau coordinate w is the symmetric unitary
// matrix with l = u l_P and w = u u^T under (x, p) <-> x + ip.  It is
// basis-independent, so equality of planes can be read off from w.
class LagrangianPlane {
 public:
  /// Validates isotropy and rank, orthonormalises, caches w.
  static LagrangianPlane from_basis(const Mat &basis);

  /// l_X = R^n_x x 0 (w = -I).
  static LagrangianPlane horizontal(int dof);
  /// l_P = 0 x R^n_p (w = I).
  static LagrangianPlane vertical(int dof);
  /// l = u l_P for unitary u.
  static LagrangianPlane from_unitary(const CMat &u);
  /// {(x, Ax)} for symmetric A.
  static LagrangianPlane graph_of(const Mat &a);

  int dof() const { return dof_; }
  const Mat &basis() const { return basis_; }
  const CMat &souriau() const { return souriau_; }
  Complex souriau_det() const { return souriau_.determinant(); }

  /// Image S . l under a symplectic map.
  LagrangianPlane apply(const Mat &s) const;

 private:
  LagrangianPlane(int dof, Mat basis, CMat souriau);

  int dof_;
  Mat basis_;     // 2n x n, orthonormal columns
  CMat souriau_;  // n x n symmetric unitary
};

/// dim(l and l') = 2n - rank([B | B']), rank through singular values.
int intersection_dim(const LagrangianPlane &l, const LagrangianPlane &lp);

/// Wall-Kashiwara signature tau(l, l', l''): the signature of the quadratic
/// form Q(z, z', z'') = sigma(z, z') + sigma(z', z'') + sigma(z'', z) on the
/// direct sum of the three planes.
int wall_kashiwara(const LagrangianPlane &l, const LagrangianPlane &lp,
                   const LagrangianPlane &lpp);

/// Same value computed through the projection formula, available when
/// l and l'' are transversal: the signature of z' -> sigma(Pr z', z') on l'.
int wall_kashiwara_transversal(const LagrangianPlane &l,
                               const LagrangianPlane &lp,
                               const LagrangianPlane &lpp);

/// Index of inertia of the triple:
///   (tau + n + dim(l,l') - dim(l',l'') + dim(l'',l)) / 2.
int inert_triple(const LagrangianPlane &l, const LagrangianPlane &lp,
                 const LagrangianPlane &lpp);

/// Interleaves bases into the standard (x, p)-ordered space of n1+n2 dof.
LagrangianPlane direct_sum_plane(const LagrangianPlane &l1,
                                 const LagrangianPlane &l2);

/// Lift of a 2n-vector of one summand into the interleaved direct sum.
Mat direct_sum_embedding_first(int dof1, int dof2);
Mat direct_sum_embedding_second(int dof1, int dof2);

// ---------------------------------------------------------------------------
// Doubled symplectic space (R^{2n} + R^{2n}, sigma (-) sigma).
// ---------------------------------------------------------------------------

// The fixed isomorphism Phi = id (+) phi with phi(x, p) = (p, x), followed by
// the interleaving identification, carries sigma^- to the standard form on
// R^{4n}.  Vectors of the doubled space are stored as (z1; z2) stacks.
class DoubledSymplecticSpace {
 public:
  explicit DoubledSymplecticSpace(int dof);

  int dof() const { return dof_; }

  /// 4n x 4n matrix of Phi acting on (z1; z2) stacks.
  const Mat &embedding() const { return phi_; }

  /// Matrix of sigma^- on (z1; z2) stacks: diag(J, -J) transposed pairing.
  const Mat &j_minus() const { return j_minus_; }

  /// Phi({(z, Sz)}) as a Lagrangian plane of the standard 4n-space.
  LagrangianPlane graph_plane(const Mat &s) const;

  /// Phi(diagonal).
  LagrangianPlane diagonal() const;

  /// Phi(l1 (+) l2) for Lagrangian planes of the two factors.
  LagrangianPlane product_plane(const LagrangianPlane &l1,
                                const LagrangianPlane &l2) const;

 private:
  int dof_;
  Mat phi_;
  Mat j_minus_;
};

}  // namespace sympindex
