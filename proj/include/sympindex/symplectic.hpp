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

#include <Eigen/Dense>
#include <complex>

#include "sympindex/errors.hpp"

namespace sympindex {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Tolerances used throughout.  Every quantity of interest is an integer or
// half-integer recovered from O(1) floats at desk scale (n <= 4), which
// leaves several orders of magnitude of headroom.
namespace tol {
inline constexpr double symplectic = 1e-8;    // S^T J S = J, relative
inline constexpr double eigen_zero = 1e-8;    // inertia zero band, relative
inline constexpr double branch_cut = 1e-6;    // radians from the -1 cut
inline constexpr double rank = 1e-8;          // singular value cutoff, relative
inline constexpr double integrality = 1e-6;   // residual for integer recovery
}  // namespace tol

/// Block order is (x, p): J maps (x, p) to (p, -x).
Mat standard_J(int dof);

/// sigma(z, z') = <Jz, z'>, the bilinear form preserved by Sp(n).
double symplectic_form(const Vec &z, const Vec &zp);

/// Max-norm residual of S^T J S - J, normalised by max(1, |S|^2).
double symplectic_residual(const Mat &s);

bool is_symplectic(const Mat &s, double tolerance = tol::symplectic);

/// A real symmetric matrix; symmetrised on construction, construction fails
/// if the asymmetry exceeds the tolerance.
class SymmetricForm {
 public:
  explicit SymmetricForm(const Mat &a, double tolerance = tol::symplectic);

  const Mat &matrix() const { return m_; }
  int size() const { return static_cast<int>(m_.rows()); }

 private:
  Mat m_;
};

/// Eigenvalue counts of a symmetric form, split at +/- eps.
struct InertiaTriple {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int signature() const { return n_plus - n_minus; }
  int size() const { return n_plus + n_zero + n_minus; }
  bool operator==(const InertiaTriple &) const = default;
};

/// Counts eigenvalues above eps, inside [-eps, eps] and below -eps, where
/// eps = eps_rel * max(1, largest |eigenvalue|).
InertiaTriple inertia(const Mat &a, double eps_rel = tol::eigen_zero);
InertiaTriple inertia(const SymmetricForm &a, double eps_rel = tol::eigen_zero);

/// Element of Sp(n) with the symplectic relation checked at construction.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Mat entries, double tolerance = tol::symplectic);

  int dof() const { return dof_; }
  const Mat &matrix() const { return m_; }

 private:
  int dof_;
  Mat m_;
};

/// Complex n x n matrix with U* U = I checked at construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(CMat entries, double tolerance = tol::symplectic);

  int size() const { return static_cast<int>(m_.rows()); }
  const CMat &matrix() const { return m_; }

 private:
  CMat m_;
};

// The unitary group embeds in Sp(n) as [[A, -B], [B, A]] <-> A + iB, matching
// the identification (x, p) <-> x + ip.  A rotation by chi in one degree of
// freedom maps to e^{-i chi}.
CMat unitary_part_complex(const Mat &u_embedded);
Mat embed_unitary(const CMat &u);

/// Orthogonal polar factor of S, computed through the symmetric square root
/// of S S^T, returned as its complex image A + iB.
CMat polar_unitary(const Mat &s);

/// rho(S) = det of the complex polar factor; lies on the unit circle.
Complex rho(const Mat &s);

/// Tr Log U with the principal branch (eigen-angles in (-pi, pi)).
/// Throws BranchCut if an eigenvalue sits within eps_branch of -1.
Complex unitary_log_trace(const CMat &u, double eps_branch = tol::branch_cut);

/// Principal argument folded into (-pi, pi].
double wrap_angle(double theta);

}  // namespace sympindex
