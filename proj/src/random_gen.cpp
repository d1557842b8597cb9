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

#include "sympindex/random_gen.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace sympindex {

Mat random_matrix(Rng &rng, int rows, int cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Mat random_symmetric(Rng &rng, int size) {
  const Mat m = random_matrix(rng, size, size);
  return 0.5 * (m + m.transpose());
}

Mat random_sp_algebra(Rng &rng, int dof, double scale) {
  return scale * standard_J(dof) * random_symmetric(rng, 2 * dof);
}

Mat random_symplectic(Rng &rng, int dof) {
  const int n = dof;
  Mat s = Mat::Identity(2 * n, 2 * n);
  std::uniform_real_distribution<double> spread(0.7, 1.8);
  for (int round = 0; round < 2; ++round) {
    // Lower shear [[I, 0], [C, I]], scaling [[L, 0], [0, L^{-T}]] and an
    // upper shear [[I, D], [0, I]] generate Sp(n).
    Mat shear_low = Mat::Identity(2 * n, 2 * n);
    shear_low.bottomLeftCorner(n, n) = 0.7 * random_symmetric(rng, n);
    Mat scaling = Mat::Zero(2 * n, 2 * n);
    Mat l = 0.15 * random_matrix(rng, n, n);
    for (int i = 0; i < n; ++i) l(i, i) += spread(rng);  // safely invertible
    scaling.topLeftCorner(n, n) = l;
    scaling.bottomRightCorner(n, n) = l.inverse().transpose();
    Mat shear_up = Mat::Identity(2 * n, 2 * n);
    shear_up.topRightCorner(n, n) = 0.7 * random_symmetric(rng, n);
    s = s * shear_low * scaling * shear_up;
  }
  return s;
}

LagrangianPlane random_lagrangian(Rng &rng, int dof) {
  return LagrangianPlane::vertical(dof).apply(random_symplectic(rng, dof));
}

SymplecticPath random_path(Rng &rng, int dof, int loops) {
  const Mat x1 = random_sp_algebra(rng, dof, 1.2);
  const Mat x2 = random_sp_algebra(rng, dof, 0.8);
  auto segment = [x1, x2](double t) {
    return ((t * x1).exp() * (t * x2).exp()).eval();
  };
  if (loops == 0)
    return SymplecticPath::from_generator(dof, segment, 49);
  SymplecticPath base = SymplecticPath::from_generator(dof, segment, 49);
  return pointwise_product(alpha_power(loops, dof), base);
}

SymplecticPath random_nondegenerate_path(Rng &rng, int dof, bool require_free,
                                         int loops) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    SymplecticPath p = random_path(rng, dof, loops);
    const Mat &s = p.endpoint();
    const Mat d = s - Mat::Identity(2 * dof, 2 * dof);
    Eigen::JacobiSVD<Mat> svd(d);
    if (svd.singularValues().minCoeff() <
        1e-3 * std::max(1.0, svd.singularValues().maxCoeff()))
      continue;
    if (require_free) {
      Eigen::JacobiSVD<Mat> bsvd(s.topRightCorner(dof, dof));
      if (bsvd.singularValues().minCoeff() <
          1e-3 * std::max(1.0, bsvd.singularValues().maxCoeff()))
        continue;
    }
    return p;
  }
  throw IndexError("random_nondegenerate_path: rejection sampling exhausted");
}

}  // namespace sympindex
