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

#include <random>

#include "sympindex/lagrangian.hpp"
#include "sympindex/path.hpp"

namespace sympindex {

using Rng = std::mt19937_64;

/// Entries uniform in [-1, 1].
Mat random_matrix(Rng &rng, int rows, int cols);

/// Random symmetric matrix with entries O(1).
Mat random_symmetric(Rng &rng, int size);

/// Element of sp(n): J times a symmetric matrix.
Mat random_sp_algebra(Rng &rng, int dof, double scale = 1.0);

/// Product of shear, scaling and rotation factors; well-conditioned.
Mat random_symplectic(Rng &rng, int dof);

/// Random plane S . l_P for random symplectic S.
LagrangianPlane random_lagrangian(Rng &rng, int dof);

/// Smooth path t -> exp(t X1) exp(t X2) [alpha^r prepended when loops != 0].
SymplecticPath random_path(Rng &rng, int dof, int loops = 0);

/// Random path whose endpoint avoids det(S - I) = 0 (and optionally det B =
/// 0) by a comfortable margin; regenerates until the margins hold.
SymplecticPath random_nondegenerate_path(Rng &rng, int dof,
                                         bool require_free = false,
                                         int loops = 0);

}  // namespace sympindex
