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

#include <optional>

#include "sympindex/maslov.hpp"

namespace sympindex {

// Partition of Sp(n) by the sign of det(S - I).
enum class SpClass { plus, minus, zero };

SpClass classify_endpoint(const Mat &s);

/// det(S - I) and the smallest singular value of S - I (degeneracy measure).
std::pair<double, double> det_s_minus_i(const Mat &s);

// --- symplectic Cayley transform ------------------------------------------

/// M_S = J (S + I)(S - I)^{-1} / 2; symmetric whenever S is symplectic.
/// Cross-checked against the equivalent form J/2 + J (S - I)^{-1}.
SymmetricForm cayley(const Mat &s);

/// (M_S + M_S')^{-1} computed as -(S' - I)(S S' - I)^{-1}(S - I) J.
Mat cayley_sum_inverse(const Mat &s, const Mat &sp);

// --- generating function of a free symplectic matrix -----------------------

struct GeneratingFunctionData {
  Mat p;    // D B^{-1}
  Mat l;    // B^{-1}
  Mat q;    // B^{-1} A
  Mat wxx;  // P + Q - L - L^T, Hessian of x -> W(x, x)
};

/// Requires det B != 0 (upper-right block).  Throws NotFree otherwise.
GeneratingFunctionData generating_function(const Mat &s);

/// Returns (det(S - I), (-1)^n det B det Wxx); the two agree for free S.
std::pair<double, double> det_factorization_check(const Mat &s);

/// Number of negative eigenvalues of Wxx (Morse index of concavity).
int concavity_index(const Mat &s);

// --- the extended index nu --------------------------------------------------

/// nu of the homotopy class of the path: half the ALM index, in the doubled
/// space, of the travelled graph lift against the fixed diagonal lift.
/// Defined for every endpoint, including det(S - I) = 0.
int nu(const SymplecticPath &path);

/// nu of the pointwise-inverted path (equals -nu(path)).
int nu_inverse_check(const SymplecticPath &path);

struct ProductDecomposition {
  int nu_product;        // nu of the pointwise product path
  int nu_first;          // nu of the first factor
  int nu_second;         // nu of the second factor
  int cayley_signature;  // sign(M_S + M_S'), always even here
  bool agrees;           // nu_product == nu_first + nu_second + signature/2

  int rhs() const { return nu_first + nu_second + cayley_signature / 2; }
};

/// Both sides of the product formula; requires det(S-I), det(S'-I) and
/// det(SS'-I) all nonzero.
ProductDecomposition nu_product(const SymplecticPath &a,
                                const SymplecticPath &b);

struct PowerResult {
  int value;             // nu of the r-fold pointwise power path
  int repetitions;
  bool closed_form_applicable;  // linear formula valid on this input
  std::optional<int> closed_form;  // r nu + (r-1)/2 sign M_S when applicable
  bool used_fallback;    // a degeneracy forced direct evaluation
};

// The linear repetition formula r nu + (r-1)/2 sign M_S is the product
// formula iterated, so it requires every partial power to stay nondegenerate
// and every partial Cayley sum M_{S^k} + M_S to keep the signature of M_S.
// Outside that domain (an elliptic block whose powers cross a full turn
// breaks it) the direct value is returned and the closed form marked
// inapplicable.
PowerResult nu_power(const SymplecticPath &path, int r);

/// nu through the concavity route: m_{l_P} - Inert Wxx, cross-checked against
/// (mu_{l_P} + sign Wxx)/2.  Requires a free, nondegenerate endpoint.
int nu_via_concavity(const SymplecticPath &path);

/// Independent winding-number evaluation of the classical index: extends the
/// path inside its det(S-I)-sign component to the basepoint -I or
/// diag(2,-1,...,-1,1/2,-1,...,-1) and returns the degree of rho^2 over the
/// doubled parameter range.  Requires a nondegenerate endpoint.
int cz_winding_oracle(const SymplecticPath &path);

/// The in-component connector path used by the oracle, exposed for tests:
/// c(0) = S, c(1) = the component basepoint, det(c(s) - I) keeps its sign.
std::function<Mat(double)> component_connector(const Mat &s);

}  // namespace sympindex
