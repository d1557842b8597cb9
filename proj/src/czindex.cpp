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

#include "sympindex/czindex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sympindex {

namespace {

int round_checked(double value, const char *what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > tol::integrality) {
    std::ostringstream msg;
    msg << what << ": residual " << std::abs(value - rounded)
        << " from nearest integer";
    throw IntegralityViolation(msg.str());
  }
  return static_cast<int>(rounded);
}

void require_nondegenerate(const Mat &s, const char *what) {
  if (classify_endpoint(s) == SpClass::zero) {
    std::ostringstream msg;
    msg << what << ": det(S - I) vanishes";
    throw DegenerateEndpoint(msg.str());
  }
}

}  // namespace

std::pair<double, double> det_s_minus_i(const Mat &s) {
  const Mat d = s - Mat::Identity(s.rows(), s.cols());
  Eigen::JacobiSVD<Mat> svd(d);
  const double det = d.partialPivLu().determinant();
  return {det, svd.singularValues().minCoeff()};
}

SpClass classify_endpoint(const Mat &s) {
  const Mat d = s - Mat::Identity(s.rows(), s.cols());
  Eigen::JacobiSVD<Mat> svd(d);
  const Vec sv = svd.singularValues();
  if (sv.maxCoeff() <= tol::rank || sv.minCoeff() <= tol::rank * std::max(1.0, sv.maxCoeff()))
    return SpClass::zero;
  const double det = d.partialPivLu().determinant();
  return det > 0.0 ? SpClass::plus : SpClass::minus;
}

SymmetricForm cayley(const Mat &s) {
  require_nondegenerate(s, "cayley");
  const int dof = static_cast<int>(s.rows()) / 2;
  const Mat j = standard_J(dof);
  const Mat id = Mat::Identity(s.rows(), s.cols());
  const Mat inv = (s - id).inverse();
  const Mat m = 0.5 * j * (s + id) * inv;
  const Mat alt = 0.5 * j + j * inv;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - alt).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw IndexError("cayley: the two defining expressions disagree");
  return SymmetricForm(m, 1e-8);
}

Mat cayley_sum_inverse(const Mat &s, const Mat &sp) {
  require_nondegenerate(s, "cayley_sum_inverse");
  require_nondegenerate(sp, "cayley_sum_inverse");
  require_nondegenerate(s * sp, "cayley_sum_inverse");
  const int dof = static_cast<int>(s.rows()) / 2;
  const Mat j = standard_J(dof);
  const Mat id = Mat::Identity(s.rows(), s.cols());
  return -(sp - id) * (s * sp - id).inverse() * (s - id) * j;
}

GeneratingFunctionData generating_function(const Mat &s) {
  if (!is_symplectic(s))
    throw NotSymplectic("generating_function: input is not symplectic");
  const int n = static_cast<int>(s.rows()) / 2;
  const Mat a = s.topLeftCorner(n, n);
  const Mat b = s.topRightCorner(n, n);
  const Mat c = s.bottomLeftCorner(n, n);
  const Mat d = s.bottomRightCorner(n, n);
  Eigen::JacobiSVD<Mat> svd(b);
  const Vec sv = svd.singularValues();
  if (sv.minCoeff() <= tol::rank * std::max(1.0, sv.maxCoeff()))
    throw NotFree("generating_function: upper-right block is singular");
  const Mat l = b.inverse();
  GeneratingFunctionData gf;
  gf.p = d * l;
  gf.l = l;
  gf.q = l * a;
  const double scale = std::max(1.0, gf.p.cwiseAbs().maxCoeff());
  if ((gf.p - gf.p.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale ||
      (gf.q - gf.q.transpose()).cwiseAbs().maxCoeff() >
          1e-8 * std::max(1.0, gf.q.cwiseAbs().maxCoeff()))
    throw IndexError("generating_function: P or Q failed symmetry");
  gf.p = 0.5 * (gf.p + gf.p.transpose()).eval();
  gf.q = 0.5 * (gf.q + gf.q.transpose()).eval();
  gf.wxx = gf.p + gf.q - gf.l - gf.l.transpose();

  // Rebuild S from (P, L, Q): A = L^{-1}Q, B = L^{-1}, D = P L^{-1},
  // C = P L^{-1} Q - L^T.
  const Mat linv = gf.l.inverse();
  Mat rebuilt(2 * n, 2 * n);
  rebuilt.topLeftCorner(n, n) = linv * gf.q;
  rebuilt.topRightCorner(n, n) = linv;
  rebuilt.bottomLeftCorner(n, n) = gf.p * linv * gf.q - gf.l.transpose();
  rebuilt.bottomRightCorner(n, n) = gf.p * linv;
  (void)c;
  const double sscale = std::max(1.0, s.cwiseAbs().maxCoeff());
  if ((rebuilt - s).cwiseAbs().maxCoeff() > 1e-8 * sscale)
    throw IndexError("generating_function: reconstruction mismatch");
  return gf;
}

std::pair<double, double> det_factorization_check(const Mat &s) {
  const GeneratingFunctionData gf = generating_function(s);
  const int n = static_cast<int>(s.rows()) / 2;
  const Mat b = s.topRightCorner(n, n);
  const double lhs =
      (s - Mat::Identity(s.rows(), s.cols())).partialPivLu().determinant();
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double rhs = sign * b.partialPivLu().determinant() *
                     gf.wxx.partialPivLu().determinant();
  return {lhs, rhs};
}

int concavity_index(const Mat &s) {
  require_nondegenerate(s, "concavity_index");
  const GeneratingFunctionData gf = generating_function(s);
  const InertiaTriple t = inertia(gf.wxx);
  if (t.n_zero > 0)
    throw DegenerateEndpoint(
        "concavity_index: Wxx has a near-zero eigenvalue");
  return t.n_minus;
}

int nu(const SymplecticPath &path) {
  const int n = path.dof();
  const DoubledSymplecticSpace doubled(n);
  const LagrangianPlane delta = doubled.diagonal();
  const LagrangianLift base = principal_lift(delta);
  auto moving = [&doubled, &path](double t) {
    return doubled.graph_plane(path.at(t));
  };
  auto [end, lift] =
      lift_lagrangian_path(moving, base, path.times(), path.refinable());
  (void)lift;
  const int fixed_dim = intersection_dim(end.plane, delta);
  const int mu = alm(base, end);
  if (((mu - fixed_dim) % 2 + 2) % 2 != 0)
    throw IntegralityViolation(
        "nu: doubled ALM index parity disagrees with dim Ker(S - I)");
  if (mu % 2 != 0)
    throw IntegralityViolation(
        "nu: half-integer value, the endpoint fixed space has odd dimension");
  return mu / 2;
}

int nu_inverse_check(const SymplecticPath &path) {
  return nu(pointwise_inverse(path));
}

ProductDecomposition nu_product(const SymplecticPath &a,
                                const SymplecticPath &b) {
  const Mat &s = a.endpoint();
  const Mat &sp = b.endpoint();
  require_nondegenerate(s, "nu_product");
  require_nondegenerate(sp, "nu_product");
  require_nondegenerate(s * sp, "nu_product");
  const Mat sum = cayley(s).matrix() + cayley(sp).matrix();
  const InertiaTriple t = inertia(sum);
  if (t.n_zero > 0)
    throw DegenerateEndpoint("nu_product: M_S + M_S' is singular");
  ProductDecomposition d;
  d.nu_first = nu(a);
  d.nu_second = nu(b);
  d.cayley_signature = t.signature();
  if (d.cayley_signature % 2 != 0)
    throw IntegralityViolation("nu_product: odd Cayley signature");
  d.nu_product = nu(pointwise_product(a, b));
  d.agrees = (d.nu_product == d.rhs());
  return d;
}

PowerResult nu_power(const SymplecticPath &path, int r) {
  if (r < 1) throw IndexError("nu_power: r must be >= 1");
  PowerResult res;
  res.repetitions = r;
  res.value = nu(pointwise_power(path, r));
  res.closed_form_applicable = false;
  res.used_fallback = false;
  if (r == 1) {
    res.closed_form = res.value;
    res.closed_form_applicable = true;
    return res;
  }

  const Mat &s = path.endpoint();
  std::vector<Mat> powers{s};
  for (int k = 2; k <= r; ++k) powers.push_back(powers.back() * s);
  for (const Mat &p : powers) {
    if (classify_endpoint(p) == SpClass::zero) {
      res.used_fallback = true;
      return res;
    }
  }

  // The linear formula is the product formula applied r-1 times, so it needs
  // sign(M_{S^k} + M_S) = sign(M_S) at every stage.
  const Mat m1 = cayley(s).matrix();
  const InertiaTriple base = inertia(2.0 * m1);
  if (base.n_zero > 0) {
    res.used_fallback = true;
    return res;
  }
  for (int k = 1; k + 1 <= r; ++k) {
    const InertiaTriple t = inertia(cayley(powers[k - 1]).matrix() + m1);
    if (t.n_zero > 0 || t.signature() != base.signature()) return res;
  }
  const int sig = base.signature();
  if (((r - 1) * sig) % 2 != 0) return res;
  res.closed_form = r * nu(path) + ((r - 1) * sig) / 2;
  res.closed_form_applicable = true;
  if (*res.closed_form != res.value)
    throw IntegralityViolation(
        "nu_power: linear formula disagrees with the direct value on its "
        "domain of validity");
  return res;
}

int nu_via_concavity(const SymplecticPath &path) {
  const Mat &s = path.endpoint();
  require_nondegenerate(s, "nu_via_concavity");
  const GeneratingFunctionData gf = generating_function(s);
  const InertiaTriple t = inertia(gf.wxx);
  if (t.n_zero > 0)
    throw DegenerateEndpoint("nu_via_concavity: Wxx is singular");
  const int n = path.dof();
  const LagrangianPlane vertical = LagrangianPlane::vertical(n);
  const int mu = relative_maslov(path, vertical);
  // Free endpoint: S l_P and l_P are transversal, so m = (mu + n)/2.
  if ((mu + n) % 2 != 0)
    throw IntegralityViolation("nu_via_concavity: reduced index parity");
  const int reduced = (mu + n) / 2;
  const int first = reduced - t.n_minus;
  if ((mu + t.signature()) % 2 != 0)
    throw IntegralityViolation("nu_via_concavity: signature parity");
  const int second = (mu + t.signature()) / 2;
  if (first != second)
    throw IntegralityViolation(
        "nu_via_concavity: the two formula variants disagree");
  return first;
}

// ---------------------------------------------------------------------------
// Winding-number oracle: in-component connector construction.
// ---------------------------------------------------------------------------

namespace {

Mat rot2(double a) {
  Mat r(2, 2);
  r << std::cos(a), std::sin(a), -std::sin(a), std::cos(a);
  return r;
}

Mat hyp2(double lambda) {
  Mat h = Mat::Zero(2, 2);
  h(0, 0) = lambda;
  h(1, 1) = 1.0 / lambda;
  return h;
}

/// [[A, 0], [0, (A^T)^{-1}]] with A = r rot(phi), in (x1, x2, p1, p2) order.
Mat lox4(double r, double phi) {
  Mat m = Mat::Zero(4, 4);
  m.topLeftCorner(2, 2) = r * rot2(phi);
  m.bottomRightCorner(2, 2) = (1.0 / r) * rot2(phi);
  return m;
}

struct Block {
  enum class Type { elliptic, pos_hyperbolic, neg_hyperbolic, loxodromic };
  Type type;
  int slot = 0;
  int width = 1;
  double angle = 0.0;   // elliptic: signed angle; loxodromic: phi in (0, pi)
  double lambda = 0.0;  // hyperbolic eigenvalue; loxodromic: modulus > 1
  bool annihilate_with_next = false;

  std::vector<Vec> e;  // position-side basis vectors
  std::vector<Vec> f;  // momentum-side duals, sigma(e_i, f_j) = delta_ij
};

struct ConnectorData {
  int dof = 0;
  int det_sign = 0;
  Mat basis;         // adapted symplectic basis R
  Mat basis_inv;
  std::vector<Block> blocks;
  // polar data of R for the de-conjugation stage
  CMat u_vectors;
  CMat u_vectors_inv;
  CVec u_angles;
  Mat p_vectors;
  Vec p_logs;

  Mat blocks_value(double stage_b, double stage_c) const;
  Mat conjugator(double sigma) const;
};

Vec realize(const CVec &v, const char *what) {
  int imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const CVec phased = v * std::polar(1.0, -std::arg(v[imax]));
  if (phased.imag().cwiseAbs().maxCoeff() > 1e-6 * phased.norm())
    throw PathExtensionFailed(std::string(what) +
                              ": eigenvector of a real eigenvalue is not "
                              "realisable");
  Vec out = phased.real();
  return out / out.norm();
}

double sigma_of(const Vec &a, const Vec &b) { return symplectic_form(a, b); }

ConnectorData analyze_endpoint(const Mat &s) {
  const int n2 = static_cast<int>(s.rows());
  const int n = n2 / 2;
  ConnectorData data;
  data.dof = n;
  const auto [det, smin] = det_s_minus_i(s);
  if (smin <= tol::rank * std::max(1.0, s.cwiseAbs().maxCoeff()))
    throw DegenerateEndpoint("component_connector: endpoint is degenerate");
  data.det_sign = det > 0.0 ? 1 : -1;

  Eigen::EigenSolver<Mat> es(s);
  if (es.info() != Eigen::Success)
    throw PathExtensionFailed("component_connector: eigensolver failed");
  const CVec vals = es.eigenvalues();
  const CMat vecs = es.eigenvectors();

  const double ctol = 1e-6;
  std::vector<bool> used(n2, false);
  auto cluster_near = [&](Complex target) {
    std::vector<int> idx;
    for (int i = 0; i < n2; ++i)
      if (!used[i] &&
          std::abs(vals[i] - target) <= ctol * std::max(1.0, std::abs(target)))
        idx.push_back(i);
    return idx;
  };

  std::vector<Block> blocks;

  for (int i = 0; i < n2; ++i) {
    if (used[i]) continue;
    const Complex lambda = vals[i];
    const bool real = std::abs(lambda.imag()) <= 1e-8 * (1.0 + std::abs(lambda));
    const bool unit = std::abs(std::abs(lambda) - 1.0) <= 1e-8;
    if (real && std::abs(lambda.real() - 1.0) <= 1e-6)
      throw PathExtensionFailed("component_connector: eigenvalue 1 detected");

    if (real && unit) {
      // Eigenvalue -1: a symplectic eigenspace paired with itself.  Greedy
      // symplectic Gram-Schmidt splits it into -I2 blocks.
      auto idx = cluster_near(Complex(-1.0, 0.0));
      for (int j : idx) used[j] = true;
      std::vector<Vec> space;
      for (int j : idx) space.push_back(realize(vecs.col(j), "minus-one"));
      while (!space.empty()) {
        if (space.size() < 2)
          throw PathExtensionFailed(
              "component_connector: odd -1 eigenspace pairing");
        const Vec e = space.front();
        space.erase(space.begin());
        int best = 0;
        double bestval = 0.0;
        for (std::size_t k = 0; k < space.size(); ++k) {
          const double v = std::abs(sigma_of(e, space[k]));
          if (v > bestval) {
            bestval = v;
            best = static_cast<int>(k);
          }
        }
        if (bestval < 1e-8)
          throw PathExtensionFailed(
              "component_connector: degenerate pairing in -1 eigenspace");
        Vec f = space[best] / sigma_of(e, space[best]);
        space.erase(space.begin() + best);
        for (Vec &w : space)
          w = (w - sigma_of(w, f) * e + sigma_of(w, e) * f).eval();
        Block b;
        b.type = Block::Type::neg_hyperbolic;
        b.lambda = -1.0;
        b.e = {e};
        b.f = {f};
        blocks.push_back(std::move(b));
      }
      continue;
    }

    if (real) {
      const double lr = lambda.real();
      const double lam_big = std::abs(lr) > 1.0 ? lr : 1.0 / lr;
      auto big_idx = cluster_near(Complex(lam_big, 0.0));
      auto small_idx = cluster_near(Complex(1.0 / lam_big, 0.0));
      if (big_idx.size() != small_idx.size() || big_idx.empty())
        throw PathExtensionFailed(
            "component_connector: unmatched hyperbolic eigenvalue pair");
      for (int j : big_idx) used[j] = true;
      for (int j : small_idx) used[j] = true;
      const int m = static_cast<int>(big_idx.size());
      Mat vbig(n2, m), vsmall(n2, m);
      for (int k = 0; k < m; ++k) {
        vbig.col(k) = realize(vecs.col(big_idx[k]), "hyperbolic");
        vsmall.col(k) = realize(vecs.col(small_idx[k]), "hyperbolic");
      }
      // Biorthogonalise the lambda and 1/lambda eigenspaces.
      Mat gram(m, m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          gram(a, b) = sigma_of(vbig.col(a), vsmall.col(b));
      Eigen::JacobiSVD<Mat> svd(gram,
                                Eigen::ComputeFullU | Eigen::ComputeFullV);
      if (svd.singularValues().minCoeff() < 1e-8)
        throw PathExtensionFailed(
            "component_connector: hyperbolic pairing is degenerate");
      const Mat vb = vbig * svd.matrixU();
      const Mat vs = vsmall * svd.matrixV() *
                     svd.singularValues().cwiseInverse().asDiagonal();
      for (int k = 0; k < m; ++k) {
        Block b;
        b.type = lam_big > 0.0 ? Block::Type::pos_hyperbolic
                               : Block::Type::neg_hyperbolic;
        b.lambda = lam_big;
        b.e = {vb.col(k)};
        b.f = {vs.col(k)};
        blocks.push_back(std::move(b));
      }
      continue;
    }

    if (unit) {
      if (lambda.imag() < 0.0) continue;  // handled from the Im > 0 copy
      auto idx = cluster_near(lambda);
      auto conj_idx = cluster_near(std::conj(lambda));
      if (conj_idx.size() != idx.size())
        throw PathExtensionFailed(
            "component_connector: unmatched elliptic conjugates");
      for (int j : idx) used[j] = true;
      for (int j : conj_idx) used[j] = true;
      const int m = static_cast<int>(idx.size());
      CMat basis(n2, m);
      for (int k = 0; k < m; ++k) basis.col(k) = vecs.col(idx[k]);
      // Krein form K(v, v') = (i/2) sigma_C(v, conj v'); Hermitian.  Its
      // eigenvectors split the cluster into sigma-orthogonal elliptic planes.
      const Mat j_std = standard_J(n);
      CMat k_form(m, m);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          k_form(a, b) = Complex(0.0, 0.5) *
                         (basis.col(a).transpose() * j_std.transpose() *
                          basis.col(b).conjugate())(0, 0);
      Eigen::SelfAdjointEigenSolver<CMat> kes(k_form);
      const CMat split = basis * kes.eigenvectors();
      const double phi = std::arg(lambda);
      for (int k = 0; k < m; ++k) {
        const Vec a = split.col(k).real();
        const Vec b = split.col(k).imag();
        const double c = sigma_of(a, b);
        if (std::abs(c) < 1e-8)
          throw PathExtensionFailed(
              "component_connector: Krein-degenerate elliptic plane");
        Block blk;
        blk.type = Block::Type::elliptic;
        if (c > 0.0) {
          blk.angle = phi;
          blk.e = {a / std::sqrt(c)};
          blk.f = {b / std::sqrt(c)};
        } else {
          blk.angle = -phi;
          blk.e = {b / std::sqrt(-c)};
          blk.f = {a / std::sqrt(-c)};
        }
        blocks.push_back(std::move(blk));
      }
      continue;
    }

    // Loxodromic quadruple {lambda, conj, 1/lambda, 1/conj}.
    Complex rep = lambda;
    if (std::abs(rep) < 1.0) rep = 1.0 / std::conj(rep);
    if (rep.imag() < 0.0) rep = std::conj(rep);
    auto rep_idx = cluster_near(rep);
    auto par_idx = cluster_near(1.0 / rep);
    auto conj_idx = cluster_near(std::conj(rep));
    auto cpar_idx = cluster_near(1.0 / std::conj(rep));
    if (rep_idx.size() != 1 || par_idx.size() != 1 || conj_idx.size() != 1 ||
        cpar_idx.size() != 1)
      throw PathExtensionFailed(
          "component_connector: repeated loxodromic eigenvalues");
    for (int j : {rep_idx[0], par_idx[0], conj_idx[0], cpar_idx[0]})
      used[j] = true;
    const CVec v = vecs.col(rep_idx[0]);
    const CVec u = vecs.col(par_idx[0]);
    Block b;
    b.type = Block::Type::loxodromic;
    b.width = 2;
    b.lambda = std::abs(rep);
    b.angle = std::arg(rep);
    const Vec e1 = v.real(), e2 = v.imag();
    const Vec a2 = u.real(), b2 = u.imag();
    Mat gram(2, 2);
    gram << sigma_of(e1, a2), sigma_of(e1, b2), sigma_of(e2, a2),
        sigma_of(e2, b2);
    if (std::abs(gram.determinant()) < 1e-10)
      throw PathExtensionFailed(
          "component_connector: loxodromic pairing is degenerate");
    const Mat ginv = gram.inverse();
    const Vec f1 = a2 * ginv(0, 0) + b2 * ginv(1, 0);
    const Vec f2 = a2 * ginv(0, 1) + b2 * ginv(1, 1);
    b.e = {e1, e2};
    b.f = {f1, f2};
    blocks.push_back(std::move(b));
  }

  // Order: positive hyperbolic first (a leftover block, if the count is odd,
  // lands in slot 0 and becomes the diag(2, 1/2) factor of S^-), then the
  // pairs that annihilate, then everything else.
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block &a, const Block &b) {
                     auto key = [](const Block &x) {
                       switch (x.type) {
                         case Block::Type::pos_hyperbolic: return 0;
                         case Block::Type::loxodromic: return 1;
                         case Block::Type::elliptic: return 2;
                         case Block::Type::neg_hyperbolic: return 3;
                       }
                       return 4;
                     };
                     return key(a) < key(b);
                   });
  int pos_count = 0;
  for (const Block &b : blocks)
    if (b.type == Block::Type::pos_hyperbolic) ++pos_count;
  if ((pos_count % 2 == 1) != (data.det_sign < 0))
    throw PathExtensionFailed(
        "component_connector: hyperbolic count disagrees with det sign");
  const int first_paired = pos_count % 2;  // leftover stays unpaired
  for (int k = first_paired; k + 1 < pos_count; k += 2)
    blocks[k].annihilate_with_next = true;

  int slot = 0;
  for (Block &b : blocks) {
    b.slot = slot;
    slot += b.width;
  }
  if (slot != n)
    throw PathExtensionFailed("component_connector: slots do not fill R^2n");

  Mat r(n2, n2);
  for (const Block &b : blocks)
    for (int k = 0; k < b.width; ++k) {
      r.col(b.slot + k) = b.e[k];
      r.col(n + b.slot + k) = b.f[k];
    }
  const Mat j_std = standard_J(n);
  if ((r.transpose() * j_std * r - j_std).cwiseAbs().maxCoeff() > 1e-6)
    throw PathExtensionFailed(
        "component_connector: adapted basis is not symplectic");
  data.basis = r;
  data.basis_inv = r.inverse();
  data.blocks = std::move(blocks);

  // Polar data of R for the de-conjugation stage.
  const CMat u = polar_unitary(r);
  Eigen::ComplexEigenSolver<CMat> ues(u);
  if (ues.info() != Eigen::Success)
    throw PathExtensionFailed("component_connector: unitary eigensolver");
  data.u_vectors = ues.eigenvectors();
  data.u_vectors_inv = data.u_vectors.inverse();
  data.u_angles = ues.eigenvalues();
  const Mat p = embed_unitary(u).transpose() * r;
  Eigen::SelfAdjointEigenSolver<Mat> pes(0.5 * (p + p.transpose()));
  if (pes.info() != Eigen::Success || pes.eigenvalues().minCoeff() <= 0.0)
    throw PathExtensionFailed("component_connector: polar factor of R");
  data.p_vectors = pes.eigenvectors();
  data.p_logs = pes.eigenvalues().array().log();

  const Mat n0 = data.blocks_value(0.0, 0.0);
  if ((r * n0 * data.basis_inv - s).cwiseAbs().maxCoeff() >
      1e-6 * std::max(1.0, s.cwiseAbs().maxCoeff()))
    throw PathExtensionFailed(
        "component_connector: block normal form does not rebuild S");
  return data;
}

Mat ConnectorData::blocks_value(double stage_b, double stage_c) const {
  const int n = dof;
  Mat out = Mat::Zero(2 * n, 2 * n);
  auto scatter1 = [&](int slot, const Mat &m2) {
    out(slot, slot) = m2(0, 0);
    out(slot, n + slot) = m2(0, 1);
    out(n + slot, slot) = m2(1, 0);
    out(n + slot, n + slot) = m2(1, 1);
  };
  auto scatter2 = [&](int slot, const Mat &m4) {
    const int rows[4] = {slot, slot + 1, n + slot, n + slot + 1};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) out(rows[a], rows[b]) = m4(a, b);
  };

  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block &b = blocks[k];
    switch (b.type) {
      case Block::Type::elliptic: {
        const double target = b.angle > 0.0 ? M_PI : -M_PI;
        scatter1(b.slot, rot2(b.angle + stage_b * (target - b.angle)));
        break;
      }
      case Block::Type::neg_hyperbolic: {
        scatter1(b.slot, hyp2(b.lambda + stage_b * (-1.0 - b.lambda)));
        break;
      }
      case Block::Type::pos_hyperbolic: {
        const double lam = b.lambda + stage_b * (2.0 - b.lambda);
        if (b.annihilate_with_next) {
          // Stage C drives the adjacent pair diag(2,1/2)+diag(2,1/2)
          // through the loxodromic family to -I4.
          if (stage_c <= 0.0) {
            scatter1(b.slot, hyp2(lam));
          } else if (stage_c <= 0.5) {
            scatter2(b.slot, lox4(2.0, 2.0 * stage_c * M_PI));
          } else {
            scatter2(b.slot, lox4(3.0 - 2.0 * stage_c, M_PI));
          }
        } else if (k > 0 && blocks[k - 1].annihilate_with_next) {
          if (stage_c <= 0.0) scatter1(b.slot, hyp2(lam));
          // otherwise covered by the partner's 4x4 scatter
        } else {
          scatter1(b.slot, hyp2(lam));  // the S^- leftover
        }
        break;
      }
      case Block::Type::loxodromic: {
        double r = b.lambda, phi = b.angle;
        if (stage_b <= 0.5) {
          phi = phi + 2.0 * stage_b * (M_PI - phi);
        } else {
          phi = M_PI;
          r = r + (2.0 * stage_b - 1.0) * (1.0 - r);
        }
        scatter2(b.slot, lox4(r, phi));
        break;
      }
    }
  }
  return out;
}

Mat ConnectorData::conjugator(double sigma) const {
  // R(sigma) = embed(u^{1-sigma}) P^{1-sigma}; R(0) = R, R(1) = I.
  const double a = 1.0 - sigma;
  CVec powered(u_angles.size());
  for (int i = 0; i < u_angles.size(); ++i)
    powered[i] = std::polar(1.0, a * std::arg(u_angles[i]));
  const CMat upow = u_vectors * powered.asDiagonal() * u_vectors_inv;
  const Mat ppow = p_vectors * (a * p_logs.array()).exp().matrix().asDiagonal() *
                   p_vectors.transpose();
  return embed_unitary(upow) * ppow;
}

}  // namespace

std::function<Mat(double)> component_connector(const Mat &s) {
  const int n2 = static_cast<int>(s.rows());
  const SpClass cls = classify_endpoint(s);
  if (cls == SpClass::zero)
    throw DegenerateEndpoint("component_connector: degenerate endpoint");

  // Already at a basepoint: nothing to do.
  const Mat id = Mat::Identity(n2, n2);
  if ((s + id).cwiseAbs().maxCoeff() < 1e-9)
    return [s](double) { return s; };

  auto data = std::make_shared<ConnectorData>(analyze_endpoint(s));
  const int sign = data->det_sign;
  return [data, sign](double t) {
    Mat value;
    if (t <= 1.0 / 3.0) {
      value = data->conjugator(3.0 * t) * data->blocks_value(0.0, 0.0) *
              data->conjugator(3.0 * t).inverse();
    } else if (t <= 2.0 / 3.0) {
      value = data->blocks_value(3.0 * t - 1.0, 0.0);
    } else {
      value = data->blocks_value(1.0, 3.0 * t - 2.0);
    }
    const double g =
        (value - Mat::Identity(value.rows(), value.cols()))
            .partialPivLu()
            .determinant();
    if (g * sign <= 0.0)
      throw PathExtensionFailed(
          "component_connector: connector touched the degenerate set");
    return value;
  };
}

int cz_winding_oracle(const SymplecticPath &path) {
  const Mat &s = path.endpoint();
  if (classify_endpoint(s) == SpClass::zero)
    throw DegenerateEndpoint("cz_winding_oracle: det(S - I) vanishes");
  const LiftedAngle main = rho_lift(path);

  auto connector = component_connector(s);
  // Continue the lifted angle across the numerical seam at the junction.
  const Complex seam = rho(connector(0.0));
  const double theta0 =
      main.end() + std::arg(seam * std::polar(1.0, -main.end()));
  std::vector<double> grid(65);
  for (std::size_t k = 0; k < grid.size(); ++k)
    grid[k] = static_cast<double>(k) / (grid.size() - 1);
  const LiftedAngle ext = track_argument(
      [&connector](double t) { return rho(connector(t)); }, theta0, grid,
      true);
  return round_checked(ext.end() / M_PI, "cz_winding_oracle");
}

}  // namespace sympindex
