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

#include "sympindex/path.hpp"

#include <cmath>
#include <sstream>

namespace sympindex {

namespace {

Mat rotation_block(double a) {
  Mat r(2, 2);
  r << std::cos(a), std::sin(a), -std::sin(a), std::cos(a);
  return r;
}

}  // namespace

void SymplecticPath::validate() const {
  if (times_.size() != samples_.size() || times_.size() < 2)
    throw IndexError("SymplecticPath: need at least two samples");
  if (std::abs(times_.front()) > 1e-12 || std::abs(times_.back() - 1.0) > 1e-12)
    throw IndexError("SymplecticPath: times must run from 0 to 1");
  for (std::size_t k = 1; k < times_.size(); ++k)
    if (times_[k] <= times_[k - 1])
      throw IndexError("SymplecticPath: times must be strictly increasing");
  const Mat id = Mat::Identity(2 * dof_, 2 * dof_);
  if ((samples_.front() - id).cwiseAbs().maxCoeff() > 1e-9)
    throw IndexError("SymplecticPath: path must start at the identity");
  for (const Mat &s : samples_) {
    if (!is_symplectic(s)) {
      std::ostringstream msg;
      msg << "SymplecticPath: sample is not symplectic, residual "
          << symplectic_residual(s);
      throw NotSymplectic(msg.str());
    }
  }
}

SymplecticPath SymplecticPath::from_generator(int dof, Generator gen,
                                              int initial_samples) {
  if (initial_samples < 2)
    throw IndexError("SymplecticPath: need at least two samples");
  SymplecticPath p;
  p.dof_ = dof;
  p.gen_ = std::move(gen);
  p.times_.resize(initial_samples);
  p.samples_.resize(initial_samples);
  for (int k = 0; k < initial_samples; ++k) {
    p.times_[k] = static_cast<double>(k) / (initial_samples - 1);
    p.samples_[k] = p.gen_(p.times_[k]);
  }
  p.times_.front() = 0.0;
  p.times_.back() = 1.0;
  p.validate();
  return p;
}

SymplecticPath SymplecticPath::from_samples(std::vector<double> times,
                                            std::vector<Mat> samples) {
  SymplecticPath p;
  if (samples.empty()) throw IndexError("SymplecticPath: no samples");
  p.dof_ = static_cast<int>(samples.front().rows()) / 2;
  p.times_ = std::move(times);
  p.samples_ = std::move(samples);
  p.validate();
  return p;
}

SymplecticPath SymplecticPath::identity(int dof) {
  const Mat id = Mat::Identity(2 * dof, 2 * dof);
  return from_generator(dof, [id](double) { return id; }, 2);
}

Mat SymplecticPath::at(double t) const {
  if (gen_) return gen_(t);
  // Snap to the nearest stored sample.
  std::size_t best = 0;
  double dist = std::abs(times_[0] - t);
  for (std::size_t k = 1; k < times_.size(); ++k) {
    const double d = std::abs(times_[k] - t);
    if (d < dist) {
      dist = d;
      best = k;
    }
  }
  return samples_[best];
}

SymplecticPath pointwise_product(const SymplecticPath &a,
                                 const SymplecticPath &b) {
  if (a.dof() != b.dof())
    throw IndexError("pointwise_product: dimension mismatch");
  if (a.refinable() && b.refinable()) {
    auto ga = a.gen_;
    auto gb = b.gen_;
    const int samples =
        static_cast<int>(std::max(a.times_.size(), b.times_.size()));
    return SymplecticPath::from_generator(
        a.dof(), [ga, gb](double t) { return ga(t) * gb(t); }, samples);
  }
  // Raw lists: merge the grids; no refinement is possible afterwards.
  std::vector<double> grid = a.times_;
  grid.insert(grid.end(), b.times_.begin(), b.times_.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double x, double y) { return y - x < 1e-12; }),
             grid.end());
  std::vector<Mat> samples;
  samples.reserve(grid.size());
  for (double t : grid) samples.push_back(a.at(t) * b.at(t));
  return SymplecticPath::from_samples(std::move(grid), std::move(samples));
}

SymplecticPath pointwise_inverse(const SymplecticPath &a) {
  if (a.refinable()) {
    auto ga = a.gen_;
    return SymplecticPath::from_generator(
        a.dof(), [ga](double t) { return ga(t).inverse().eval(); },
        static_cast<int>(a.times_.size()));
  }
  std::vector<Mat> samples;
  samples.reserve(a.samples_.size());
  for (const Mat &s : a.samples_) samples.push_back(s.inverse());
  return SymplecticPath::from_samples(a.times_, std::move(samples));
}

SymplecticPath pointwise_power(const SymplecticPath &a, int r) {
  if (r < 1) throw IndexError("pointwise_power: r must be >= 1");
  if (a.refinable()) {
    auto ga = a.gen_;
    const int samples = static_cast<int>(a.times_.size());
    return SymplecticPath::from_generator(
        a.dof(),
        [ga, r](double t) {
          const Mat s = ga(t);
          Mat acc = s;
          for (int k = 1; k < r; ++k) acc = acc * s;
          return acc;
        },
        samples);
  }
  std::vector<Mat> samples;
  samples.reserve(a.samples_.size());
  for (const Mat &s : a.samples_) {
    Mat acc = s;
    for (int k = 1; k < r; ++k) acc = acc * s;
    samples.push_back(acc);
  }
  return SymplecticPath::from_samples(a.times_, std::move(samples));
}

SymplecticPath direct_sum_path(const SymplecticPath &a,
                               const SymplecticPath &b) {
  const int n1 = a.dof();
  const int n2 = b.dof();
  const int n = n1 + n2;
  auto assemble = [n1, n2, n](const Mat &sa, const Mat &sb) {
    Mat s = Mat::Zero(2 * n, 2 * n);
    // Interleave (x, p) blocks of the two summands.
    s.block(0, 0, n1, n1) = sa.topLeftCorner(n1, n1);
    s.block(0, n, n1, n1) = sa.topRightCorner(n1, n1);
    s.block(n, 0, n1, n1) = sa.bottomLeftCorner(n1, n1);
    s.block(n, n, n1, n1) = sa.bottomRightCorner(n1, n1);
    s.block(n1, n1, n2, n2) = sb.topLeftCorner(n2, n2);
    s.block(n1, n + n1, n2, n2) = sb.topRightCorner(n2, n2);
    s.block(n + n1, n1, n2, n2) = sb.bottomLeftCorner(n2, n2);
    s.block(n + n1, n + n1, n2, n2) = sb.bottomRightCorner(n2, n2);
    return s;
  };
  if (a.refinable() && b.refinable()) {
    auto ga = a.gen_;
    auto gb = b.gen_;
    const int samples =
        static_cast<int>(std::max(a.times_.size(), b.times_.size()));
    return SymplecticPath::from_generator(
        n, [=](double t) { return assemble(ga(t), gb(t)); }, samples);
  }
  std::vector<double> grid = a.times_;
  grid.insert(grid.end(), b.times_.begin(), b.times_.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](double x, double y) { return y - x < 1e-12; }),
             grid.end());
  std::vector<Mat> samples;
  samples.reserve(grid.size());
  for (double t : grid) samples.push_back(assemble(a.at(t), b.at(t)));
  return SymplecticPath::from_samples(std::move(grid), std::move(samples));
}

SymplecticPath rotation_path(double angle, double fraction) {
  const double total = angle * fraction;
  const int samples =
      std::max(33, 8 * static_cast<int>(std::ceil(std::abs(total))));
  return SymplecticPath::from_generator(
      1, [total](double t) { return rotation_block(total * t); }, samples);
}

SymplecticPath oscillator_path(double omega, double period, int reps) {
  if (omega <= 0.0 || period <= 0.0 || reps < 1)
    throw IndexError("oscillator_path: need positive frequency and period");
  return rotation_path(omega * period * reps);
}

SymplecticPath alpha_power(int r, int dof) {
  SymplecticPath loop = rotation_path(-2.0 * M_PI * r);
  if (dof == 1) return loop;
  return direct_sum_path(loop, SymplecticPath::identity(dof - 1));
}

LiftedAngle track_argument(const std::function<Complex(double)> &unit_fn,
                           double theta0, const std::vector<double> &grid,
                           bool refinable, int max_depth) {
  if (grid.size() < 2) throw IndexError("track_argument: grid too small");
  LiftedAngle lift;
  lift.times.reserve(grid.size());
  lift.theta.reserve(grid.size());

  auto value = [&unit_fn](double t) {
    const Complex v = unit_fn(t);
    if (std::abs(std::abs(v) - 1.0) > 1e-6)
      throw IndexError("track_argument: function left the unit circle");
    return v / std::abs(v);
  };

  double t_prev = grid.front();
  Complex f_prev = value(t_prev);
  lift.times.push_back(t_prev);
  lift.theta.push_back(theta0);

  // Walk each grid step; bisect recursively while the principal-argument gap
  // reaches pi/2, which keeps the winding unambiguous.
  struct Frame {
    double t;
    Complex f;
    int depth;
  };
  for (std::size_t k = 1; k < grid.size(); ++k) {
    std::vector<Frame> stack;
    stack.push_back({grid[k], value(grid[k]), 0});
    while (!stack.empty()) {
      Frame fr = stack.back();
      const double gap = std::arg(fr.f / f_prev);
      if (std::abs(gap) < M_PI / 2.0) {
        stack.pop_back();
        lift.theta.push_back(lift.theta.back() + gap);
        lift.times.push_back(fr.t);
        t_prev = fr.t;
        f_prev = fr.f;
        continue;
      }
      if (!refinable)
        throw UnderResolved(
            "track_argument: step rotation exceeds pi/2 on a raw sample "
            "list");
      if (fr.depth >= max_depth)
        throw UnderResolved(
            "track_argument: refinement depth exhausted, path is too wild");
      const double mid = 0.5 * (t_prev + fr.t);
      stack.push_back({mid, value(mid), fr.depth + 1});
    }
  }
  return lift;
}

LiftedAngle rho_lift(const SymplecticPath &path) {
  auto fn = [&path](double t) { return rho(path.at(t)); };
  return track_argument(fn, std::arg(rho(path.samples().front())),
                        path.times(), path.refinable());
}

}  // namespace sympindex
