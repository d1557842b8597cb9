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

#include <stdexcept>
#include <string>

namespace sympindex {

/// Base class for every failure the index computations can signal.
class IndexError : public std::runtime_error {
 public:
  explicit IndexError(const std::string &what) : std::runtime_error(what) {}
};

class NotSymplectic : public IndexError {
 public:
  using IndexError::IndexError;
};

class PolarFailure : public IndexError {
 public:
  using IndexError::IndexError;
};

// An eigenvalue of a unitary matrix sits on the negative real axis, so the
// principal logarithm (and the transversal ALM formula) is unavailable.
class BranchCut : public IndexError {
 public:
  using IndexError::IndexError;
};

class NotIsotropic : public IndexError {
 public:
  using IndexError::IndexError;
};

class RankDeficient : public IndexError {
 public:
  using IndexError::IndexError;
};

class NotTransversal : public IndexError {
 public:
  using IndexError::IndexError;
};

// A quantity that must recover an integer (or half-integer) missed by more
// than the integrality tolerance; signals a convention or data bug upstream.
class IntegralityViolation : public IndexError {
 public:
  using IndexError::IndexError;
};

class UnderResolved : public IndexError {
 public:
  using IndexError::IndexError;
};

class AuxiliarySearchFailed : public IndexError {
 public:
  using IndexError::IndexError;
};

class NotALoop : public IndexError {
 public:
  using IndexError::IndexError;
};

class UnknownGenerator : public IndexError {
 public:
  using IndexError::IndexError;
};

class DegenerateEndpoint : public IndexError {
 public:
  using IndexError::IndexError;
};

class NotFree : public IndexError {
 public:
  using IndexError::IndexError;
};

class PathExtensionFailed : public IndexError {
 public:
  using IndexError::IndexError;
};

class OrbitNotClosed : public IndexError {
 public:
  using IndexError::IndexError;
};

class SymplecticDriftExceeded : public IndexError {
 public:
  using IndexError::IndexError;
};

class UnknownSuite : public IndexError {
 public:
  using IndexError::IndexError;
};

}  // namespace sympindex
