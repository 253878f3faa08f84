// Copyright 2026 The qudit-transfer Authors
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

#include <array>
#include <complex>
#include <cstddef>
#include <string>

#include <Eigen/Dense>

namespace qst {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tensor factor of the composite space. The order is fixed everywhere:
/// qudit 1, qudit 2, cavity.
enum class Site : int { Qudit1 = 0, Qudit2 = 1, Cavity = 2 };

/// Two d-level qudits and a cavity truncated at n_max photons.
class HilbertSpace {
 public:
  /// Throws std::invalid_argument for d < 2 or n_max < 1.
  static HilbertSpace composite(int d, int n_max);

  const std::array<int, 3>& dims() const { return dims_; }
  int dim(Site site) const { return dims_[static_cast<int>(site)]; }
  int qudit_dim() const { return dims_[0]; }
  int n_max() const { return dims_[2] - 1; }
  int total_dim() const { return total_; }

  /// Flat basis index of |l1>_1 |l2>_2 |n>_c.
  int index(int l1, int l2, int n) const;

  struct Labels {
    int l1;
    int l2;
    int n;
  };
  Labels labels(int index) const;

  bool operator==(const HilbertSpace&) const = default;

 private:
  HilbertSpace(int d, int n_max);

  std::array<int, 3> dims_;
  int total_;
};

/// Operator on a single tensor factor (a qudit or the cavity).
struct LocalOperator {
  Matrix matrix;

  int dim() const { return static_cast<int>(matrix.rows()); }
  LocalOperator adjoint() const { return {matrix.adjoint()}; }
};

LocalOperator identity(int dim);

/// Truncated photon annihilation operator: <n-1|a|n> = sqrt(n).
LocalOperator annihilation(int n_max);

/// |l><l-1| on a d-level qudit, 1 <= l <= d-1.
LocalOperator transition_raise(int d, int l);

/// |l><l| on a d-level qudit.
LocalOperator projector(int d, int l);

/// Operator on the full composite space.
class Operator {
 public:
  Operator(HilbertSpace space, Matrix matrix);

  static Operator zero(const HilbertSpace& space);
  static Operator identity(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  Operator adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;

  Operator& operator+=(const Operator& other);
  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(const Operator& lhs, const Operator& rhs);
  friend Operator operator*(const Operator& lhs, const Operator& rhs);
  friend Operator operator*(Complex s, const Operator& op);

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

Operator commutator(const Operator& a, const Operator& b);

/// Tensor `local` into `space` at `site` with identities on the other factors.
Operator embed(const LocalOperator& local, Site site, const HilbertSpace& space);

class StateVector {
 public:
  StateVector(HilbertSpace space, Vector amplitudes);

  static StateVector basis(const HilbertSpace& space, int l1, int l2, int n);

  const HilbertSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex amplitude(int l1, int l2, int n) const {
    return amplitudes_[space_.index(l1, l2, n)];
  }

  double norm() const { return amplitudes_.norm(); }
  StateVector normalized() const;
  Complex inner(const StateVector& other) const;  // <this|other>

 private:
  HilbertSpace space_;
  Vector amplitudes_;
};

inline StateVector basis_ket(const HilbertSpace& space, int l1, int l2, int n) {
  return StateVector::basis(space, l1, l2, n);
}

Complex expectation(const Operator& op, const StateVector& state);

class DensityMatrix {
 public:
  DensityMatrix(HilbertSpace space, Matrix matrix);

  static DensityMatrix pure(const StateVector& state);
  static DensityMatrix maximally_mixed(const HilbertSpace& space);

  const HilbertSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }

  Complex trace() const { return matrix_.trace(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;

  /// Trace within 1e-8, Hermitian within 1e-10, eigenvalues >= -1e-8.
  bool is_valid() const;

 private:
  HilbertSpace space_;
  Matrix matrix_;
};

std::string basis_label(const HilbertSpace& space, int index);

}  // namespace qst
