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

#include "qst/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

namespace qst {

namespace {

void require_same_space(const HilbertSpace& a, const HilbertSpace& b, const char* what) {
  if (!(a == b)) {
    throw std::invalid_argument(std::string(what) + ": Hilbert space mismatch");
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

HilbertSpace::HilbertSpace(int d, int n_max)
    : dims_{d, d, n_max + 1}, total_(d * d * (n_max + 1)) {}

HilbertSpace HilbertSpace::composite(int d, int n_max) {
  if (d < 2) {
    throw std::invalid_argument("qudit dimension must be at least 2, got " + std::to_string(d));
  }
  if (n_max < 1) {
    throw std::invalid_argument("cavity truncation n_max must be at least 1, got " +
                                std::to_string(n_max));
  }
  return HilbertSpace(d, n_max);
}

int HilbertSpace::index(int l1, int l2, int n) const {
  if (l1 < 0 || l1 >= dims_[0] || l2 < 0 || l2 >= dims_[1] || n < 0 || n >= dims_[2]) {
    throw std::out_of_range("basis label out of range");
  }
  return (l1 * dims_[1] + l2) * dims_[2] + n;
}

HilbertSpace::Labels HilbertSpace::labels(int index) const {
  if (index < 0 || index >= total_) {
    throw std::out_of_range("basis index out of range");
  }
  const int n = index % dims_[2];
  const int rest = index / dims_[2];
  return {rest / dims_[1], rest % dims_[1], n};
}

LocalOperator identity(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("identity dimension must be positive");
  }
  return {Matrix::Identity(dim, dim)};
}

LocalOperator annihilation(int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("cavity truncation n_max must be at least 1");
  }
  Matrix a = Matrix::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return {std::move(a)};
}

LocalOperator transition_raise(int d, int l) {
  if (d < 2) {
    throw std::invalid_argument("qudit dimension must be at least 2");
  }
  if (l < 1 || l > d - 1) {
    throw std::invalid_argument("transition level " + std::to_string(l) +
                                " out of range for d = " + std::to_string(d));
  }
  Matrix m = Matrix::Zero(d, d);
  m(l, l - 1) = 1.0;
  return {std::move(m)};
}

LocalOperator projector(int d, int l) {
  if (l < 0 || l >= d) {
    throw std::invalid_argument("projector level out of range");
  }
  Matrix m = Matrix::Zero(d, d);
  m(l, l) = 1.0;
  return {std::move(m)};
}

Operator::Operator(HilbertSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.total_dim() || matrix_.cols() != space_.total_dim()) {
    throw std::invalid_argument("operator matrix shape does not match the Hilbert space");
  }
}

Operator Operator::zero(const HilbertSpace& space) {
  return {space, Matrix::Zero(space.total_dim(), space.total_dim())};
}

Operator Operator::identity(const HilbertSpace& space) {
  return {space, Matrix::Identity(space.total_dim(), space.total_dim())};
}

Operator Operator::adjoint() const { return {space_, matrix_.adjoint()}; }

bool Operator::is_hermitian(double tol) const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_space(space_, other.space_, "operator sum");
  matrix_ += other.matrix_;
  return *this;
}

Operator operator-(const Operator& lhs, const Operator& rhs) {
  require_same_space(lhs.space_, rhs.space_, "operator difference");
  return {lhs.space_, lhs.matrix_ - rhs.matrix_};
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_space(lhs.space_, rhs.space_, "operator product");
  return {lhs.space_, lhs.matrix_ * rhs.matrix_};
}

Operator operator*(Complex s, const Operator& op) { return {op.space_, s * op.matrix_}; }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator embed(const LocalOperator& local, Site site, const HilbertSpace& space) {
  if (local.matrix.rows() != local.matrix.cols() || local.dim() != space.dim(site)) {
    throw std::invalid_argument("local operator dimension does not match the target factor");
  }
  Matrix out = Matrix::Identity(1, 1);
  for (int s = 0; s < 3; ++s) {
    const auto factor = static_cast<Site>(s);
    out = kron(out, factor == site ? local.matrix
                                   : Matrix::Identity(space.dim(factor), space.dim(factor)));
  }
  return {space, std::move(out)};
}

StateVector::StateVector(HilbertSpace space, Vector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != space_.total_dim()) {
    throw std::invalid_argument("state vector length does not match the Hilbert space");
  }
}

StateVector StateVector::basis(const HilbertSpace& space, int l1, int l2, int n) {
  Vector v = Vector::Zero(space.total_dim());
  v[space.index(l1, l2, n)] = 1.0;
  return {space, std::move(v)};
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  return {space_, amplitudes_ / n};
}

Complex StateVector::inner(const StateVector& other) const {
  require_same_space(space_, other.space_, "inner product");
  return amplitudes_.dot(other.amplitudes_);
}

Complex expectation(const Operator& op, const StateVector& state) {
  require_same_space(op.space(), state.space(), "expectation");
  return state.amplitudes().dot(op.matrix() * state.amplitudes());
}

DensityMatrix::DensityMatrix(HilbertSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.total_dim() || matrix_.cols() != space_.total_dim()) {
    throw std::invalid_argument("density matrix shape does not match the Hilbert space");
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
  const Vector& v = state.amplitudes();
  return {state.space(), v * v.adjoint()};
}

DensityMatrix DensityMatrix::maximally_mixed(const HilbertSpace& space) {
  const int n = space.total_dim();
  return {space, Matrix::Identity(n, n) / static_cast<double>(n)};
}

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix h = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid() const {
  return std::abs(trace() - 1.0) <= 1e-8 && hermiticity_error() <= 1e-10 &&
         min_eigenvalue() >= -1e-8;
}

std::string basis_label(const HilbertSpace& space, int index) {
  const auto l = space.labels(index);
  return "p_" + std::to_string(l.l1) + "_" + std::to_string(l.l2) + "_" + std::to_string(l.n);
}

}  // namespace qst
