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

#include <cmath>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "qst/hilbert.hpp"

namespace qst {
namespace {

TEST(HilbertSpace, TotalDimension) {
  EXPECT_EQ(HilbertSpace::composite(5, 3).total_dim(), 100);
  EXPECT_EQ(HilbertSpace::composite(3, 1).total_dim(), 18);
  EXPECT_EQ(HilbertSpace::composite(2, 1).total_dim(), 8);
}

TEST(HilbertSpace, RejectsDegenerateFactors) {
  EXPECT_THROW(HilbertSpace::composite(1, 3), std::invalid_argument);
  EXPECT_THROW(HilbertSpace::composite(3, 0), std::invalid_argument);
}

TEST(HilbertSpace, IndexAndLabelsAreInverse) {
  const auto space = HilbertSpace::composite(4, 2);
  for (int i = 0; i < space.total_dim(); ++i) {
    const auto l = space.labels(i);
    EXPECT_EQ(space.index(l.l1, l.l2, l.n), i);
  }
  EXPECT_EQ(space.index(0, 0, 1), 1);
  EXPECT_EQ(space.index(0, 1, 0), 3);
  EXPECT_EQ(space.index(1, 0, 0), 12);
  EXPECT_THROW(space.index(4, 0, 0), std::out_of_range);
}

TEST(HilbertSpace, BasisLabel) {
  const auto space = HilbertSpace::composite(3, 3);
  EXPECT_EQ(basis_label(space, space.index(2, 1, 3)), "p_2_1_3");
}

TEST(LocalOperators, Annihilation) {
  const Matrix a = annihilation(3).matrix;
  Vector one = Vector::Zero(4), two = Vector::Zero(4), vac = Vector::Zero(4);
  one[1] = 1.0;
  two[2] = 1.0;
  vac[0] = 1.0;
  EXPECT_NEAR((a * one - vac).norm(), 0.0, 1e-15);
  Vector expected = Vector::Zero(4);
  expected[1] = std::sqrt(2.0);
  EXPECT_NEAR((a * two - expected).norm(), 0.0, 1e-15);
  EXPECT_NEAR((a * vac).norm(), 0.0, 1e-15);
}

TEST(LocalOperators, TransitionRaise) {
  const Matrix s01 = transition_raise(5, 1).matrix;
  EXPECT_EQ(s01(1, 0), Complex(1.0));
  EXPECT_NEAR(s01.cwiseAbs().sum(), 1.0, 0.0);
  const Matrix s34 = transition_raise(5, 4).matrix;
  EXPECT_EQ(s34(4, 3), Complex(1.0));
  EXPECT_NEAR(s34.cwiseAbs().sum(), 1.0, 0.0);
  EXPECT_THROW(transition_raise(3, 3), std::invalid_argument);
  EXPECT_THROW(transition_raise(3, 0), std::invalid_argument);
}

TEST(Embed, IdentityOnEverySite) {
  const auto space = HilbertSpace::composite(3, 2);
  const Matrix id = Matrix::Identity(space.total_dim(), space.total_dim());
  for (Site site : {Site::Qudit1, Site::Qudit2, Site::Cavity}) {
    EXPECT_TRUE(embed(identity(space.dim(site)), site, space).matrix().isApprox(id));
  }
}

TEST(Embed, ActsOnTheRightFactor) {
  const auto space = HilbertSpace::composite(3, 2);
  const Vector raised = embed(transition_raise(3, 1), Site::Qudit1, space).matrix() *
                      basis_ket(space, 0, 0, 0).amplitudes();
  EXPECT_NEAR((raised - basis_ket(space, 1, 0, 0).amplitudes()).norm(), 0.0, 1e-15);

  const Vector lowered = embed(annihilation(2), Site::Cavity, space).matrix() *
                       basis_ket(space, 0, 0, 1).amplitudes();
  EXPECT_NEAR((lowered - basis_ket(space, 0, 0, 0).amplitudes()).norm(), 0.0, 1e-15);

  EXPECT_THROW(embed(identity(4), Site::Qudit2, space), std::invalid_argument);
}

TEST(Operator, Expectation) {
  const auto space = HilbertSpace::composite(3, 3);
  const auto psi = basis_ket(space, 1, 2, 1);
  EXPECT_NEAR(std::abs(expectation(Operator::identity(space), psi) - 1.0), 0.0, 1e-15);
  const auto a = embed(annihilation(3), Site::Cavity, space);
  EXPECT_NEAR(std::abs(expectation(a.adjoint() * a, psi) - 1.0), 0.0, 1e-15);
}

TEST(Operator, MismatchedSpacesThrow) {
  const auto a = Operator::identity(HilbertSpace::composite(3, 1));
  const auto b = Operator::identity(HilbertSpace::composite(3, 2));
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW(a + b, std::invalid_argument);
}

TEST(DensityMatrix, PureAndMixed) {
  const auto space = HilbertSpace::composite(2, 1);
  const auto rho = DensityMatrix::pure(basis_ket(space, 1, 0, 1));
  EXPECT_TRUE(rho.is_valid());
  EXPECT_NEAR(rho.min_eigenvalue(), 0.0, 1e-12);
  const auto mixed = DensityMatrix::maximally_mixed(space);
  EXPECT_TRUE(mixed.is_valid());
  EXPECT_NEAR(mixed.min_eigenvalue(), 1.0 / 8.0, 1e-12);
  EXPECT_NEAR(std::abs(mixed.trace() - 1.0), 0.0, 1e-14);

  Matrix bad = Matrix::Zero(8, 8);
  bad(0, 0) = 1.2;
  bad(1, 1) = -0.2;
  EXPECT_FALSE(DensityMatrix(space, bad).is_valid());
}

// Properties over random operators.

Matrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  }
  return m;
}

TEST(OperatorProperty, AdjointIsInvolution) {
  std::mt19937_64 rng(11);
  const auto space = HilbertSpace::composite(3, 1);
  for (int k = 0; k < 20; ++k) {
    const Operator a(space, random_matrix(space.total_dim(), rng));
    EXPECT_EQ(a.adjoint().adjoint().matrix(), a.matrix());
  }
}

TEST(OperatorProperty, AdjointOfProductReverses) {
  std::mt19937_64 rng(12);
  const auto space = HilbertSpace::composite(2, 2);
  for (int k = 0; k < 20; ++k) {
    const Operator a(space, random_matrix(space.total_dim(), rng));
    const Operator b(space, random_matrix(space.total_dim(), rng));
    EXPECT_TRUE((a * b).adjoint().matrix().isApprox((b.adjoint() * a.adjoint()).matrix(), 1e-12));
  }
}

TEST(OperatorProperty, EmbeddedFactorsOnDifferentSitesCommute) {
  std::mt19937_64 rng(13);
  const auto space = HilbertSpace::composite(3, 2);
  for (int k = 0; k < 10; ++k) {
    const auto x = embed({random_matrix(3, rng)}, Site::Qudit1, space);
    const auto y = embed({random_matrix(3, rng)}, Site::Qudit2, space);
    const auto z = embed({random_matrix(3, rng)}, Site::Cavity, space);
    EXPECT_LT(commutator(x, y).matrix().norm(), 1e-10);
    EXPECT_LT(commutator(x, z).matrix().norm(), 1e-10);
    EXPECT_LT(commutator(y, z).matrix().norm(), 1e-10);
  }
}

TEST(OperatorProperty, CanonicalCommutatorBelowTruncation) {
  // [a, a^dag] = 1 on every Fock state except the top one.
  const int n_max = 5;
  const Matrix a = annihilation(n_max).matrix;
  const Matrix c = a * a.adjoint() - a.adjoint() * a;
  for (int n = 0; n < n_max; ++n) EXPECT_NEAR(std::abs(c(n, n) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(c(n_max, n_max).real(), -static_cast<double>(n_max), 1e-12);
}

}  // namespace
}  // namespace qst
