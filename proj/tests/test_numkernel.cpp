// Copyright 2026 The daghilb Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

namespace daghilb {
namespace {

using namespace daghilb::testing;

TEST(Scalar, RealTagRejectsImaginaryPart) {
  EXPECT_THROW(Scalar(Field::Real, cplx(0.0, 1.0)), FieldMismatch);
  EXPECT_EQ(Scalar::complex(3.0, 4.0).modulus(), 5.0);
}

TEST(Matrix, ShapeAndFieldChecks) {
  EXPECT_THROW(Matrix(Field::Real, 2, 2, {1.0, 2.0, 3.0}), ShapeError);
  EXPECT_THROW(Matrix(Field::Real, 1, 1, {cplx(0.0, 1.0)}), FieldMismatch);
  const Matrix empty(Field::Real, 3, 0);
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_EQ((Matrix(Field::Real, 2, 3) * empty).cols(), 0u);
}

TEST(Matrix, KroneckerIsLeftFactorMajor) {
  const Matrix a = real({{1, 2}});
  const Matrix b = real({{1}, {10}});
  EXPECT_EQ(kron(a, b), real({{1, 2}, {10, 20}}));
}

TEST(Matrix, DirectSumIsBlockDiagonal) {
  EXPECT_EQ(direct_sum(real({{1}}), real({{2, 3}})), real({{1, 0, 0}, {0, 2, 3}}));
}

TEST(Opnorm, Examples) {
  EXPECT_EQ(opnorm(Matrix(Field::Real, 2, 2)), 0.0);
  EXPECT_NEAR(opnorm(real({{0.6, 0}, {0, 0.8}})), 0.8, 1e-15);
  EXPECT_NEAR(opnorm(real({{0.6}, {0.8}})), 1.0, 1e-15);
}

TEST(Opnorm, ColumnAgreesWithGridSearch) {
  // Maximise |A x| over unit vectors x = (cos a, sin a) for a 2-column map.
  const Matrix a = real({{0.3, -0.2}, {0.1, 0.7}, {0.5, 0.4}});
  double best = 0.0;
  for (int k = 0; k < 200000; ++k) {
    const double t = M_PI * k / 200000.0;
    const Matrix x = real({{std::cos(t)}, {std::sin(t)}});
    best = std::max(best, frobenius_norm(a * x));
  }
  EXPECT_NEAR(opnorm(a), best, 1e-9);
  EXPECT_NEAR(opnorm(a), eigen_opnorm(a), 1e-12);
}

TEST(Svd, Examples) {
  const SVDResult id = svd(Matrix::identity(Field::Real, 3));
  EXPECT_EQ(id.sigma, (std::vector<double>{1, 1, 1}));

  const SVDResult d = svd(real({{0, 0}, {0, 0.5}}));
  ASSERT_EQ(d.sigma.size(), 2u);
  EXPECT_NEAR(d.sigma[0], 0.5, 1e-15);
  EXPECT_NEAR(d.sigma[1], 0.0, 1e-15);

  const SVDResult r = svd(real({{0.6, 0}, {0.8, 0}}));
  EXPECT_NEAR(r.sigma[0], 1.0, 1e-15);
  EXPECT_NEAR(r.sigma[1], 0.0, 1e-15);
  EXPECT_NEAR(std::abs(r.u(0, 0)), 0.6, 1e-15);
  EXPECT_NEAR(std::abs(r.u(1, 0)), 0.8, 1e-15);
  EXPECT_NEAR(std::abs(r.u(0, 0) * r.u(1, 0) - 0.48), 0.0, 1e-15);
}

class SvdRandom : public ::testing::TestWithParam<Field> {};

TEST_P(SvdRandom, MatchesEigenAndReconstructs) {
  Sampler s(2024, "svd", GetParam(), 8);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = s.dim(1, 8), n = s.dim(1, 8);
    Matrix a = s.gaussian(m, n);
    if (trial % 5 == 0 && n > 1) {
      // Force rank deficiency.
      for (std::size_t i = 0; i < m; ++i) a(i, n - 1) = a(i, 0);
    }
    const SVDResult r = svd(a);
    const std::size_t k = std::min(m, n);
    ASSERT_EQ(r.sigma.size(), k);
    const Eigen::VectorXd oracle = eigen_singular_values(a);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_NEAR(r.sigma[i], oracle(Eigen::Index(i)), 1e-12 * std::max(1.0, oracle(0)));
      if (i > 0) {
        EXPECT_GE(r.sigma[i - 1], r.sigma[i]);
      }
    }
    const Matrix recon = r.u * diagonal(a.field(), r.sigma) * adjoint(r.v);
    EXPECT_LE(eigen_distance(recon, a), kTol.recon);
    EXPECT_LE(isometry_defect(r.u), kTol.ortho);
    EXPECT_LE(isometry_defect(r.v), kTol.ortho);
    EXPECT_EQ(r.u.field(), a.field());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, SvdRandom, ::testing::Values(Field::Real, Field::Complex),
                         FieldName());

TEST(PolarLeft, Examples) {
  const PolarDecomposition half = polar_left(real({{0.5}}));
  EXPECT_NEAR(half.p(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(half.u(0, 0).real(), 1.0, 1e-15);

  const PolarDecomposition z = polar_left(Matrix(Field::Real, 2, 2));
  EXPECT_EQ(max_abs(z.p), 0.0);
  EXPECT_EQ(max_abs(z.u), 0.0);

  const Matrix col = real({{0.6}, {0.8}});
  const PolarDecomposition c = polar_left(col);
  EXPECT_LE(distance(c.p * c.u, col), 1e-14);
  EXPECT_LE(isometry_defect(c.u), 1e-14);
  // p = (a a†)^{1/2} = a a† here since a a† is a rank-one projector.
  EXPECT_LE(distance(c.p, col * adjoint(col)), 1e-14);
}

TEST(PolarLeft, RandomFactorsArePositiveAndPartialIsometric) {
  Sampler s(7, "polar", Field::Complex, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix a = s.gaussian(s.dim(1, 6), s.dim(1, 6));
    const PolarDecomposition pd = polar_left(a);
    EXPECT_LE(distance(pd.p * pd.u, a), kTol.recon);
    EXPECT_LE(distance(pd.u * adjoint(pd.u) * pd.u, pd.u), kTol.ortho);
    EXPECT_LE(distance(pd.p, adjoint(pd.p)), 1e-12);
    EXPECT_LE(distance(pd.p * pd.p, a * adjoint(a)), 1e-10 * std::max(1.0, opnorm(a * adjoint(a))));
    Eigen::SelfAdjointEigenSolver<EMat> eig(to_eigen(pd.p));
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
  }
}

TEST(NullBasis, Examples) {
  const Matrix n = null_basis(real({{0, 0}, {0, 2}}));
  ASSERT_EQ(n.cols(), 1u);
  EXPECT_NEAR(std::abs(n(0, 0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(n(1, 0)), 0.0, 1e-15);

  const Matrix none = null_basis(Matrix::identity(Field::Real, 3));
  EXPECT_EQ(none.rows(), 3u);
  EXPECT_EQ(none.cols(), 0u);

  const Matrix all = null_basis(Matrix(Field::Real, 2, 2));
  ASSERT_EQ(all.cols(), 2u);
  EXPECT_LE(distance(adjoint(all) * all, Matrix::identity(Field::Real, 2)), 1e-14);
}

TEST(RangeIsometry, Examples) {
  const Matrix r = range_isometry(real({{0.6, 0}, {0.8, 0}}));
  ASSERT_EQ(r.cols(), 1u);
  EXPECT_NEAR(std::abs(r(0, 0)), 0.6, 1e-15);
  EXPECT_NEAR(std::abs(r(1, 0)), 0.8, 1e-15);

  const Matrix i = range_isometry(Matrix::identity(Field::Complex, 3));
  EXPECT_EQ(i.cols(), 3u);
  EXPECT_LE(distance(i * adjoint(i), Matrix::identity(Field::Complex, 3)), 1e-14);

  EXPECT_EQ(range_isometry(Matrix(Field::Real, 2, 2)).cols(), 0u);
}

TEST(RangeAndNull, ComplementEachOtherOnRandomInputs) {
  Sampler s(11, "range-null", Field::Complex, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = s.dim(1, 7), n = s.dim(1, 7), r = s.index(0, std::min(m, n));
    const Matrix a = s.gaussian(m, r) * s.gaussian(r, n);
    const Matrix q = range_isometry(a);
    const Matrix k = null_basis(a);
    EXPECT_EQ(q.cols(), eigen_rank(a));
    EXPECT_EQ(q.cols() + k.cols(), n);
    EXPECT_LE(max_abs(a * k), 1e-9 * std::max(1.0, opnorm(a)));
    EXPECT_LE(distance(q * adjoint(q) * a, a), 1e-9 * std::max(1.0, opnorm(a)));
  }
}

}  // namespace
}  // namespace daghilb
