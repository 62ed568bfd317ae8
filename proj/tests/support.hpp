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

#pragma once

#include <Eigen/Dense>
#include <gtest/gtest.h>
#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include "daghilb/daghilb.hpp"

namespace daghilb::testing {

using EMat = Eigen::MatrixXcd;

inline EMat to_eigen(const Matrix& m) {
  EMat out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(Eigen::Index(i), Eigen::Index(j)) = m(i, j);
  return out;
}

inline Matrix from_eigen(const EMat& e, Field f = Field::Complex) {
  Matrix out(f, static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) out(std::size_t(i), std::size_t(j)) = e(i, j);
  return out.project_field();
}

/// Operator norm via Eigen's bidiagonal SVD.
inline double eigen_opnorm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<EMat> svd(to_eigen(m));
  return svd.singularValues()(0);
}

inline double eigen_distance(const Matrix& a, const Matrix& b) {
  return eigen_opnorm(Matrix(a - b));
}

inline Eigen::VectorXd eigen_singular_values(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::JacobiSVD<EMat> svd(to_eigen(m));
  return svd.singularValues();
}

inline std::size_t eigen_rank(const Matrix& m, double tol = kTol.rank) {
  std::size_t r = 0;
  const Eigen::VectorXd s = eigen_singular_values(m);
  for (Eigen::Index i = 0; i < s.size(); ++i) r += s(i) >= tol ? 1 : 0;
  return r;
}

inline Matrix real(std::initializer_list<std::initializer_list<cplx>> rows) {
  return Matrix::from_rows(Field::Real, rows);
}

inline Matrix cpx(std::initializer_list<std::initializer_list<cplx>> rows) {
  return Matrix::from_rows(Field::Complex, rows);
}

inline ConMor con(const Matrix& m) { return ConMor::admit(m); }

inline Fraction frac(const Matrix& num, double den) {
  return Fraction(ConMor::admit(num), Scalar(num.field(), den));
}

/// Scalar identity-multiple on a space of dimension n.
inline Matrix sid(Field f, std::size_t n, cplx c) { return scale(c, Matrix::identity(f, n)); }

/// Readable names for tests parameterised over the field.
struct FieldName {
  std::string operator()(const ::testing::TestParamInfo<Field>& info) const {
    return info.param == Field::Real ? "Real" : "Complex";
  }
};

}  // namespace daghilb::testing

namespace daghilb {

inline void PrintTo(Field f, std::ostream* os) { *os << field_name(f); }

}  // namespace daghilb
