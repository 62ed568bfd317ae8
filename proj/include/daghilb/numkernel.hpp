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

// Dense linear algebra over R or C: the matrix type, norms, a one-sided
// Jacobi SVD and everything derived from it (polar decomposition, range and
// null-space bases, pseudo-inverse).
//
// Storage is always std::complex<double>; a matrix tagged Field::Real keeps
// every imaginary part at exactly zero.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "daghilb/errors.hpp"
#include "daghilb/tolerances.hpp"

namespace daghilb {

using cplx = std::complex<double>;

enum class Field { Real, Complex };

inline const char* field_name(Field f) { return f == Field::Real ? "R" : "C"; }

inline Field join(Field a, Field b) {
  return (a == Field::Complex || b == Field::Complex) ? Field::Complex
                                                     : Field::Real;
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

/// An element of the base field, carrying its field tag.
class Scalar {
 public:
  Scalar() = default;
  Scalar(double re) : value_(re) {}  // NOLINT: implicit from real literals
  Scalar(Field field, cplx value) : field_(field), value_(value) {
    if (field_ == Field::Real && value_.imag() != 0.0) {
      throw FieldMismatch("real scalar with nonzero imaginary part");
    }
  }

  static Scalar real(double re) { return Scalar(Field::Real, re); }
  static Scalar complex(double re, double im) {
    return Scalar(Field::Complex, cplx(re, im));
  }

  Field field() const { return field_; }
  cplx value() const { return value_; }
  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }
  double modulus() const { return std::abs(value_); }

  Scalar conj() const { return Scalar(field_, std::conj(value_)); }
  Scalar inverse() const { return Scalar(field_, 1.0 / value_); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(join(a.field_, b.field_), a.value_ * b.value_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return Scalar(join(a.field_, b.field_), a.value_ / b.value_);
  }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  Field field_ = Field::Real;
  cplx value_ = 0.0;
};

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

/// Dense row-major matrix. Zero rows or zero columns are allowed and stand
/// for maps into or out of the zero space.
class Matrix {
 public:
  Matrix() = default;

  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(Field field, std::size_t rows, std::size_t cols,
         std::vector<cplx> entries)
      : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw ShapeError("matrix entry count " + std::to_string(data_.size()) +
                       " does not match " + std::to_string(rows_) + "x" +
                       std::to_string(cols_));
    }
    check_field();
  }

  /// Row-by-row literal, e.g. `Matrix::from_rows(Field::Real, {{1, 0}, {0, 1}})`.
  static Matrix from_rows(Field field,
                          std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.begin()->size();
    std::vector<cplx> data;
    data.reserve(m * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw ShapeError("ragged matrix literal");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(field, m, n, std::move(data));
  }

  static Matrix identity(Field field, std::size_t n) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
  }

  static Matrix column(Field field, std::initializer_list<cplx> entries) {
    return Matrix(field, entries.size(), 1, std::vector<cplx>(entries));
  }

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const cplx> entries() const { return data_; }
  std::span<cplx> entries() { return data_; }

  /// Throws FieldMismatch if a real-tagged matrix has an imaginary part.
  void check_field() const {
    if (field_ != Field::Real) return;
    for (const auto& z : data_) {
      if (z.imag() != 0.0) {
        throw FieldMismatch("real matrix with nonzero imaginary entry");
      }
    }
  }

  /// Clears rounding residue in the imaginary parts of a real-tagged matrix.
  Matrix& project_field() {
    if (field_ == Field::Real) {
      for (auto& z : data_) z = cplx(z.real(), 0.0);
    }
    return *this;
  }

  /// Same entries, retagged as complex.
  Matrix as_complex() const {
    Matrix out = *this;
    out.field_ = Field::Complex;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  Field field_ = Field::Real;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch(std::string("field mismatch: ") + field_name(a.field()) +
                        " vs " + field_name(b.field()));
  }
}

inline void require_same_shape(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw ShapeError("cannot multiply " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " by " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out.project_field();
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return out;
}

/// Entrywise scaling. A real matrix only accepts real factors.
inline Matrix scale(cplx z, const Matrix& a) {
  if (a.field() == Field::Real && z.imag() != 0.0) {
    throw FieldMismatch("complex factor applied to a real matrix");
  }
  Matrix out = a;
  for (auto& x : out.entries()) x *= z;
  return out.project_field();
}

/// Kronecker product, left factor major: (a⊗b)(i·p+k, j·q+l) = a(i,j)·b(k,l).
inline Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const std::size_t p = b.rows(), q = b.cols();
  Matrix out(a.field(), a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < q; ++l)
          out(i * p + k, j * q + l) = a(i, j) * b(k, l);
  return out.project_field();
}

/// Block-diagonal sum.
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw ShapeError("hstack: row counts differ");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw ShapeError("vstack: column counts differ");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

/// Columns [first, first + count).
inline Matrix column_block(const Matrix& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) throw ShapeError("column block out of range");
  Matrix out(a.field(), a.rows(), count);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = a(i, first + j);
  return out;
}

/// Rows [first, first + count).
inline Matrix row_block(const Matrix& a, std::size_t first, std::size_t count) {
  if (first + count > a.rows()) throw ShapeError("row block out of range");
  Matrix out(a.field(), count, a.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(first + i, j);
  return out;
}

inline Matrix diagonal(Field field, std::span<const double> d) {
  Matrix out(field, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

// ---------------------------------------------------------------------------
// Jacobi SVD
// ---------------------------------------------------------------------------

/// Thin SVD: a = u·diag(sigma)·v†, with k = min(rows, cols) columns in u
/// and v and sigma sorted nonincreasing.
struct SVDResult {
  Matrix u;
  std::vector<double> sigma;
  Matrix v;
};

namespace detail {

inline constexpr double kJacobiThreshold = 1e-13;
inline constexpr int kJacobiMaxSweeps = 60;

// Column-major scratch: column j of an m-row block lives at [j*m, (j+1)*m).
struct ColumnStore {
  std::size_t m = 0, n = 0;
  std::vector<cplx> data;

  cplx* col(std::size_t j) { return data.data() + j * m; }
  const cplx* col(std::size_t j) const { return data.data() + j * m; }

  static ColumnStore from(const Matrix& a) {
    ColumnStore s{a.rows(), a.cols(), std::vector<cplx>(a.size())};
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) s.data[j * s.m + i] = a(i, j);
    return s;
  }

  static ColumnStore eye(std::size_t n) {
    ColumnStore s{n, n, std::vector<cplx>(n * n)};
    for (std::size_t j = 0; j < n; ++j) s.data[j * n + j] = 1.0;
    return s;
  }

  Matrix to_matrix(Field field) const {
    Matrix out(field, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = data[j * m + i];
    return out.project_field();
  }
};

// Hestenes one-sided Jacobi: rotate column pairs of `a` until they are
// mutually orthogonal, accumulating the same rotations into `v`.
inline void jacobi_orthogonalize(ColumnStore& a, ColumnStore* v) {
  const std::size_t m = a.m, n = a.n;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        cplx* ap = a.col(p);
        cplx* aq = a.col(q);
        double alpha = 0.0, beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(ap[i]);
          beta += std::norm(aq[i]);
          gamma += std::conj(ap[i]) * aq[i];
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= kJacobiThreshold * std::sqrt(alpha * beta)) continue;
        rotated = true;
        // Undo the phase of gamma on column q, then apply a real rotation.
        const cplx phase = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        auto rotate = [&](cplx* x, cplx* y, std::size_t len) {
          for (std::size_t i = 0; i < len; ++i) {
            const cplx xp = x[i];
            const cplx yq = y[i] * phase;
            x[i] = c * xp - s * yq;
            y[i] = s * xp + c * yq;
          }
        };
        rotate(ap, aq, m);
        if (v != nullptr) rotate(v->col(p), v->col(q), v->m);
      }
    }
    if (!rotated) break;
  }
}

// Fills `count` further orthonormal columns, orthogonal to every column
// already in `basis`, by Gram-Schmidt over the standard basis. At each step
// the candidate with the largest residual wins; ties go to the lower index.
inline std::vector<std::vector<cplx>> complete_orthonormal(
    const std::vector<std::vector<cplx>>& basis, std::size_t dim,
    std::size_t count) {
  std::vector<std::vector<cplx>> all = basis;
  std::vector<std::vector<cplx>> added;
  auto project_out = [&](std::vector<cplx>& x) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : all) {
        cplx dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += std::conj(b[i]) * x[i];
        for (std::size_t i = 0; i < dim; ++i) x[i] -= dot * b[i];
      }
    }
  };
  for (std::size_t step = 0; step < count; ++step) {
    std::vector<cplx> best;
    double best_norm = -1.0;
    for (std::size_t e = 0; e < dim; ++e) {
      std::vector<cplx> x(dim, 0.0);
      x[e] = 1.0;
      project_out(x);
      double nrm = 0.0;
      for (const auto& z : x) nrm += std::norm(z);
      nrm = std::sqrt(nrm);
      if (nrm > best_norm + 1e-12) {
        best_norm = nrm;
        best = std::move(x);
      }
    }
    for (auto& z : best) z /= best_norm;
    project_out(best);
    double nrm = 0.0;
    for (const auto& z : best) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    for (auto& z : best) z /= nrm;
    all.push_back(best);
    added.push_back(std::move(best));
  }
  return added;
}

// Index of the first entry of largest modulus.
inline std::size_t pivot_index(const cplx* x, std::size_t len) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double a = std::abs(x[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

// SVD of a tall (m >= n) matrix.
inline SVDResult tall_svd(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  ColumnStore work = ColumnStore::from(a);
  ColumnStore v = ColumnStore::eye(n);
  jacobi_orthogonalize(work, &v);

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(work.col(j)[i]);
    norms[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  const double top = n == 0 ? 0.0 : norms[order[0]];
  const double negligible = std::max(top * 1e-14, std::numeric_limits<double>::min());

  SVDResult out;
  out.sigma.resize(n);
  ColumnStore u{m, n, std::vector<cplx>(m * n)};
  ColumnStore vs{n, n, std::vector<cplx>(n * n)};
  std::vector<std::vector<cplx>> good;
  std::vector<std::size_t> missing;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.sigma[k] = norms[j];
    std::copy(v.col(j), v.col(j) + n, vs.col(k));
    if (norms[j] > negligible) {
      for (std::size_t i = 0; i < m; ++i) u.col(k)[i] = work.col(j)[i] / norms[j];
      good.emplace_back(u.col(k), u.col(k) + m);
    } else {
      missing.push_back(k);
    }
  }
  if (!missing.empty()) {
    auto extra = complete_orthonormal(good, m, missing.size());
    for (std::size_t t = 0; t < missing.size(); ++t)
      std::copy(extra[t].begin(), extra[t].end(), u.col(missing[t]));
  }
  out.u = u.to_matrix(a.field());
  out.v = vs.to_matrix(a.field());
  return out;
}

}  // namespace detail

/// One-sided Jacobi SVD. Deterministic for a fixed input: fixed cyclic sweep
/// order, at most 60 sweeps, stopping once every column pair satisfies
/// |⟨a_p, a_q⟩| ≤ 1e-13·‖a_p‖·‖a_q‖. Phase convention: the largest-modulus
/// entry of each left singular vector is real and positive, and the matching
/// right vector carries the same phase so that a·v = u·diag(sigma) holds.
inline SVDResult svd(const Matrix& a) {
  SVDResult out;
  if (a.rows() >= a.cols()) {
    out = detail::tall_svd(a);
  } else {
    SVDResult t = detail::tall_svd(adjoint(a));
    out.u = std::move(t.v);
    out.v = std::move(t.u);
    out.sigma = std::move(t.sigma);
  }
  for (std::size_t j = 0; j < out.sigma.size(); ++j) {
    std::vector<cplx> col(out.u.rows());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = out.u(i, j);
    const std::size_t piv = detail::pivot_index(col.data(), col.size());
    const cplx x = col[piv];
    if (std::abs(x) == 0.0) continue;
    const cplx phase = std::conj(x / std::abs(x));
    for (std::size_t i = 0; i < out.u.rows(); ++i) out.u(i, j) *= phase;
    out.u(piv, j) = std::abs(out.u(piv, j));
    for (std::size_t i = 0; i < out.v.rows(); ++i) out.v(i, j) *= phase;
  }
  out.u.project_field();
  out.v.project_field();
  return out;
}

/// Singular values only (no vectors accumulated), nonincreasing.
inline std::vector<double> singular_values(const Matrix& a) {
  detail::ColumnStore work =
      detail::ColumnStore::from(a.rows() >= a.cols() ? a : adjoint(a));
  detail::jacobi_orthogonalize(work, nullptr);
  std::vector<double> s(work.n);
  for (std::size_t j = 0; j < work.n; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < work.m; ++i) acc += std::norm(work.col(j)[i]);
    s[j] = std::sqrt(acc);
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

/// Operator norm: the largest singular value, 0 for empty or zero matrices.
inline double opnorm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a).front();
}

/// Number of singular values at or above `tol_rank`.
inline std::size_t rank(const Matrix& a, double tol_rank = kTol.rank) {
  const auto s = singular_values(a);
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](double x) { return x >= tol_rank; }));
}

/// ‖a − b‖ in operator norm.
inline double distance(const Matrix& a, const Matrix& b) { return opnorm(a - b); }

/// ‖a − b‖ ≤ tol·max(1, ‖a‖, ‖b‖).
inline bool approx_equal(const Matrix& a, const Matrix& b, double tol = kTol.eq) {
  require_same_shape(a, b);
  const double scale = std::max({1.0, opnorm(a), opnorm(b)});
  return distance(a, b) <= tol * scale;
}

/// ‖a†a − I‖, the failure of the columns of `a` to be orthonormal.
inline double isometry_defect(const Matrix& a) {
  return distance(adjoint(a) * a, Matrix::identity(a.field(), a.cols()));
}

namespace detail {

inline Matrix leading_columns(const Matrix& a, std::size_t r) {
  return column_block(a, 0, r);
}

inline std::size_t count_at_least(const std::vector<double>& s, double tol) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [&](double x) { return x >= tol; }));
}

}  // namespace detail

/// Orthonormal basis of the range of `a`: the left singular vectors whose
/// singular value is at least `tol_rank`.
inline Matrix range_isometry(const Matrix& a, double tol_rank = kTol.rank) {
  const SVDResult s = svd(a);
  return detail::leading_columns(s.u, detail::count_at_least(s.sigma, tol_rank));
}

/// Orthonormal basis of the orthogonal complement of the column space of an
/// isometry `q`, with the singular-vector phase convention applied.
inline Matrix orthonormal_complement(const Matrix& q) {
  const std::size_t dim = q.rows();
  std::vector<std::vector<cplx>> basis;
  for (std::size_t j = 0; j < q.cols(); ++j) {
    std::vector<cplx> col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = q(i, j);
    basis.push_back(std::move(col));
  }
  const auto extra = detail::complete_orthonormal(basis, dim, dim - q.cols());
  Matrix out(q.field(), dim, extra.size());
  for (std::size_t j = 0; j < extra.size(); ++j) {
    const std::size_t piv = detail::pivot_index(extra[j].data(), dim);
    const cplx x = extra[j][piv];
    const cplx phase = std::abs(x) == 0.0 ? cplx(1.0) : std::conj(x / std::abs(x));
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = extra[j][i] * phase;
    out(piv, j) = std::abs(out(piv, j));
  }
  return out.project_field();
}

/// Orthonormal basis of the null space of `a`: the complement of the range
/// of a†, i.e. of the right singular vectors with sigma ≥ `tol_rank`.
inline Matrix null_basis(const Matrix& a, double tol_rank = kTol.rank) {
  return orthonormal_complement(range_isometry(adjoint(a), tol_rank));
}

/// a = p·u with p = (a·a†)^{1/2} positive semidefinite and u a partial
/// isometry whose initial space is the range of a† and final space the
/// range of a.
struct PolarDecomposition {
  Matrix p;
  Matrix u;
};

inline PolarDecomposition polar_left(const Matrix& a, double tol_rank = kTol.rank) {
  const SVDResult s = svd(a);
  const std::size_t r = detail::count_at_least(s.sigma, tol_rank);
  const Matrix ur = detail::leading_columns(s.u, r);
  const Matrix vr = detail::leading_columns(s.v, r);
  PolarDecomposition out;
  out.p = s.u * diagonal(a.field(), s.sigma) * adjoint(s.u);
  out.u = ur * adjoint(vr);
  return out;
}

/// Moore-Penrose pseudo-inverse, dropping singular values below `tol_rank`.
inline Matrix pseudo_inverse(const Matrix& a, double tol_rank = kTol.rank) {
  const SVDResult s = svd(a);
  const std::size_t r = detail::count_at_least(s.sigma, tol_rank);
  std::vector<double> inv(r);
  for (std::size_t i = 0; i < r; ++i) inv[i] = 1.0 / s.sigma[i];
  return detail::leading_columns(s.v, r) * diagonal(a.field(), inv) *
         adjoint(detail::leading_columns(s.u, r));
}

}  // namespace daghilb
