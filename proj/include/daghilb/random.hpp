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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "daghilb/concat.hpp"
#include "daghilb/errors.hpp"
#include "daghilb/numkernel.hpp"

namespace daghilb {

/// SplitMix64: a counter advanced by a fixed odd increment and passed
/// through a bijective mixer. Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : counter_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  result_type operator()() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix(counter_);
  }

  /// An independent stream keyed by `name`.
  static SplitMix64 stream(std::uint64_t seed, std::string_view name) {
    return SplitMix64(mix(seed ^ mix(fnv1a(name))));
  }

  static constexpr std::uint64_t fnv1a(std::string_view bytes,
                                       std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

 private:
  std::uint64_t counter_;
};

/// Draws instances for one check and keeps an FNV-1a digest of every value
/// drawn, so a report can name the exact instance set it ran on.
class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream, Field field, std::size_t dim_max)
      : rng_(SplitMix64::stream(seed, stream)), field_(field), dim_max_(dim_max) {
    if (dim_max_ == 0) throw std::invalid_argument("dim_max must be at least 1");
  }

  Field field() const { return field_; }
  std::size_t dim_max() const { return dim_max_; }
  HObj obj(std::size_t dim) const { return {field_, dim}; }

  double normal() { return absorb(normal_(rng_)); }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return absorb(std::uniform_real_distribution<double>(lo, hi)(rng_));
  }

  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi) {
    const auto v = std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    absorb(static_cast<double>(v));
    return v;
  }

  /// Uniform dimension in [lo, min(hi, dim_max)], at least lo.
  std::size_t dim(std::size_t lo = 1, std::size_t hi = std::numeric_limits<std::size_t>::max()) {
    return index(lo, std::max(lo, std::min(hi, dim_max_)));
  }

  /// ±1 over ℝ, e^{iθ} over ℂ.
  cplx phase() {
    if (field_ == Field::Real) return uniform() < 0.5 ? -1.0 : 1.0;
    const double theta = uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(theta), std::sin(theta)};
  }

  /// A scalar of modulus uniform in [lo, hi] and random phase.
  Scalar scalar(double lo, double hi) {
    const double m = uniform(lo, hi);
    return Scalar(field_, m * phase());
  }

  /// Standard Gaussian entries (real and imaginary parts of variance ½ over ℂ).
  Matrix gaussian(std::size_t rows, std::size_t cols) {
    Matrix m(field_, rows, cols);
    for (auto& x : m.entries()) {
      if (field_ == Field::Real) {
        x = normal();
      } else {
        const double a = normal(), b = normal();
        x = cplx(a, b) * (1.0 / std::numbers::sqrt2);
      }
    }
    return m;
  }

  std::string digest() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest_));
    return buf;
  }

 private:
  double absorb(double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; ++i) {
      digest_ ^= (bits >> (8 * i)) & 0xffU;
      digest_ *= 0x100000001b3ULL;
    }
    return x;
  }

  SplitMix64 rng_;
  std::normal_distribution<double> normal_;
  Field field_;
  std::size_t dim_max_;
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
};

namespace detail {

// Modified Gram-Schmidt with one reorthogonalisation pass. Returns false if
// the columns are numerically dependent.
inline bool orthonormalize_columns(Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        cplx c = 0.0;
        for (std::size_t r = 0; r < m; ++r) c += std::conj(a(r, i)) * a(r, j);
        for (std::size_t r = 0; r < m; ++r) a(r, j) -= c * a(r, i);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < m; ++r) norm += std::norm(a(r, j));
    norm = std::sqrt(norm);
    if (norm < 1e-8) return false;
    for (std::size_t r = 0; r < m; ++r) a(r, j) /= norm;
  }
  a.project_field();
  return true;
}

}  // namespace detail

/// Gaussian matrix scaled to operator norm u ~ U[0, 1].
inline ConMor gen_contraction(Sampler& s, const HObj& dom, const HObj& cod) {
  Matrix g = s.gaussian(cod.dim, dom.dim);
  const double target = s.uniform();
  const double n = opnorm(g);
  if (n > 0.0) g = scale(target / n, g);
  return ConMor::admit(Mor(dom, cod, std::move(g)));
}

/// Orthonormalised Gaussian columns. Throws Inadmissible if dom > cod.
inline ConMor gen_isometry(Sampler& s, const HObj& dom, const HObj& cod) {
  if (dom.dim > cod.dim) {
    throw Inadmissible("no isometry from dimension " + std::to_string(dom.dim) +
                       " into dimension " + std::to_string(cod.dim));
  }
  for (;;) {
    Matrix g = s.gaussian(cod.dim, dom.dim);
    if (detail::orthonormalize_columns(g)) return ConMor::admit(Mor(dom, cod, std::move(g)));
  }
}

inline ConMor gen_unitary(Sampler& s, const HObj& h) { return gen_isometry(s, h, h); }

/// w∘v† for isometries v: R → dom, w: R → cod of a random rank r.
inline ConMor gen_partial_isometry(Sampler& s, const HObj& dom, const HObj& cod) {
  const HObj r{dom.field, s.index(0, std::min(dom.dim, cod.dim))};
  const ConMor v = gen_isometry(s, r, dom);
  const ConMor w = gen_isometry(s, r, cod);
  return ConMor::admit(compose(w.mor(), dagger(v.mor())));
}

/// v·diag(d)·v† with v unitary and d ~ U[0, 1].
inline ConMor gen_positive_contraction(Sampler& s, const HObj& h) {
  const ConMor v = gen_unitary(s, h);
  std::vector<double> d(h.dim);
  for (auto& x : d) x = s.uniform();
  return ConMor::admit(Mor(h, h, v.mat() * diagonal(h.field, d) * adjoint(v.mat())));
}

/// w·diag(d)·v† with w an isometry, v unitary and d ~ U[lo, 1]; injective
/// whenever lo > 0.
inline ConMor gen_injective(Sampler& s, const HObj& dom, const HObj& cod, double lo = 0.05) {
  const ConMor w = gen_isometry(s, dom, cod);
  const ConMor v = gen_unitary(s, dom);
  std::vector<double> d(dom.dim);
  for (auto& x : d) x = s.uniform(lo, 1.0);
  return ConMor::admit(Mor(dom, cod, w.mat() * diagonal(dom.field, d) * adjoint(v.mat())));
}

/// Gaussian matrix scaled to operator norm ~ U[0, max_norm].
inline Mor gen_bounded(Sampler& s, const HObj& dom, const HObj& cod, double max_norm) {
  Matrix g = s.gaussian(cod.dim, dom.dim);
  const double target = s.uniform(0.0, max_norm);
  const double n = opnorm(g);
  if (n > 0.0) g = scale(target / n, g);
  return Mor(dom, cod, std::move(g));
}

}  // namespace daghilb
