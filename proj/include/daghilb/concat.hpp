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

// The category of finite-dimensional Hilbert spaces and linear contractions:
// objects, bounded maps, contractions, and the constructions (dagger,
// monoidal structure, equalisers, kernels, polar witnesses, ...) that live
// inside it.
//
// Conventions: tensor products are Kronecker products with the left factor
// major; direct sums are block-diagonal with the left summand first. Every
// structural isomorphism is an explicit permutation matrix under these
// conventions.

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "daghilb/errors.hpp"
#include "daghilb/numkernel.hpp"
#include "daghilb/tolerances.hpp"

namespace daghilb {

// ---------------------------------------------------------------------------
// Objects and morphisms
// ---------------------------------------------------------------------------

/// A finite-dimensional Hilbert space. dim 0 is the zero object, dim 1 the
/// tensor unit.
struct HObj {
  Field field = Field::Complex;
  std::size_t dim = 0;

  static HObj unit(Field f) { return {f, 1}; }
  static HObj zero(Field f) { return {f, 0}; }

  friend bool operator==(const HObj&, const HObj&) = default;
};

inline std::string to_string(const HObj& h) {
  return std::string(field_name(h.field)) + "^" + std::to_string(h.dim);
}

inline HObj tensor(const HObj& h, const HObj& k) {
  if (h.field != k.field) throw FieldMismatch("tensor of objects over different fields");
  return {h.field, h.dim * k.dim};
}

inline HObj oplus(const HObj& h, const HObj& k) {
  if (h.field != k.field) throw FieldMismatch("sum of objects over different fields");
  return {h.field, h.dim + k.dim};
}

/// A bounded linear map dom → cod.
class Mor {
 public:
  Mor(HObj dom, HObj cod, Matrix mat)
      : dom_(dom), cod_(cod), mat_(std::move(mat)) {
    if (dom_.field != cod_.field || mat_.field() != dom_.field) {
      throw FieldMismatch("morphism field tags disagree");
    }
    if (mat_.rows() != cod_.dim || mat_.cols() != dom_.dim) {
      throw ShapeError("matrix " + std::to_string(mat_.rows()) + "x" +
                       std::to_string(mat_.cols()) + " does not fit " +
                       to_string(dom_) + " -> " + to_string(cod_));
    }
  }

  /// Domain and codomain read off the matrix shape.
  explicit Mor(Matrix mat)
      : Mor(HObj{mat.field(), mat.cols()}, HObj{mat.field(), mat.rows()}, mat) {}

  const HObj& dom() const { return dom_; }
  const HObj& cod() const { return cod_; }
  const Matrix& mat() const { return mat_; }
  Field field() const { return dom_.field; }

  double norm() const { return opnorm(mat_); }

  friend bool operator==(const Mor&, const Mor&) = default;

 private:
  HObj dom_;
  HObj cod_;
  Matrix mat_;
};

/// A morphism of norm at most 1: the morphisms of the category.
class ConMor {
 public:
  /// Admits `m` if ‖m‖ ≤ 1 + tol_con. Norms in (1, 1 + tol_con] are scaled
  /// down to exactly 1; anything larger throws Inadmissible.
  static ConMor admit(Mor m, double tol_con = kTol.con) {
    const double n = m.norm();
    if (n > 1.0 + tol_con) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "not a contraction: operator norm " << n << " exceeds 1";
      throw Inadmissible(msg.str());
    }
    if (n > 1.0) m = Mor(m.dom(), m.cod(), scale(1.0 / n, m.mat()));
    return ConMor(std::move(m));
  }

  static ConMor admit(Matrix m, double tol_con = kTol.con) {
    return admit(Mor(std::move(m)), tol_con);
  }

  static std::optional<ConMor> try_admit(Mor m, double tol_con = kTol.con) {
    try {
      return admit(std::move(m), tol_con);
    } catch (const Inadmissible&) {
      return std::nullopt;
    }
  }

  /// Wraps `m` without checking its norm. For results that are contractions
  /// by construction (composites, daggers, sums) and for deliberately
  /// corrupted test instances.
  static ConMor unchecked(Mor m) { return ConMor(std::move(m)); }
  static ConMor unchecked(Matrix m) { return ConMor(Mor(std::move(m))); }

  const Mor& mor() const { return inner_; }
  const Matrix& mat() const { return inner_.mat(); }
  const HObj& dom() const { return inner_.dom(); }
  const HObj& cod() const { return inner_.cod(); }
  Field field() const { return inner_.field(); }
  double norm() const { return inner_.norm(); }

  friend bool operator==(const ConMor&, const ConMor&) = default;

 private:
  explicit ConMor(Mor m) : inner_(std::move(m)) {}
  Mor inner_;
};

// ---------------------------------------------------------------------------
// Category structure
// ---------------------------------------------------------------------------

inline ConMor identity(const HObj& h) {
  return ConMor::unchecked(Mor(h, h, Matrix::identity(h.field, h.dim)));
}

inline Mor compose(const Mor& g, const Mor& f) {
  if (!(f.cod() == g.dom())) {
    throw ShapeError("cannot compose " + to_string(f.dom()) + " -> " +
                     to_string(f.cod()) + " with " + to_string(g.dom()) +
                     " -> " + to_string(g.cod()));
  }
  return Mor(f.dom(), g.cod(), g.mat() * f.mat());
}

/// g ∘ f.
inline ConMor compose(const ConMor& g, const ConMor& f) {
  return ConMor::unchecked(compose(g.mor(), f.mor()));
}

inline Mor dagger(const Mor& f) { return Mor(f.cod(), f.dom(), adjoint(f.mat())); }

/// Conjugate transpose; exactly involutive.
inline ConMor dagger(const ConMor& f) { return ConMor::unchecked(dagger(f.mor())); }

inline Mor tensor(const Mor& f, const Mor& g) {
  return Mor(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()), kron(f.mat(), g.mat()));
}

/// f ⊗ g; ‖f ⊗ g‖ = ‖f‖·‖g‖.
inline ConMor tensor(const ConMor& f, const ConMor& g) {
  return ConMor::unchecked(tensor(f.mor(), g.mor()));
}

inline Mor oplus(const Mor& f, const Mor& g) {
  return Mor(oplus(f.dom(), g.dom()), oplus(f.cod(), g.cod()),
             direct_sum(f.mat(), g.mat()));
}

/// f ⊕ g; ‖f ⊕ g‖ = max(‖f‖, ‖g‖).
inline ConMor oplus(const ConMor& f, const ConMor& g) {
  return ConMor::unchecked(oplus(f.mor(), g.mor()));
}

/// f₁ ⊕ … ⊕ fₙ (left-nested); an empty list gives id on the zero object.
inline ConMor oplus_all(std::span<const ConMor> fs, Field field) {
  ConMor acc = identity(HObj::zero(field));
  for (const auto& f : fs) acc = oplus(acc, f);
  return acc;
}

inline ConMor zero(const HObj& h, const HObj& k) {
  if (h.field != k.field) throw FieldMismatch("zero map between different fields");
  return ConMor::unchecked(Mor(h, k, Matrix(h.field, k.dim, h.dim)));
}

/// x ↦ (x, 0).
inline ConMor inl(const HObj& h, const HObj& k) {
  return oplus(identity(h), zero(HObj::zero(h.field), k));
}

/// y ↦ (0, y).
inline ConMor inr(const HObj& h, const HObj& k) {
  return oplus(zero(HObj::zero(h.field), h), identity(k));
}

// ---------------------------------------------------------------------------
// Structural isomorphisms
// ---------------------------------------------------------------------------

namespace detail {

// Permutation unitary sending basis vector j of `dom` to basis vector
// target(j) of `cod`.
template <typename Target>
ConMor permutation(const HObj& dom, const HObj& cod, Target target) {
  Matrix m(dom.field, cod.dim, dom.dim);
  for (std::size_t j = 0; j < dom.dim; ++j) m(target(j), j) = 1.0;
  return ConMor::unchecked(Mor(dom, cod, std::move(m)));
}

}  // namespace detail

/// I ⊗ H → H. The identity matrix under the Kronecker convention.
inline ConMor tensor_left_unitor(const HObj& h) {
  return detail::permutation(tensor(HObj::unit(h.field), h), h,
                             [](std::size_t j) { return j; });
}

/// H ⊗ I → H.
inline ConMor tensor_right_unitor(const HObj& h) {
  return detail::permutation(tensor(h, HObj::unit(h.field)), h,
                             [](std::size_t j) { return j; });
}

/// (H ⊗ K) ⊗ L → H ⊗ (K ⊗ L).
inline ConMor tensor_associator(const HObj& h, const HObj& k, const HObj& l) {
  return detail::permutation(tensor(tensor(h, k), l), tensor(h, tensor(k, l)),
                             [](std::size_t j) { return j; });
}

/// H ⊗ K → K ⊗ H, (a, b) ↦ (b, a).
inline ConMor tensor_braiding(const HObj& h, const HObj& k) {
  return detail::permutation(tensor(h, k), tensor(k, h), [&](std::size_t j) {
    const std::size_t a = j / k.dim, b = j % k.dim;
    return b * h.dim + a;
  });
}

/// 0 ⊕ H → H.
inline ConMor oplus_left_unitor(const HObj& h) {
  return detail::permutation(oplus(HObj::zero(h.field), h), h,
                             [](std::size_t j) { return j; });
}

/// H ⊕ 0 → H.
inline ConMor oplus_right_unitor(const HObj& h) {
  return detail::permutation(oplus(h, HObj::zero(h.field)), h,
                             [](std::size_t j) { return j; });
}

/// (H ⊕ K) ⊕ L → H ⊕ (K ⊕ L).
inline ConMor oplus_associator(const HObj& h, const HObj& k, const HObj& l) {
  return detail::permutation(oplus(oplus(h, k), l), oplus(h, oplus(k, l)),
                             [](std::size_t j) { return j; });
}

/// H ⊕ K → K ⊕ H.
inline ConMor oplus_braiding(const HObj& h, const HObj& k) {
  return detail::permutation(oplus(h, k), oplus(k, h), [&](std::size_t j) {
    return j < h.dim ? k.dim + j : j - h.dim;
  });
}

/// H ⊗ (K ⊕ L) → (H ⊗ K) ⊕ (H ⊗ L).
inline ConMor distributor(const HObj& h, const HObj& k, const HObj& l) {
  const std::size_t width = k.dim + l.dim;
  return detail::permutation(
      tensor(h, oplus(k, l)), oplus(tensor(h, k), tensor(h, l)), [&](std::size_t j) {
        const std::size_t a = j / width, b = j % width;
        return b < k.dim ? a * k.dim + b : h.dim * k.dim + a * l.dim + (b - k.dim);
      });
}

/// (H ⊕ K) ⊗ L → (H ⊗ L) ⊕ (K ⊗ L). The identity matrix under the
/// left-major Kronecker convention.
inline ConMor distributor_right(const HObj& h, const HObj& k, const HObj& l) {
  return detail::permutation(tensor(oplus(h, k), l),
                             oplus(tensor(h, l), tensor(k, l)),
                             [](std::size_t j) { return j; });
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// The scalar z as a morphism I → I.
inline Mor scalar_mor(const Scalar& z, Field field) {
  if (field == Field::Real && z.im() != 0.0) {
    throw FieldMismatch("complex scalar in a real category");
  }
  Matrix m(field, 1, 1);
  m(0, 0) = z.value();
  return Mor(std::move(m));
}

/// z • f, i.e. H ≅ I ⊗ H → I ⊗ K ≅ K. Always a bounded map; a contraction
/// when |z| ≤ 1.
inline Mor scalar_act(const Scalar& z, const Mor& f) {
  return Mor(f.dom(), f.cod(), scale(z.value(), f.mat()));
}

inline Mor scalar_act(const Scalar& z, const ConMor& f) { return scalar_act(z, f.mor()); }

/// z • f for |z| ≤ 1 (up to tol_con), kept inside the category.
inline ConMor scaled(const Scalar& z, const ConMor& f, double tol_con = kTol.con) {
  if (z.modulus() > 1.0 + tol_con) {
    throw Inadmissible("scalar of modulus " + std::to_string(z.modulus()) +
                       " does not act by a contraction");
  }
  return ConMor::unchecked(scalar_act(z, f));
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

inline bool approx_equal(const Mor& a, const Mor& b, double tol = kTol.eq) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) return false;
  return approx_equal(a.mat(), b.mat(), tol);
}

inline bool approx_equal(const ConMor& a, const ConMor& b, double tol = kTol.eq) {
  return approx_equal(a.mor(), b.mor(), tol);
}

/// f†f = I (a dagger monomorphism).
inline bool is_isometry(const Mor& f, double tol = kTol.ortho) {
  return isometry_defect(f.mat()) <= tol;
}

/// f†f = I and ff† = I (a dagger isomorphism).
inline bool is_unitary(const Mor& f, double tol = kTol.ortho) {
  return f.dom().dim == f.cod().dim && is_isometry(f, tol) && is_isometry(dagger(f), tol);
}

/// Epimorphisms are the surjections: rank equals codomain dimension.
inline bool is_epi(const Mor& f, double tol_rank = kTol.rank) {
  return rank(f.mat(), tol_rank) == f.cod().dim;
}

/// Monomorphisms are the injections: rank equals domain dimension.
inline bool is_mono(const Mor& f, double tol_rank = kTol.rank) {
  return rank(f.mat(), tol_rank) == f.dom().dim;
}

// ---------------------------------------------------------------------------
// Equalisers, kernels, cokernels
// ---------------------------------------------------------------------------

/// The dagger equaliser of a parallel pair, with its universal property.
struct DaggerEqualizer {
  ConMor inclusion;  // isometry E → H
  Mor left;
  Mor right;

  /// The unique m with h = inclusion ∘ m, for h equalising the pair.
  /// Throws Inadmissible if h does not equalise within `tol`.
  ConMor mediate(const ConMor& h, double tol = kTol.eq) const {
    if (!approx_equal(compose(left, h.mor()), compose(right, h.mor()), tol)) {
      throw Inadmissible("cone does not equalise the pair");
    }
    ConMor m = compose(dagger(inclusion), h);
    if (!approx_equal(compose(inclusion, m), h, tol)) {
      throw Inadmissible("cone does not factor through the equaliser");
    }
    return m;
  }
};

inline DaggerEqualizer dagger_equalizer(const Mor& f, const Mor& g,
                                        double tol_rank = kTol.rank) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw ShapeError("equaliser of non-parallel morphisms");
  }
  Matrix basis = null_basis(f.mat() - g.mat(), tol_rank);
  const HObj e{f.field(), basis.cols()};
  return {ConMor::unchecked(Mor(e, f.dom(), std::move(basis))), f, g};
}

inline DaggerEqualizer dagger_equalizer(const ConMor& f, const ConMor& g,
                                        double tol_rank = kTol.rank) {
  return dagger_equalizer(f.mor(), g.mor(), tol_rank);
}

/// Dagger kernel: the dagger equaliser of f and 0.
inline DaggerEqualizer dagger_kernel(const ConMor& f, double tol_rank = kTol.rank) {
  return dagger_equalizer(f, zero(f.dom(), f.cod()), tol_rank);
}

/// Cokernel of an isometry m: N → H, the orthogonal projection
/// H ≅ N ⊕ N^⊥ → N^⊥ (i.e. inr† after the unitary [m | complement]).
inline ConMor cokernel(const ConMor& m, double tol = kTol.ortho) {
  if (!is_isometry(m.mor(), tol)) throw Inadmissible("cokernel of a non-isometry");
  Matrix q = orthonormal_complement(m.mat());
  const HObj perp{m.field(), q.cols()};
  return ConMor::unchecked(Mor(m.cod(), perp, adjoint(q)));
}

/// Cokernel of an arbitrary morphism: ker(t†)†.
inline ConMor cokernel_of(const ConMor& t, double tol_rank = kTol.rank) {
  return dagger(dagger_kernel(dagger(t), tol_rank).inclusion);
}

/// Orthogonal projector onto the column space of an isometry.
inline Matrix range_projector(const ConMor& m) { return m.mat() * adjoint(m.mat()); }

// ---------------------------------------------------------------------------
// Epi / dagger-mono factorisation
// ---------------------------------------------------------------------------

/// t = k ∘ e with e: H → E epic and k: E → K a dagger monomorphism.
struct Factorization {
  ConMor e;
  ConMor k;
};

inline Factorization factor(const ConMor& t, double tol_rank = kTol.rank) {
  Matrix basis = range_isometry(t.mat(), tol_rank);
  const HObj e_obj{t.field(), basis.cols()};
  ConMor k = ConMor::unchecked(Mor(e_obj, t.cod(), std::move(basis)));
  ConMor e = compose(dagger(k), t);
  return {std::move(e), std::move(k)};
}

// ---------------------------------------------------------------------------
// Positivity: subobjects are determined by r ∘ r†
// ---------------------------------------------------------------------------

/// For injective r: H → L and s: K → L with r∘r† = s∘s†, the unitary
/// t = v†∘u: H → K with r = s∘t, where r = p·u and s = p·v are left polar
/// decompositions.
inline ConMor positivity_witness(const ConMor& r, const ConMor& s,
                                 const Tolerances& tol = kTol) {
  if (!(r.cod() == s.cod())) throw ShapeError("positivity witness: codomains differ");
  if (!is_mono(r.mor(), tol.rank) || !is_mono(s.mor(), tol.rank)) {
    throw Inadmissible("positivity witness needs injective maps");
  }
  if (r.dom().dim != s.dom().dim) {
    throw Inadmissible("positivity witness: ranks differ");
  }
  const Matrix rr = r.mat() * adjoint(r.mat());
  const Matrix ss = s.mat() * adjoint(s.mat());
  if (!approx_equal(rr, ss, tol.eq)) {
    throw Inadmissible("r r^dagger differs from s s^dagger");
  }
  const PolarDecomposition pr = polar_left(r.mat(), tol.rank);
  const PolarDecomposition ps = polar_left(s.mat(), tol.rank);
  return ConMor::unchecked(Mor(r.dom(), s.dom(), adjoint(ps.u) * pr.u));
}

/// Given t with t†∘t = |z|²·id, returns the dagger monomorphism s with
/// t = z • s. Built as s = k ∘ u where t = k ∘ e is the factorisation and u
/// is the unitary with e = z • u supplied by the positivity witness.
inline ConMor extract_dagger_mono(const ConMor& t, const Scalar& z,
                                  const Tolerances& tol = kTol) {
  if (z.modulus() <= tol.rank) throw Inadmissible("dagger-mono extraction with zero scalar");
  const Matrix expected =
      scale(std::norm(z.value()), Matrix::identity(t.field(), t.dom().dim));
  if (!approx_equal(adjoint(t.mat()) * t.mat(), expected, tol.eq)) {
    throw Inadmissible("t^dagger t is not |z|^2 id");
  }
  const Factorization f = factor(t, tol.rank);
  // e† and conj(z)·id have the same positive map e†e = |z|²·id.
  const ConMor zid = scaled(z.conj(), identity(t.dom()), tol.con);
  const ConMor w = positivity_witness(dagger(f.e), zid, tol);
  return compose(f.k, dagger(w));
}

// ---------------------------------------------------------------------------
// Subobjects of the unit
// ---------------------------------------------------------------------------

/// The class in [0, 1] of a monomorphism into I: 0 for the map out of the
/// zero object, |m| for an injective scalar.
inline double subobject_class(const ConMor& m, double tol_rank = kTol.rank) {
  if (m.cod().dim != 1) throw ShapeError("subobject class: codomain is not I");
  if (m.dom().dim >= 2) {
    throw Inadmissible("a monomorphism into I has domain of dimension at most 1");
  }
  if (m.dom().dim == 0) return 0.0;
  const double a = std::abs(m.mat()(0, 0));
  if (a <= tol_rank) throw Inadmissible("zero scalar is not monic");
  return a;
}

/// A contraction f with m = target ∘ f, if one exists. `target` must be
/// monic; the candidate is pinv(target)·m.
inline std::optional<ConMor> factors_through(const ConMor& m, const ConMor& target,
                                             const Tolerances& tol = kTol) {
  if (!(m.cod() == target.cod())) throw ShapeError("factors_through: codomains differ");
  if (!is_mono(target.mor(), tol.rank)) throw Inadmissible("factoring target is not monic");
  Mor f(m.dom(), target.dom(), pseudo_inverse(target.mat(), tol.rank) * m.mat());
  if (!approx_equal(target.mat() * f.mat(), m.mat(), tol.eq)) return std::nullopt;
  return ConMor::try_admit(std::move(f), tol.con);
}

// ---------------------------------------------------------------------------
// Witnesses used by the axioms and the final characterisation
// ---------------------------------------------------------------------------

/// s = (½, ½): I → I ⊕ I.
inline ConMor mixture(Field field) {
  return ConMor::unchecked(Matrix::column(field, {0.5, 0.5}));
}

/// v = (√z, √(1−z)): I → I ⊕ I, an isometry with v† ∘ (1 ⊕ 0) ∘ v = z.
struct Compression {
  ConMor v;
  double value;     // the compressed scalar
  double residual;  // |value − z|
};

inline Compression scalar_as_compression(double z, Field field = Field::Real) {
  if (!(z >= 0.0 && z <= 1.0)) throw Inadmissible("compression scalar outside [0, 1]");
  ConMor v = ConMor::unchecked(Matrix::column(field, {std::sqrt(z), std::sqrt(1.0 - z)}));
  const HObj i = HObj::unit(field);
  const ConMor proj = oplus(identity(i), zero(i, i));
  const Matrix c = compose(dagger(v), compose(proj, v)).mat();
  const double value = c(0, 0).real();
  return {std::move(v), value, std::abs(value - z)};
}

/// t = (u1 + u2)/2 with u1, u2 unitary, for a complex square contraction.
struct RussoDye {
  Mor u1;
  Mor u2;
};

/// With t = w·diag(σ)·v† (so t = u·p, u = w·v†, p = v·diag(σ)·v†):
/// u_{1,2} = u·(p ± i·(I − p²)^{1/2}) = w·diag(σ ± i·√(1−σ²))·v†.
inline RussoDye russo_dye(const Mor& t, double tol_con = kTol.con) {
  if (t.field() != Field::Complex) {
    throw FieldMismatch("averaging by two unitaries needs the complex field");
  }
  if (t.dom().dim != t.cod().dim) throw ShapeError("russo_dye needs a square map");
  const SVDResult s = svd(t.mat());
  if (!s.sigma.empty() && s.sigma.front() > 1.0 + tol_con) {
    throw Inadmissible("russo_dye input is not a contraction");
  }
  const std::size_t n = s.sigma.size();
  Matrix plus(Field::Complex, n, n), minus(Field::Complex, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::min(s.sigma[i], 1.0);
    const double d = std::sqrt(std::max(0.0, 1.0 - c * c));
    plus(i, i) = cplx(c, d);
    minus(i, i) = cplx(c, -d);
  }
  const Matrix vh = adjoint(s.v);
  return {Mor(t.dom(), t.cod(), s.u * plus * vh), Mor(t.dom(), t.cod(), s.u * minus * vh)};
}

/// w: H → H^{⊕n}, x ↦ (x, …, x)/√n. An isometry with
/// w† ∘ (t₁ ⊕ … ⊕ tₙ) ∘ w = (t₁ + … + tₙ)/n.
inline ConMor averaging_compression(std::size_t n, const HObj& h) {
  if (n == 0) throw Inadmissible("averaging over zero summands");
  Matrix w(h.field, n * h.dim, h.dim);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < h.dim; ++i) w(b * h.dim + i, i) = c;
  return ConMor::unchecked(Mor(h, HObj{h.field, n * h.dim}, std::move(w)));
}

/// Whether f and g agree on every pure tensor x ⊗ y of computational basis
/// vectors of H ⊗ K (which span H ⊗ K).
inline bool separator_check(const ConMor& f, const ConMor& g, const HObj& h,
                            const HObj& k, double tol = kTol.eq) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw ShapeError("separator check on non-parallel maps");
  }
  if (!(f.dom() == tensor(h, k))) throw ShapeError("domain is not the stated tensor");
  const double ref = std::max({1.0, max_abs(f.mat()), max_abs(g.mat())});
  for (std::size_t x = 0; x < h.dim; ++x) {
    for (std::size_t y = 0; y < k.dim; ++y) {
      Matrix xy = kron(column_block(Matrix::identity(h.field, h.dim), x, 1),
                       column_block(Matrix::identity(k.field, k.dim), y, 1));
      const Matrix d = f.mat() * xy - g.mat() * xy;
      if (frobenius_norm(d) > tol * ref) return false;
    }
  }
  return true;
}

}  // namespace daghilb
