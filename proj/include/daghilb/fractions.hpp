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

// Localisation of the contraction category at its nonzero scalars.
//
// A morphism is a formal fraction [t/z] of a contraction t and a nonzero
// scalar z with |z| ≤ 1, up to [t/z] ~ [t'/z'] ⇔ z'•t = z•t'. Identity is
// [id/1] and composition multiplies numerators and denominators. The functor
// to_hilb([t/z]) = t/z identifies the result with all bounded maps.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <utility>

#include "daghilb/concat.hpp"
#include "daghilb/errors.hpp"
#include "daghilb/numkernel.hpp"
#include "daghilb/tolerances.hpp"

namespace daghilb {

class Fraction {
 public:
  Fraction(ConMor num, Scalar den, const Tolerances& tol = kTol)
      : num_(std::move(num)), den_(den) {
    if (num_.field() == Field::Real && den_.im() != 0.0) {
      throw FieldMismatch("complex denominator on a real fraction");
    }
    den_ = Scalar(num_.field(), den_.value());
    if (den_.modulus() <= tol.rank) throw Inadmissible("fraction with zero denominator");
    if (den_.modulus() > 1.0 + tol.con) {
      throw Inadmissible("fraction denominator outside the unit disc");
    }
  }

  const ConMor& num() const { return num_; }
  const Scalar& den() const { return den_; }
  const HObj& dom() const { return num_.dom(); }
  const HObj& cod() const { return num_.cod(); }
  Field field() const { return num_.field(); }

 private:
  ConMor num_;
  Scalar den_;
};

/// t ↦ [t/1].
inline Fraction embed(const ConMor& t) { return Fraction(t, Scalar(t.field(), 1.0)); }

inline Fraction frac_identity(const HObj& h) { return embed(identity(h)); }

/// [id/z], the formal inverse of the scalar z.
inline Fraction frac_inverse_scalar(const Scalar& z, const HObj& h) {
  return Fraction(identity(h), Scalar(h.field, z.value()));
}

/// Rotates the numerator by the denominator's phase so that the denominator
/// is real in (0, 1]. Unit scalars are unitaries, so the class is unchanged.
inline Fraction normalize(const Fraction& f) {
  const cplx z = f.den().value();
  const double m = std::abs(z);
  const cplx phase = std::conj(z / m);
  ConMor num = ConMor::unchecked(scalar_act(Scalar(f.field(), phase), f.num()));
  return Fraction(std::move(num), Scalar(f.field(), m));
}

namespace detail {

inline void require_parallel(const Fraction& a, const Fraction& b) {
  if (!(a.dom() == b.dom()) || !(a.cod() == b.cod())) {
    throw ShapeError("fractions are not parallel");
  }
}

}  // namespace detail

/// ‖z'•t − z•t'‖ / max(1, ‖z'•t‖, ‖z•t'‖) for a = [t/z], b = [t'/z'].
inline double frac_residual(const Fraction& a, const Fraction& b) {
  detail::require_parallel(a, b);
  const Matrix lhs = scale(b.den().value(), a.num().mat());
  const Matrix rhs = scale(a.den().value(), b.num().mat());
  const double ref = std::max({1.0, opnorm(lhs), opnorm(rhs)});
  return opnorm(lhs - rhs) / ref;
}

/// [t/z] ~ [t'/z'] ⇔ z'•t = z•t' (within `tol`, relative).
inline bool frac_eq(const Fraction& a, const Fraction& b, double tol = kTol.eq) {
  return frac_residual(a, b) <= tol;
}

/// [t/z] ∘ [s/w] = [t∘s / z•w].
inline Fraction frac_compose(const Fraction& g, const Fraction& f) {
  return Fraction(compose(g.num(), f.num()), g.den() * f.den());
}

/// [t/z]† = [t†/z†].
inline Fraction frac_dagger(const Fraction& f) {
  return Fraction(dagger(f.num()), f.den().conj());
}

/// [s/w] ⊗ [t/z] = [s⊗t / w•z].
inline Fraction frac_tensor(const Fraction& f, const Fraction& g) {
  return Fraction(tensor(f.num(), g.num()), f.den() * g.den());
}

/// [t/z] ⊕ [t'/z'] = [z'•t ⊕ z•t' / z•z'].
inline Fraction frac_oplus(const Fraction& f, const Fraction& g) {
  const ConMor left = scaled(g.den(), f.num());
  const ConMor right = scaled(f.den(), g.num());
  return Fraction(oplus(left, right), f.den() * g.den());
}

/// F[t/z] = z⁻¹·t.
inline Mor to_hilb(const Fraction& f) {
  return Mor(f.dom(), f.cod(), scale(1.0 / f.den().value(), f.num().mat()));
}

/// [t/1] for ‖t‖ ≤ 1, otherwise [t/‖t‖ / 1/‖t‖].
inline Fraction from_hilb(const Mor& t) {
  const double n = t.norm();
  if (n <= 1.0) return embed(ConMor::unchecked(t));
  const double inv = 1.0 / n;
  ConMor num = ConMor::admit(Mor(t.dom(), t.cod(), scale(inv, t.mat())));
  return Fraction(std::move(num), Scalar(t.field(), inv));
}

// ---------------------------------------------------------------------------
// Equalisers and kernels
// ---------------------------------------------------------------------------

/// Dagger equaliser of [t/z] and [t'/z']: [e/1] with e the dagger equaliser
/// of z'•t and z•t' in the contraction category.
struct FractionEqualizer {
  Fraction e;
  Fraction f;
  Fraction g;

  /// For a cone [e'/w] equalising f and g, returns [m / w•w] where m is the
  /// concrete factoring w•e' = e∘m. Throws Inadmissible otherwise.
  Fraction mediate(const Fraction& cone, const Tolerances& tol = kTol) const {
    if (!(cone.cod() == e.cod())) throw ShapeError("cone has the wrong codomain");
    if (!frac_eq(frac_compose(f, cone), frac_compose(g, cone), tol.eq)) {
      throw Inadmissible("cone does not equalise the pair");
    }
    const Scalar w = cone.den();
    const Matrix we = scale(w.value(), cone.num().mat());
    const Matrix m = adjoint(e.num().mat()) * we;
    if (!approx_equal(e.num().mat() * m, we, tol.eq)) {
      throw Inadmissible("cone does not factor through the equaliser");
    }
    ConMor num = ConMor::unchecked(Mor(cone.dom(), e.dom(), m));
    return Fraction(std::move(num), w * w);
  }
};

inline FractionEqualizer frac_equalizer(const Fraction& f, const Fraction& g,
                                        const Tolerances& tol = kTol) {
  detail::require_parallel(f, g);
  const Mor lhs = scalar_act(g.den(), f.num());
  const Mor rhs = scalar_act(f.den(), g.num());
  DaggerEqualizer eq = dagger_equalizer(lhs, rhs, tol.rank);
  return {embed(eq.inclusion), f, g};
}

/// For a dagger monomorphism t: H → K, the morphism s = [coker(t)/1] of
/// which [t/1] is the kernel, together with the mediators of the kernel
/// property.
struct KernelCompletion {
  Fraction kernel;  // [t/1]
  Fraction s;       // [coker(t)/1]

  /// For a cone [t'/z'] with [s/1]∘[t'/z'] ~ 0, the mediator [m/z'] with
  /// t' = t∘m. Throws Inadmissible if the cone is not killed by s.
  Fraction mediate(const Fraction& cone, const Tolerances& tol = kTol) const {
    if (!(cone.cod() == kernel.cod())) throw ShapeError("cone has the wrong codomain");
    const Fraction killed = frac_compose(s, cone);
    const Fraction zero_frac = embed(zero(killed.dom(), killed.cod()));
    if (!frac_eq(killed, zero_frac, tol.eq)) {
      throw Inadmissible("cone is not annihilated by the cokernel");
    }
    ConMor m = compose(dagger(kernel.num()), cone.num());
    return Fraction(std::move(m), cone.den());
  }

  /// Largest frac_eq residual of [t/1]∘mediate(c) against c over `cones`.
  double check(std::span<const Fraction> cones, const Tolerances& tol = kTol) const {
    double worst = 0.0;
    for (const auto& c : cones) {
      worst = std::max(worst, frac_residual(frac_compose(kernel, mediate(c, tol)), c));
    }
    return worst;
  }
};

inline KernelCompletion frac_kernel_completion(const ConMor& t, const Tolerances& tol = kTol) {
  if (!is_isometry(t.mor(), tol.ortho)) {
    throw Inadmissible("kernel completion needs a dagger monomorphism");
  }
  return {embed(t), embed(cokernel(t, tol.ortho))};
}

// ---------------------------------------------------------------------------
// Simplicity of the unit
// ---------------------------------------------------------------------------

struct SimplicityWitness {
  enum class Kind { Minimal, Maximal };
  Kind kind = Kind::Minimal;
  std::optional<Fraction> retraction;
};

/// For a monomorphism [s/z]: S → I, either the minimal subobject (s = 0,
/// only possible from the zero object) or the maximal one, witnessed by the
/// retraction [z•s† / s∘s†] with [s/z] ∘ retraction ~ [id/1].
inline SimplicityWitness simplicity_witness(const Fraction& f, const Tolerances& tol = kTol) {
  if (f.cod().dim != 1) throw ShapeError("simplicity witness: codomain is not I");
  if (f.dom().dim >= 2) throw Inadmissible("not a monomorphism: domain dimension above 1");
  if (f.dom().dim == 0) return {SimplicityWitness::Kind::Minimal, std::nullopt};
  const Matrix& s = f.num().mat();
  if (max_abs(s) <= tol.eq) throw Inadmissible("not a monomorphism: zero map from I");
  const cplx w = (s * adjoint(s))(0, 0);
  ConMor t = scaled(f.den(), dagger(f.num()));
  return {SimplicityWitness::Kind::Maximal,
          Fraction(std::move(t), Scalar(f.field(), w), tol)};
}

// ---------------------------------------------------------------------------
// Biproducts
// ---------------------------------------------------------------------------

/// Projections [inl†/1], [inr†/1] out of K ⊕ L.
inline Fraction frac_proj_left(const HObj& k, const HObj& l) { return embed(dagger(inl(k, l))); }
inline Fraction frac_proj_right(const HObj& k, const HObj& l) { return embed(dagger(inr(k, l))); }

/// The pairing q: H → K ⊕ L of [r/w]: H → K and [t/z]: H → L, built from the
/// mixture s = (x, y) = (½, ½) as
///   q = [z•y•r ⊕ w•x•t / w•z•x•y] ∘ [p/1],
/// where p: H ≅ I⊗H → (I⊕I)⊗H ≅ (I⊗H)⊕(I⊗H) ≅ H⊕H is s⊗id followed by the
/// distributor.
inline Fraction frac_pair(const Fraction& r, const Fraction& t) {
  if (!(r.dom() == t.dom())) throw ShapeError("pairing needs a common domain");
  const Field fld = r.field();
  const HObj h = r.dom();
  const ConMor s = mixture(fld);
  const Scalar x(fld, s.mat()(0, 0)), y(fld, s.mat()(1, 0));
  const HObj i = HObj::unit(fld);

  ConMor p = compose(distributor_right(i, i, h),
                     compose(tensor(s, identity(h)), dagger(tensor_left_unitor(h))));
  // (I⊗H) ⊕ (I⊗H) → H ⊕ H
  p = compose(oplus(tensor_left_unitor(h), tensor_left_unitor(h)), p);

  const Scalar w = r.den(), z = t.den();
  const ConMor left = scaled(z * y, r.num());
  const ConMor right = scaled(w * x, t.num());
  const Fraction middle(oplus(left, right), w * z * x * y);
  return frac_compose(middle, embed(p));
}

}  // namespace daghilb
