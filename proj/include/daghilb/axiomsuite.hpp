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

// Randomised verification of the eleven axioms and of the constructive
// lemmas built on them.
//
// Every check draws its instances from its own stream, keyed by the check id
// and the run seed, and records the largest residual it saw. A check run
// with `mutate` set feeds its designated corrupted instance through the same
// code path and is expected to fail.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "daghilb/colimits.hpp"
#include "daghilb/concat.hpp"
#include "daghilb/fractions.hpp"
#include "daghilb/numkernel.hpp"
#include "daghilb/random.hpp"
#include "daghilb/tolerances.hpp"

namespace daghilb {

struct GenConfig {
  Field field = Field::Complex;
  std::size_t dim_max = 8;
  std::size_t trials = 200;
  std::uint64_t seed = 42;
  std::map<std::string, double> tol_overrides;

  void validate() const {
    if (dim_max < 1) throw std::invalid_argument("dim_max must be at least 1");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    (void)tolerances();
  }

  /// Defaults with `tol_overrides` applied. Keys: rank, recon, ortho, eq, con.
  Tolerances tolerances() const {
    Tolerances t;
    for (const auto& [key, value] : tol_overrides) {
      if (!(value > 0.0)) throw std::invalid_argument("tolerance " + key + " must be positive");
      if (key == "rank") t.rank = value;
      else if (key == "recon") t.recon = value;
      else if (key == "ortho") t.ortho = value;
      else if (key == "eq") t.eq = value;
      else if (key == "con") t.con = value;
      else throw std::invalid_argument("unknown tolerance '" + key + "'");
    }
    return t;
  }
};

struct CheckEntry {
  std::string id;
  bool pass = true;
  double worst_residual = 0.0;
  std::string instance_digest;
  bool skipped = false;
  std::string note;
};

struct AxiomReport {
  GenConfig config;
  std::vector<CheckEntry> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
  }
};

namespace detail {

/// Per-check state: the sampler, tolerances and the running verdict.
class Probe {
 public:
  Probe(const GenConfig& cfg, std::string id, bool mutate)
      : s(cfg.seed, id, cfg.field, cfg.dim_max),
        tol(cfg.tolerances()),
        trials(cfg.trials),
        mutate(mutate),
        field(cfg.field),
        id_(std::move(id)) {}

  Sampler s;
  Tolerances tol;
  std::size_t trials;
  bool mutate;
  Field field;

  HObj obj(std::size_t dim) const { return {field, dim}; }
  HObj unit() const { return HObj::unit(field); }

  void residual(double r, double bound, std::string_view what) {
    if (!(r <= bound)) fail(what);
    if (std::isfinite(r)) worst_ = std::max(worst_, r);
  }

  void require(bool cond, std::string_view what) {
    if (!cond) fail(what);
  }

  void fail(std::string_view what) {
    if (pass_) note_ = std::string(what);
    pass_ = false;
  }

  void skip(std::string why) {
    skipped_ = true;
    note_ = std::move(why);
  }

  CheckEntry finish() const { return {id_, pass_, worst_, s.digest(), skipped_, note_}; }

 private:
  std::string id_;
  bool pass_ = true;
  bool skipped_ = false;
  double worst_ = 0.0;
  std::string note_;
};

// ‖a − b‖ / max(1, ‖a‖, ‖b‖).
inline double rel_distance(const Matrix& a, const Matrix& b) {
  return distance(a, b) / std::max({1.0, opnorm(a), opnorm(b)});
}

inline ConMor with_entry(const ConMor& f, std::size_t i, std::size_t j, cplx delta) {
  Matrix m = f.mat();
  m(i, j) += delta;
  return ConMor::unchecked(Mor(f.dom(), f.cod(), std::move(m)));
}

inline ConMor times(double c, const ConMor& f) {
  return ConMor::unchecked(scalar_act(Scalar(f.field(), c), f));
}

inline Fraction gen_fraction(Probe& p, const HObj& dom, const HObj& cod) {
  ConMor t = gen_contraction(p.s, dom, cod);
  return Fraction(std::move(t), p.s.scalar(0.1, 1.0), p.tol);
}

/// [w•t / w•z] for a random w, which represents the same class as [t/z].
inline Fraction rescaled(Probe& p, const Fraction& f) {
  const Scalar w = p.s.scalar(0.1, 1.0);
  return Fraction(scaled(w, f.num()), w * f.den(), p.tol);
}

/// Computational basis vector x ⊗ y: I → H ⊗ K.
inline ConMor pure_tensor(const HObj& h, std::size_t x, const HObj& k, std::size_t y) {
  const Matrix ex = column_block(Matrix::identity(h.field, h.dim), x, 1);
  const Matrix ey = column_block(Matrix::identity(k.field, k.dim), y, 1);
  return ConMor::unchecked(Mor(HObj::unit(h.field), tensor(h, k), kron(ex, ey)));
}

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

inline void axiom_dagger(Probe& p) {
  auto dag = [&](const ConMor& f) {
    ConMor d = dagger(f);
    if (!p.mutate || d.mat().size() == 0) return d;
    return with_entry(d, 0, 0, 1e-3);
  };
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim());
    const ConMor f = gen_contraction(p.s, h, k);
    const ConMor g = gen_contraction(p.s, k, l);
    p.residual(distance(dag(dag(f)).mat(), f.mat()), 0.0, "t^dagger^dagger = t");
    p.residual(distance(dag(identity(h)).mat(), identity(h).mat()), 0.0, "id^dagger = id");
    p.residual(distance(dag(compose(g, f)).mat(), compose(dag(f), dag(g)).mat()), p.tol.eq,
               "(g f)^dagger = f^dagger g^dagger");
    p.require(std::abs(dag(f).norm() - f.norm()) <= p.tol.eq, "norm of the adjoint");
  }
}

inline void axiom_rig(Probe& p) {
  const std::size_t c = std::min<std::size_t>(p.s.dim_max(), 3);
  auto dist = [&](const HObj& a, const HObj& b, const HObj& d) {
    ConMor u = distributor(a, b, d);
    return p.mutate ? times(1.01, u) : u;
  };
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim(1, c)), k = p.obj(p.s.dim(1, c)), l = p.obj(p.s.dim(1, c));
    const HObj h2 = p.obj(p.s.dim(1, c)), k2 = p.obj(p.s.dim(1, c)), l2 = p.obj(p.s.dim(1, c));
    const std::vector<std::pair<std::string_view, ConMor>> isos = {
        {"tensor left unitor", tensor_left_unitor(h)},
        {"tensor right unitor", tensor_right_unitor(h)},
        {"tensor associator", tensor_associator(h, k, l)},
        {"tensor braiding", tensor_braiding(h, k)},
        {"oplus left unitor", oplus_left_unitor(h)},
        {"oplus right unitor", oplus_right_unitor(h)},
        {"oplus associator", oplus_associator(h, k, l)},
        {"oplus braiding", oplus_braiding(h, k)},
        {"left distributor", dist(h, k, l)},
        {"right distributor", distributor_right(h, k, l)},
    };
    for (const auto& [name, u] : isos) {
      p.residual(isometry_defect(u.mat()), p.tol.ortho, name);
      p.residual(isometry_defect(adjoint(u.mat())), p.tol.ortho, name);
    }
    const ConMor f = gen_contraction(p.s, h, h2);
    const ConMor g = gen_contraction(p.s, k, k2);
    const ConMor q = gen_contraction(p.s, l, l2);

    p.residual(distance(compose(dist(h2, k2, l2), tensor(f, oplus(g, q))).mat(),
                        compose(oplus(tensor(f, g), tensor(f, q)), dist(h, k, l)).mat()),
               p.tol.eq, "left distributor naturality");
    p.residual(distance(compose(distributor_right(h2, k2, l2), tensor(oplus(f, g), q)).mat(),
                        compose(oplus(tensor(f, q), tensor(g, q)), distributor_right(h, k, l)).mat()),
               p.tol.eq, "right distributor naturality");
    p.residual(distance(compose(tensor_braiding(h2, k2), tensor(f, g)).mat(),
                        compose(tensor(g, f), tensor_braiding(h, k)).mat()),
               p.tol.eq, "tensor braiding naturality");
    p.residual(distance(compose(oplus_braiding(h2, k2), oplus(f, g)).mat(),
                        compose(oplus(g, f), oplus_braiding(h, k)).mat()),
               p.tol.eq, "oplus braiding naturality");
    p.residual(distance(compose(tensor_associator(h2, k2, l2), tensor(tensor(f, g), q)).mat(),
                        compose(tensor(f, tensor(g, q)), tensor_associator(h, k, l)).mat()),
               p.tol.eq, "tensor associator naturality");
    p.residual(distance(compose(tensor_braiding(k, h), tensor_braiding(h, k)).mat(),
                        identity(tensor(h, k)).mat()),
               p.tol.ortho, "braiding is symmetric");
    p.residual(distance(dagger(tensor(f, g)).mat(), tensor(dagger(f), dagger(g)).mat()), 0.0,
               "(s tensor t)^dagger");
    p.residual(distance(dagger(oplus(f, g)).mat(), oplus(dagger(f), dagger(g)).mat()), 0.0,
               "(s oplus t)^dagger");
  }
}

inline void axiom_affine(Probe& p) {
  const HObj o = HObj::zero(p.field);
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim());
    const ConMor f = gen_contraction(p.s, h, k);
    p.require(zero(o, h).mat().size() == 0 && zero(h, o).mat().size() == 0,
              "maps into and out of 0 are unique");
    ConMor claimed = zero(h, k);
    if (p.mutate) claimed = with_entry(claimed, 0, 0, 1e-3);
    p.residual(distance(claimed.mat(), compose(zero(o, k), zero(h, o)).mat()), 0.0,
               "0_{H,K} factors through 0");
    p.residual(distance(compose(f, zero(l, h)).mat(), zero(l, k).mat()), 0.0, "t 0 = 0");
    p.residual(distance(inl(h, k).mat(),
                        compose(oplus(identity(h), zero(o, k)), dagger(oplus_right_unitor(h))).mat()),
               0.0, "inl = id + 0");
    p.residual(distance(inr(h, k).mat(),
                        compose(oplus(zero(o, h), identity(k)), dagger(oplus_left_unitor(k))).mat()),
               0.0, "inr = 0 + id");
  }
}

inline void axiom_jointly_epic(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim());
    const HObj hk = oplus(h, k);
    const ConMor il = inl(h, k);
    const ConMor ir = p.mutate ? zero(k, hk) : inr(h, k);
    p.residual(distance(il.mat() * adjoint(il.mat()) + ir.mat() * adjoint(ir.mat()),
                        Matrix::identity(p.field, hk.dim)),
               p.tol.ortho, "injections span H + K");
    p.residual(isometry_defect(il.mat()), p.tol.ortho, "inl is a dagger mono");
    p.residual(isometry_defect(ir.mat()), p.tol.ortho, "inr is a dagger mono");
    p.residual(max_abs(adjoint(ir.mat()) * il.mat()), p.tol.ortho, "inr^dagger inl = 0");

    const ConMor a = gen_contraction(p.s, hk, l);
    auto jointly_equal = [&](const ConMor& x, const ConMor& y) {
      return approx_equal(compose(x, il), compose(y, il), p.tol.eq) &&
             approx_equal(compose(x, ir), compose(y, ir), p.tol.eq);
    };
    const ConMor b_right = with_entry(a, 0, hk.dim - 1, 1e-2);
    const ConMor b_left = with_entry(a, 0, 0, 1e-2);
    p.require(jointly_equal(a, a), "equal maps agree on both injections");
    p.require(!jointly_equal(a, b_right), "difference on the right summand detected");
    p.require(!jointly_equal(a, b_left), "difference on the left summand detected");
  }
}

inline void axiom_mixture(Probe& p) {
  const HObj i = p.unit();
  const ConMor s = p.mutate ? ConMor::unchecked(Matrix::column(p.field, {0.5, 0.0}))
                            : mixture(p.field);
  const cplx left = compose(dagger(inl(i, i)), s).mat()(0, 0);
  const cplx right = compose(dagger(inr(i, i)), s).mat()(0, 0);
  p.require(std::abs(left) > p.tol.rank, "inl^dagger s != 0");
  p.require(std::abs(right) > p.tol.rank, "inr^dagger s != 0");
  p.residual(std::max(0.0, s.norm() - 1.0), p.tol.con, "s is a contraction");
}

inline void axiom_simple(Probe& p) {
  const HObj i = p.unit();
  const ConMor from_zero = zero(HObj::zero(p.field), i);
  p.residual(isometry_defect(from_zero.mat()), 0.0, "0 -> I is a dagger mono");
  for (std::size_t n = 0; n < p.trials; ++n) {
    const cplx z = p.s.phase();
    Matrix m(p.field, 1, 1);
    m(0, 0) = p.mutate ? cplx(0.9) : z;
    const ConMor claimed = ConMor::unchecked(Mor(i, i, m));
    p.residual(isometry_defect(claimed.mat()), p.tol.ortho, "claimed dagger mono I -> I");
    p.residual(isometry_defect(adjoint(claimed.mat())), p.tol.ortho, "dagger mono into I is invertible");
    if (p.s.dim_max() >= 2) {
      const ConMor t = gen_contraction(p.s, p.obj(p.s.dim(2)), i);
      p.require(isometry_defect(t.mat()) >= 1.0 - p.tol.ortho,
                "no dagger mono into I from dimension 2 or more");
    }
  }
}

inline void axiom_separator(Probe& p) {
  const std::size_t c = std::min<std::size_t>(p.s.dim_max(), 3);
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.mutate ? p.s.index(2, std::max<std::size_t>(2, c)) : p.s.dim(1, c));
    const HObj k = p.obj(p.s.dim(1, c)), l = p.obj(p.s.dim());
    const ConMor f = gen_contraction(p.s, tensor(h, k), l);
    const bool differ = p.mutate || n % 2 == 1;
    const std::size_t x = p.mutate ? h.dim - 1 : p.s.index(0, h.dim - 1);
    const std::size_t y = p.s.index(0, k.dim - 1);
    const ConMor g = differ ? with_entry(f, p.s.index(0, l.dim - 1), x * k.dim + y, 1e-3) : f;
    bool separated = true;
    if (p.mutate) {
      for (std::size_t yy = 0; yy < k.dim; ++yy) {
        const ConMor xy = pure_tensor(h, 0, k, yy);
        separated = separated && approx_equal(compose(f, xy), compose(g, xy), p.tol.eq);
      }
    } else {
      separated = separator_check(f, g, h, k, p.tol.eq);
    }
    p.require(separated == approx_equal(f, g, p.tol.eq), "pure tensors decide equality");
  }
}

inline void axiom_equalisers(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim());
    const HObj r = p.obj(p.s.index(0, h.dim));
    const ConMor q = gen_isometry(p.s, r, h);
    const Matrix proj = Matrix::identity(p.field, h.dim) - q.mat() * adjoint(q.mat());
    const ConMor a = gen_contraction(p.s, h, k), b = gen_contraction(p.s, h, k);
    const Mor f = scalar_act(0.5, a);
    const Mor g(h, k, scale(0.5, a.mat()) + scale(0.5, b.mat() * proj));
    const DaggerEqualizer eq = dagger_equalizer(f, g, p.tol.rank);
    const ConMor e = p.mutate ? times(1.01, eq.inclusion) : eq.inclusion;
    p.residual(isometry_defect(e.mat()), p.tol.ortho, "equaliser is a dagger mono");
    p.residual(distance(compose(f, e.mor()).mat(), compose(g, e.mor()).mat()), p.tol.eq,
               "f e = g e");
    p.require(e.dom().dim >= r.dim, "equaliser contains the common subspace");
    const ConMor cone = compose(q, gen_contraction(p.s, p.obj(p.s.dim()), r));
    const ConMor m = compose(dagger(e), cone);
    p.residual(distance(compose(e, m).mat(), cone.mat()), p.tol.eq, "cone factors through e");
    p.require(rank(e.mat(), p.tol.rank) == e.dom().dim, "mediator is unique");
  }
}

inline void axiom_kernels(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim());
    const HObj nn = p.obj(p.s.index(0, h.dim));
    const ConMor iso = gen_isometry(p.s, nn, h);
    const ConMor m = p.mutate ? times(0.9, iso) : iso;
    p.residual(isometry_defect(m.mat()), p.tol.ortho, "input is a dagger mono");
    const ConMor c = cokernel(m, p.tol.ortho);
    p.residual(std::max(0.0, c.norm() - 1.0), p.tol.con, "cokernel is a contraction");
    p.residual(max_abs(compose(c, m).mat()), p.tol.eq, "coker(m) m = 0");
    const ConMor ker = dagger_kernel(c, p.tol.rank).inclusion;
    p.require(ker.dom().dim == nn.dim, "kernel has the dimension of N");
    p.residual(distance(range_projector(ker), range_projector(m)), p.tol.ortho,
               "ker(coker(m)) is m");
  }
}

inline void axiom_positive(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim());
    const HObj l = p.obj(p.s.index(h.dim, std::max(h.dim, p.s.dim_max())));
    const ConMor s = gen_injective(p.s, h, l);
    const ConMor q = gen_unitary(p.s, h);
    const ConMor r = compose(s, p.mutate ? times(1.01, q) : q);
    p.residual(distance(r.mat() * adjoint(r.mat()), s.mat() * adjoint(s.mat())), p.tol.eq,
               "r r^dagger = s s^dagger");
    const ConMor t = positivity_witness(r, s, p.tol);
    p.residual(distance(r.mat(), compose(s, t).mat()), p.tol.eq, "r = s t");
    p.residual(isometry_defect(t.mat()), p.tol.ortho, "t is unitary");
    p.residual(isometry_defect(adjoint(t.mat())), p.tol.ortho, "t is unitary");
  }
}

inline void axiom_colimits(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    // Chain of arbitrary contractions.
    const std::size_t len = p.s.index(1, 3);
    std::vector<ConMor> steps;
    HObj prev = p.obj(p.s.dim());
    for (std::size_t i = 0; i < len; ++i) {
      const HObj next = p.obj(p.s.dim());
      steps.push_back(gen_contraction(p.s, prev, next));
      prev = next;
    }
    const FiniteColimit colim = finite_colimit(FiniteDiagram::chain(steps));
    const ConMor u = gen_contraction(p.s, colim.apex, p.obj(p.s.dim()));
    std::vector<ConMor> cocone;
    for (const auto& leg : colim.legs) cocone.push_back(compose(u, leg));
    if (p.mutate) cocone.front() = with_entry(cocone.front(), 0, 0, 1e-3);
    const ConMor med = colim.mediate(cocone, p.tol.eq);
    for (std::size_t i = 0; i < cocone.size(); ++i) {
      p.residual(distance(compose(med, colim.legs[i]).mat(), cocone[i].mat()), p.tol.eq,
                 "mediator commutes with the legs");
    }

    // Chain of isometries.
    std::vector<ConMor> isos;
    std::size_t d = p.s.index(0, std::max<std::size_t>(p.s.dim_max() / 2, 1));
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t e = p.s.index(d, p.s.dim_max());
      isos.push_back(gen_isometry(p.s, p.obj(d), p.obj(e)));
      d = e;
    }
    const ChainReport rep = dagger_mono_chain_check(FiniteDiagram::chain(isos), p.tol);
    p.residual(rep.worst_residual, p.tol.eq, "isometric chain");

    // Increasing chain of scalars.
    const std::size_t depth = p.s.index(1, 6);
    std::vector<double> z;
    for (std::size_t i = 0; i < depth; ++i) z.push_back(p.s.uniform(0.05, 1.0));
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    const double sup = p.s.uniform(z.back(), 1.0);
    const HObj base = p.obj(p.s.dim());
    const ScalarChainCocone sc = scalar_chain_cocone({base, z, sup});
    const ConMor t = gen_contraction(p.s, base, p.obj(p.s.dim()));
    std::vector<ConMor> tn;
    for (double zn : z) tn.push_back(scaled(Scalar(p.field, zn / sup), t));
    p.residual(distance(sc.mediate(tn, p.tol).mat(), t.mat()), p.tol.eq, "scalar chain mediator");
  }
}

// ---------------------------------------------------------------------------
// Lemmas over the contraction category
// ---------------------------------------------------------------------------

inline void lemma_factorization(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim());
    const HObj mid = p.obj(p.s.index(0, std::min(h.dim, k.dim)));
    const ConMor t = n % 2 == 0 ? gen_contraction(p.s, h, k)
                                : compose(gen_contraction(p.s, mid, k), gen_contraction(p.s, h, mid));
    const Factorization f = factor(t, p.tol.rank);
    const ConMor kk = p.mutate ? times(1.01, f.k) : f.k;
    p.residual(distance(compose(kk, f.e).mat(), t.mat()), p.tol.eq, "t = k e");
    p.residual(isometry_defect(kk.mat()), p.tol.ortho, "k is a dagger mono");
    p.require(rank(f.e.mat(), p.tol.rank) == f.e.cod().dim, "e is epic");
    const ConMor kernel = dagger_kernel(cokernel_of(t, p.tol.rank), p.tol.rank).inclusion;
    p.residual(distance(range_projector(kernel), range_projector(kk)), p.tol.ortho,
               "k = ker(ker(t^dagger)^dagger)");
  }
}

inline void lemma_scalar_monic(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const Scalar z = p.mutate ? Scalar(p.field, 0.0) : p.s.scalar(0.1, 1.0);
    const ConMor zm = ConMor::unchecked(scalar_mor(z, p.field));
    const HObj x = p.obj(p.s.dim()), i = p.unit();
    const bool differ = n % 2 == 1;
    const ConMor a = gen_contraction(p.s, x, i);
    const ConMor b = differ ? with_entry(a, 0, 0, 1e-2) : a;
    p.require(approx_equal(compose(zm, a), compose(zm, b), p.tol.eq) == approx_equal(a, b, p.tol.eq),
              "z is monic");
    const ConMor c = gen_contraction(p.s, i, x);
    const ConMor d = differ ? with_entry(c, 0, 0, 1e-2) : c;
    p.require(approx_equal(compose(c, zm), compose(d, zm), p.tol.eq) == approx_equal(c, d, p.tol.eq),
              "z is epic");
    p.residual(std::abs(opnorm(compose(zm, a).mat() - compose(zm, b).mat()) -
                        z.modulus() * opnorm(a.mat() - b.mat())),
               p.tol.eq, "|z| scales distances");
  }
}

inline void lemma_scalar_cancellation(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const Scalar z = p.mutate ? Scalar(p.field, 0.0) : p.s.scalar(0.1, 1.0);
    const Scalar w = p.s.scalar(0.0, 1.0);
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim());
    const ConMor s = gen_contraction(p.s, h, k);
    const ConMor t = n % 2 == 1 ? with_entry(s, 0, 0, 1e-2) : s;
    p.require(approx_equal(scalar_act(z, s), scalar_act(z, t), p.tol.eq) == approx_equal(s, t, p.tol.eq),
              "z s = z t implies s = t");
    const ConMor g = gen_contraction(p.s, k, l);
    const Mor zgf = scalar_act(z, compose(g, s));
    p.residual(distance(zgf.mat(), compose(scalar_act(z, g), s.mor()).mat()), p.tol.eq,
               "z (g s) = (z g) s");
    p.residual(distance(zgf.mat(), compose(g.mor(), scalar_act(z, s)).mat()), p.tol.eq,
               "z (g s) = g (z s)");
    p.residual(distance(scalar_act(z, scalar_act(w, s)).mat(), scalar_act(z * w, s).mat()),
               p.tol.eq, "z (w s) = (z w) s");
  }
}

inline void lemma_dagger_iso(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim());
    const ConMor u = gen_unitary(p.s, h);
    const ConMor f = p.mutate ? times(0.99, u) : u;
    const ConMor g = p.mutate ? times(1.0 / 0.99, dagger(u)) : dagger(u);
    p.residual(distance(compose(g, f).mat(), identity(h).mat()), p.tol.eq, "g f = id");
    p.residual(distance(compose(f, g).mat(), identity(h).mat()), p.tol.eq, "f g = id");
    p.residual(std::max(0.0, g.norm() - 1.0), p.tol.con, "inverse is a contraction");
    p.residual(isometry_defect(f.mat()), p.tol.ortho, "isomorphism is a dagger isomorphism");
    p.residual(isometry_defect(adjoint(f.mat())), p.tol.ortho, "isomorphism is a dagger isomorphism");

    const ConMor c = gen_injective(p.s, h, h, 0.05);
    const bool inverse_short = opnorm(pseudo_inverse(c.mat(), p.tol.rank)) <= 1.0 + p.tol.con;
    p.require(inverse_short == is_unitary(c.mor(), p.tol.ortho),
              "only unitaries have short inverses");
  }
}

inline void lemma_dagger_mono_extraction(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim());
    const HObj k = p.obj(p.s.index(h.dim, std::max(h.dim, p.s.dim_max())));
    const ConMor s = gen_isometry(p.s, h, k);
    const Scalar z = p.s.scalar(0.1, 1.0);
    const ConMor t = scaled(z, s);
    const Scalar claimed = p.mutate ? Scalar(p.field, 1.01 * z.value()) : z;
    const ConMor s2 = extract_dagger_mono(t, claimed, p.tol);
    p.residual(distance(t.mat(), scalar_act(z, s2).mat()), p.tol.eq, "t = z s");
    p.residual(isometry_defect(s2.mat()), p.tol.ortho, "s is a dagger mono");
  }
}

inline void lemma_disc(Probe& p) {
  auto compress = [&](double z) {
    if (!p.mutate) {
      const Compression c = scalar_as_compression(z, p.field);
      p.residual(c.residual, 1e-12, "v^dagger (1 + 0) v = z");
      p.residual(isometry_defect(c.v.mat()), p.tol.ortho, "v is a dagger mono");
      return;
    }
    const Matrix v = Matrix::column(p.field, {std::sqrt(z), std::sqrt(z)});
    p.residual(isometry_defect(v), p.tol.ortho, "v is a dagger mono");
  };
  for (int i = 0; i <= 10; ++i) compress(i / 10.0);
  for (std::size_t n = 0; n < p.trials; ++n) {
    compress(p.s.uniform());
    const double m = p.s.uniform(0.0, 2.0);
    const Scalar z = Scalar(p.field, m * p.s.phase());
    const bool admitted = ConMor::try_admit(scalar_mor(z, p.field), p.tol.con).has_value();
    p.require(admitted == (m <= 1.0 + p.tol.con), "scalar contractions form the unit disc");
  }
  const Scalar big(p.field, 1.2);
  Scalar power(p.field, 1.0);
  for (int n = 1; n <= 20; ++n) {
    power = power * big;
    p.residual(std::abs(power.modulus() - std::pow(1.2, n)) / std::pow(1.2, n), p.tol.eq, "|z^n| = |z|^n");
    p.require(!ConMor::try_admit(scalar_mor(power, p.field), p.tol.con).has_value(),
              "powers of |z| > 1 are not contractions");
  }
}

// ---------------------------------------------------------------------------
// Lemmas over fractions
// ---------------------------------------------------------------------------

inline void lemma_localization(Probe& p) {
  auto back = [&](const Fraction& f) {
    if (!p.mutate) return to_hilb(f);
    return Mor(f.dom(), f.cod(), scale(f.den().value(), f.num().mat()));
  };
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim());
    const Mor t = gen_bounded(p.s, h, k, 10.0);
    p.residual(distance(back(from_hilb(t)).mat(), t.mat()), p.tol.recon, "F(from_hilb(t)) = t");

    const Fraction a = gen_fraction(p, h, k);
    std::optional<Fraction> b;
    if (n % 2 == 0) {
      const Scalar z2 = p.s.scalar(0.1, 1.0);
      Mor t2 = scalar_act(z2 / a.den(), a.num());
      const double c = std::max(1.0, t2.norm());
      const ConMor a_num = ConMor::unchecked(scalar_act(Scalar(p.field, 1.0 / c), a.num()));
      t2 = scalar_act(Scalar(p.field, 1.0 / c), t2);
      const Fraction a2(a_num, a.den(), p.tol);
      b.emplace(ConMor::admit(t2, p.tol.con), z2, p.tol);
      p.require(frac_eq(a2, *b, p.tol.eq) ==
                    approx_equal(back(a2).mat(), back(*b).mat(), p.tol.eq),
                "[t/z] ~ [t'/z'] iff t/z = t'/z'");
    } else {
      b.emplace(gen_fraction(p, h, k));
      p.require(frac_eq(a, *b, p.tol.eq) == approx_equal(back(a).mat(), back(*b).mat(), p.tol.eq),
                "[t/z] ~ [t'/z'] iff t/z = t'/z'");
    }
    const ConMor s = gen_contraction(p.s, h, k);
    p.residual(distance(back(embed(s)).mat(), s.mat()), p.tol.eq, "F[t/1] = t");
    const Fraction g = gen_fraction(p, k, l);
    p.residual(rel_distance(back(frac_compose(g, a)).mat(), back(g).mat() * back(a).mat()),
               p.tol.eq, "F preserves composition");
    p.residual(rel_distance(back(frac_dagger(a)).mat(), adjoint(back(a).mat())), p.tol.eq,
               "F preserves the dagger");
  }
}

inline void lemma_fraction_category(Probe& p) {
  auto comp = [&](const Fraction& g, const Fraction& f) {
    if (!p.mutate) return frac_compose(g, f);
    return Fraction(compose(g.num(), f.num()), g.den(), p.tol);
  };
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim()), m = p.obj(p.s.dim());
    const Fraction f = gen_fraction(p, h, k);
    const Fraction g = gen_fraction(p, k, l);
    const Fraction q = gen_fraction(p, l, m);
    p.residual(frac_residual(comp(q, comp(g, f)), comp(comp(q, g), f)), p.tol.eq, "associativity");
    p.residual(frac_residual(comp(frac_identity(k), f), f), p.tol.eq, "left identity");
    p.residual(frac_residual(comp(f, frac_identity(h)), f), p.tol.eq, "right identity");
    const Fraction f1 = rescaled(p, f);
    const Fraction f2 = rescaled(p, f1);
    p.require(frac_eq(f, f, p.tol.eq), "reflexive");
    p.require(frac_eq(f, f1, p.tol.eq) && frac_eq(f1, f, p.tol.eq), "symmetric");
    p.require(frac_eq(f1, f2, p.tol.eq) && frac_eq(f, f2, p.tol.eq), "transitive");
    p.residual(frac_residual(comp(g, f), comp(g, f1)), p.tol.eq, "composition respects classes");
  }
}

inline void lemma_universal_property(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim());
    const Scalar z = p.s.scalar(0.1, 1.0);
    const Fraction zf = embed(scaled(z, identity(h)));
    const Fraction inv = p.mutate ? frac_inverse_scalar(Scalar(p.field, 0.9 * z.value()), h)
                                  : frac_inverse_scalar(z, h);
    p.residual(frac_residual(frac_compose(zf, inv), frac_identity(h)), p.tol.eq,
               "scalars become invertible");
    p.residual(frac_residual(frac_compose(inv, zf), frac_identity(h)), p.tol.eq,
               "scalars become invertible");
    const Fraction f = gen_fraction(p, h, k);
    p.residual(frac_residual(f, frac_compose(embed(f.num()), frac_inverse_scalar(f.den(), h))),
               p.tol.eq, "[t/z] = [t/1] [1/z]");
    p.residual(distance(to_hilb(embed(f.num())).mat(), f.num().mat()), 0.0,
               "the inclusion factors through fractions");
  }
}

inline void lemma_fraction_dagger(Probe& p) {
  auto dag = [&](const Fraction& f) {
    if (!p.mutate) return frac_dagger(f);
    return Fraction(dagger(f.num()), Scalar(f.field(), 1.0), p.tol);
  };
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim());
    const Fraction f = gen_fraction(p, h, k);
    const Fraction g = gen_fraction(p, k, l);
    p.residual(frac_residual(dag(dag(f)), f), p.tol.eq, "involutive");
    p.residual(frac_residual(dag(frac_identity(h)), frac_identity(h)), p.tol.eq, "id^dagger = id");
    p.residual(frac_residual(dag(frac_compose(g, f)), frac_compose(dag(f), dag(g))), p.tol.eq,
               "contravariant");
    p.residual(frac_residual(dag(f), dag(rescaled(p, f))), p.tol.eq, "respects classes");
    p.residual(rel_distance(to_hilb(dag(f)).mat(), adjoint(to_hilb(f).mat())), p.tol.eq,
               "F preserves the dagger");
  }
}

inline void lemma_fraction_separator(Probe& p) {
  const std::size_t c = std::min<std::size_t>(p.s.dim_max(), 3);
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.mutate ? p.s.index(2, std::max<std::size_t>(2, c)) : p.s.dim(1, c));
    const HObj k = p.obj(p.s.dim(1, c)), l = p.obj(p.s.dim());
    const Fraction a = gen_fraction(p, tensor(h, k), l);
    const bool differ = p.mutate || n % 2 == 1;
    const std::size_t x = p.mutate ? h.dim - 1 : p.s.index(0, h.dim - 1);
    const std::size_t y = p.s.index(0, k.dim - 1);
    const Fraction b = differ ? Fraction(with_entry(a.num(), p.s.index(0, l.dim - 1), x * k.dim + y, 1e-3),
                                         a.den(), p.tol)
                              : rescaled(p, a);
    bool separated = true;
    for (std::size_t xx = 0; xx < (p.mutate ? 1 : h.dim); ++xx)
      for (std::size_t yy = 0; yy < k.dim; ++yy) {
        const Fraction xy = embed(pure_tensor(h, xx, k, yy));
        separated = separated && frac_eq(frac_compose(a, xy), frac_compose(b, xy), p.tol.eq);
      }
    p.require(separated == frac_eq(a, b, p.tol.eq), "pure tensors decide equality of fractions");
  }
}

inline void lemma_fraction_biproducts(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim()), l = p.obj(p.s.dim());
    const Fraction r = gen_fraction(p, h, k);
    const Fraction t = gen_fraction(p, h, l);
    const Fraction q = frac_pair(r, t);
    const Fraction pl = p.mutate ? frac_proj_right(k, l) : frac_proj_left(k, l);
    const Fraction pr = p.mutate ? frac_proj_left(k, l) : frac_proj_right(k, l);
    p.residual(frac_residual(frac_compose(pl, q), r), p.tol.eq, "left projection of the pairing");
    p.residual(frac_residual(frac_compose(pr, q), t), p.tol.eq, "right projection of the pairing");
    p.residual(rel_distance(to_hilb(q).mat(), vstack(to_hilb(r).mat(), to_hilb(t).mat())), p.tol.eq,
               "pairing is unique");
    p.residual(frac_residual(frac_compose(frac_proj_left(k, l), embed(inl(k, l))), frac_identity(k)),
               p.tol.eq, "inl^dagger inl = id");
    p.residual(frac_residual(frac_compose(frac_proj_right(k, l), embed(inl(k, l))), embed(zero(k, l))),
               p.tol.eq, "inr^dagger inl = 0");
    const Fraction g = gen_fraction(p, k, l);
    p.residual(rel_distance(to_hilb(frac_oplus(r, g)).mat(),
                            direct_sum(to_hilb(r).mat(), to_hilb(g).mat())),
               p.tol.eq, "F preserves direct sums");
  }
}

inline void lemma_fraction_equalizer(Probe& p) {
  const double half = std::sqrt(0.5);
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim()), k = p.obj(p.s.dim());
    const HObj r = p.obj(p.s.index(0, h.dim));
    const ConMor q = gen_isometry(p.s, r, h);
    const Matrix proj = q.mat() * adjoint(q.mat());
    const Matrix comp = Matrix::identity(p.field, h.dim) - proj;
    const Scalar z = p.s.scalar(0.1, 1.0);
    const Scalar z2 = p.s.scalar(0.05, z.modulus());
    const ConMor t = times(half, gen_contraction(p.s, h, k));
    const ConMor other = times(half, gen_contraction(p.s, h, k));
    const Matrix t2 = scale((z2 / z).value(), t.mat() * proj) + other.mat() * comp;
    const Fraction f(t, z, p.tol);
    const Fraction g(ConMor::admit(Mor(h, k, t2), p.tol.con), z2, p.tol);

    const FractionEqualizer fe = frac_equalizer(f, g, p.tol);
    const Fraction e = p.mutate ? Fraction(times(1.01, fe.e.num()), fe.e.den(), p.tol) : fe.e;
    p.residual(isometry_defect(e.num().mat()), p.tol.ortho, "equaliser is a dagger mono");
    p.residual(frac_residual(frac_compose(f, e), frac_compose(g, e)), p.tol.eq, "f e ~ g e");

    const Fraction cone(compose(q, gen_contraction(p.s, p.obj(p.s.dim()), r)),
                        p.s.scalar(0.1, 1.0), p.tol);
    const Fraction m = fe.mediate(cone, p.tol);
    p.residual(frac_residual(frac_compose(e, m), cone), p.tol.eq, "e m ~ cone");
    const Fraction m2 = fe.mediate(rescaled(p, cone), p.tol);
    p.residual(frac_residual(m, m2), p.tol.eq, "mediator is unique");
  }
}

inline void lemma_fraction_kernel(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim());
    const HObj nn = p.obj(p.s.index(0, h.dim));
    const ConMor t = gen_isometry(p.s, nn, h);
    KernelCompletion kc = frac_kernel_completion(t, p.tol);
    if (p.mutate) kc.kernel = embed(times(0.99, t));
    p.residual(frac_residual(frac_compose(kc.s, kc.kernel), embed(zero(nn, kc.s.cod()))), p.tol.eq,
               "[s/1] [t/1] ~ 0");
    const Fraction cone(compose(t, gen_contraction(p.s, p.obj(p.s.dim()), nn)),
                        p.s.scalar(0.1, 1.0), p.tol);
    const std::vector<Fraction> cones{cone, rescaled(p, cone)};
    p.residual(kc.check(cones, p.tol), p.tol.eq, "[t/1] m ~ cone");
    p.residual(frac_residual(kc.mediate(cones[0], p.tol), kc.mediate(cones[1], p.tol)), p.tol.eq,
               "mediator is unique");
  }
}

inline void lemma_simplicity(Probe& p) {
  const HObj i = p.unit();
  const auto minimal = simplicity_witness(Fraction(zero(HObj::zero(p.field), i), 1.0, p.tol), p.tol);
  p.require(minimal.kind == SimplicityWitness::Kind::Minimal, "0 -> I is the minimal subobject");
  for (std::size_t n = 0; n < p.trials; ++n) {
    Matrix s(p.field, 1, 1);
    s(0, 0) = p.mutate ? cplx(0.0) : p.s.scalar(0.05, 1.0).value();
    const Fraction f(ConMor::unchecked(Mor(i, i, s)), p.s.scalar(0.1, 1.0), p.tol);
    const SimplicityWitness w = simplicity_witness(f, p.tol);
    p.require(w.kind == SimplicityWitness::Kind::Maximal && w.retraction.has_value(),
              "nonzero mono into I is maximal");
    p.residual(frac_residual(frac_compose(f, *w.retraction), frac_identity(i)), p.tol.eq,
               "mono into I is invertible");
    p.residual(frac_residual(frac_compose(*w.retraction, f), frac_identity(i)), p.tol.eq,
               "mono into I is invertible");
    if (p.s.dim_max() >= 2) {
      const Fraction wide = gen_fraction(p, p.obj(p.s.dim(2)), i);
      bool rejected = false;
      try {
        (void)simplicity_witness(wide, p.tol);
      } catch (const Inadmissible&) {
        rejected = true;
      }
      p.require(rejected, "no mono into I from dimension 2 or more");
    }
  }
}

inline void lemma_fraction_colimits(Probe& p) {
  for (std::size_t n = 0; n < p.trials; ++n) {
    const std::size_t len = p.s.index(1, 3);
    std::vector<Fraction> steps;
    HObj prev = p.obj(p.s.dim());
    for (std::size_t i = 0; i < len; ++i) {
      const HObj next = p.obj(p.s.dim());
      steps.push_back(gen_fraction(p, prev, next));
      prev = next;
    }
    std::vector<ConMor> nums;
    for (const auto& st : steps) nums.push_back(st.num());
    const FiniteColimit colim = finite_colimit(FiniteDiagram::chain(nums));
    std::vector<Fraction> legs;
    for (std::size_t i = 0; i <= len; ++i) {
      Scalar den(p.field, 1.0);
      for (std::size_t j = i; j < len; ++j) den = den * steps[j].den();
      legs.emplace_back(colim.legs[i], den, p.tol);
    }
    const Fraction u = gen_fraction(p, colim.apex, p.obj(p.s.dim()));
    std::vector<Fraction> cocone;
    for (const auto& leg : legs) cocone.push_back(frac_compose(u, leg));
    if (p.mutate) cocone.front() = Fraction(times(0.5, cocone.front().num()), cocone.front().den(), p.tol);
    for (std::size_t i = 0; i < len; ++i) {
      p.residual(frac_residual(frac_compose(cocone[i + 1], steps[i]), cocone[i]), p.tol.eq,
                 "cocone is compatible");
      p.residual(frac_residual(frac_compose(legs[i + 1], steps[i]), legs[i]), p.tol.eq,
                 "colimit legs are compatible");
    }
    const Fraction& med = cocone.back();
    for (std::size_t i = 0; i <= len; ++i) {
      p.residual(frac_residual(frac_compose(med, legs[i]), cocone[i]), p.tol.eq,
                 "mediator commutes with the legs");
    }
  }
}

inline void lemma_russo_dye(Probe& p) {
  if (p.field == Field::Real) {
    p.skip("real contractions are not in general averages of two orthogonal maps");
    return;
  }
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj h = p.obj(p.s.dim());
    const ConMor t = gen_contraction(p.s, h, h);
    const RussoDye rd = russo_dye(t.mor(), p.tol.con);
    const Mor& u2 = p.mutate ? rd.u1 : rd.u2;
    p.residual(distance(t.mat(), scale(0.5, rd.u1.mat() + u2.mat())), p.tol.recon, "t = (u1 + u2)/2");
    for (const Mor* u : {&rd.u1, &u2}) {
      p.residual(isometry_defect(u->mat()), p.tol.ortho, "u_i is unitary");
      p.residual(isometry_defect(adjoint(u->mat())), p.tol.ortho, "u_i is unitary");
    }
    const std::size_t parts = 1 + n % 3;
    std::vector<ConMor> blocks;
    Matrix avg(p.field, h.dim, h.dim);
    for (std::size_t i = 0; i < parts; ++i) {
      blocks.push_back(gen_contraction(p.s, h, h));
      avg = avg + scale(1.0 / static_cast<double>(parts), blocks.back().mat());
    }
    const ConMor w = averaging_compression(parts, h);
    const Matrix compressed =
        adjoint(w.mat()) * oplus_all(blocks, p.field).mat() * w.mat();
    p.residual(distance(compressed, avg), 1e-9, "w^dagger (t_1 + ... + t_n) w = average");
  }
}

inline void lemma_colimiting_chain(Probe& p) {
  constexpr std::size_t kDepth = 50;
  std::vector<double> z;
  for (std::size_t n = 1; n <= kDepth; ++n) z.push_back(1.0 - std::ldexp(1.0, -static_cast<int>(n)));
  const HObj i = p.unit();
  const ScalarChainCocone chain = scalar_chain_cocone({i, z, 1.0});
  for (std::size_t n = 0; n < kDepth; ++n) {
    p.residual(std::abs(chain.legs[n].mat()(0, 0) - z[n]), 0.0, "legs are z_n / z_inf");
  }
  for (std::size_t n = 0; n < p.trials; ++n) {
    const HObj k = p.obj(p.s.dim());
    const ConMor t = gen_contraction(p.s, i, k);
    std::vector<ConMor> cocone;
    for (double zn : z) cocone.push_back(scaled(Scalar(p.field, zn), t));
    if (p.mutate) cocone[kDepth / 2] = times(0.99, cocone[kDepth / 2]);
    const ConMor u = chain.mediate(cocone, p.tol);
    p.residual(distance(u.mat(), t.mat()), p.tol.eq, "mediator is the limit of the cocone");
    for (std::size_t j = 0; j < kDepth; ++j) {
      p.residual(distance(compose(u, chain.legs[j]).mat(), cocone[j].mat()), p.tol.eq,
                 "mediator commutes with the legs");
      p.residual(distance(scalar_act(Scalar(p.field, 1.0 / z[j]), cocone[j]).mat(), u.mat()),
                 p.tol.eq, "cross-index consistency");
    }
  }
}

inline void lemma_subobjects_of_unit(Probe& p) {
  const HObj i = p.unit();
  auto mono = [&](double c, cplx phase) {
    if (c == 0.0) return zero(HObj::zero(p.field), i);
    Matrix m(p.field, 1, 1);
    m(0, 0) = c * phase;
    return ConMor::unchecked(Mor(i, i, std::move(m)));
  };
  auto klass = [&](const ConMor& m) {
    if (!p.mutate || m.dom().dim == 0) return subobject_class(m, p.tol.rank);
    return m.mat()(0, 0).real();
  };
  auto compare = [&](const ConMor& a, const ConMor& b) {
    const bool factors = factors_through(a, b, p.tol).has_value();
    p.require(factors == (klass(a) <= klass(b) + p.tol.eq), "factoring agrees with class order");
  };
  std::vector<ConMor> grid;
  for (int g = 0; g <= 20; ++g) {
    const cplx phase = p.mutate && g % 2 == 1 ? cplx(-1.0) : p.s.phase();
    grid.push_back(mono(g / 20.0, phase));
  }
  for (const auto& a : grid)
    for (const auto& b : grid) compare(a, b);
  for (std::size_t n = 0; n < p.trials; ++n) {
    const ConMor a = mono(p.s.uniform(0.01, 1.0), p.s.phase());
    const ConMor b = mono(p.s.uniform(0.01, 1.0), p.s.phase());
    compare(a, b);
    compare(b, a);
    const ConMor a2 = mono(subobject_class(a, p.tol.rank), p.s.phase());
    p.require(factors_through(a, a2, p.tol).has_value() && factors_through(a2, a, p.tol).has_value(),
              "equal classes are the same subobject");
  }
}

}  // namespace detail

using CheckFn = void (*)(detail::Probe&);

struct CheckSpec {
  std::string_view id;
  CheckFn run;
};

inline const std::vector<CheckSpec>& axiom_registry() {
  static const std::vector<CheckSpec> registry = {
      {"axiom_1", detail::axiom_dagger},        {"axiom_2", detail::axiom_rig},
      {"axiom_3", detail::axiom_affine},        {"axiom_4", detail::axiom_jointly_epic},
      {"axiom_5", detail::axiom_mixture},       {"axiom_6", detail::axiom_simple},
      {"axiom_7", detail::axiom_separator},     {"axiom_8", detail::axiom_equalisers},
      {"axiom_9", detail::axiom_kernels},       {"axiom_10", detail::axiom_positive},
      {"axiom_11", detail::axiom_colimits},
  };
  return registry;
}

inline const std::vector<CheckSpec>& lemma_registry() {
  static const std::vector<CheckSpec> registry = {
      {"factorization", detail::lemma_factorization},
      {"scalar_monic", detail::lemma_scalar_monic},
      {"scalar_cancellation", detail::lemma_scalar_cancellation},
      {"dagger_iso", detail::lemma_dagger_iso},
      {"dagger_mono_extraction", detail::lemma_dagger_mono_extraction},
      {"disc", detail::lemma_disc},
      {"localization", detail::lemma_localization},
      {"fraction_category", detail::lemma_fraction_category},
      {"universal_property", detail::lemma_universal_property},
      {"fraction_dagger", detail::lemma_fraction_dagger},
      {"fraction_separator", detail::lemma_fraction_separator},
      {"fraction_biproducts", detail::lemma_fraction_biproducts},
      {"fraction_equalizer", detail::lemma_fraction_equalizer},
      {"fraction_kernel", detail::lemma_fraction_kernel},
      {"simplicity", detail::lemma_simplicity},
      {"fraction_colimits", detail::lemma_fraction_colimits},
      {"russo_dye", detail::lemma_russo_dye},
      {"colimiting_chain", detail::lemma_colimiting_chain},
      {"subobjects_of_unit", detail::lemma_subobjects_of_unit},
  };
  return registry;
}

/// Runs one check. Exceptions raised by the constructions count as failure.
inline CheckEntry run_check(const CheckSpec& spec, const GenConfig& cfg, bool mutate = false) {
  detail::Probe probe(cfg, std::string(spec.id), mutate);
  try {
    spec.run(probe);
  } catch (const std::exception& e) {
    probe.fail(std::string("exception: ") + e.what());
  }
  return probe.finish();
}

/// Axiom `id` in 1..11.
inline CheckEntry check_axiom(int id, const GenConfig& cfg, bool mutate = false) {
  const auto& reg = axiom_registry();
  if (id < 1 || static_cast<std::size_t>(id) > reg.size()) {
    throw std::out_of_range("no axiom " + std::to_string(id));
  }
  return run_check(reg[static_cast<std::size_t>(id) - 1], cfg, mutate);
}

inline CheckEntry check_lemma(std::string_view id, const GenConfig& cfg, bool mutate = false) {
  for (const auto& spec : lemma_registry()) {
    if (spec.id == id) return run_check(spec, cfg, mutate);
  }
  throw std::out_of_range("no lemma '" + std::string(id) + "'");
}

inline AxiomReport run_registry(const std::vector<CheckSpec>& reg, const GenConfig& cfg,
                                bool mutate = false) {
  cfg.validate();
  AxiomReport report{cfg, {}};
  for (const auto& spec : reg) report.checks.push_back(run_check(spec, cfg, mutate));
  return report;
}

inline AxiomReport run_axioms(const GenConfig& cfg, bool mutate = false) {
  return run_registry(axiom_registry(), cfg, mutate);
}

inline AxiomReport run_lemmas(const GenConfig& cfg, bool mutate = false) {
  return run_registry(lemma_registry(), cfg, mutate);
}

}  // namespace daghilb
