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

#include <functional>
#include <string>

#include "support.hpp"

namespace daghilb {
namespace {

using namespace daghilb::testing;

/// Runs `prop` on `trials` instances drawn from a dedicated stream and
/// reports the first failing case index with its message.
void for_all(const std::string& name, Field field, int trials,
             const std::function<std::string(Sampler&)>& prop) {
  Sampler s(0x5eed, name, field, 4);
  for (int i = 0; i < trials; ++i) {
    const std::string why = prop(s);
    if (!why.empty()) {
      ADD_FAILURE() << name << " (" << field_name(field) << ") fails at case " << i << ": " << why;
      return;
    }
  }
}

std::string within(double r, double tol, const char* what) {
  return r <= tol ? std::string() : std::string(what) + " residual " + std::to_string(r);
}

class Laws : public ::testing::TestWithParam<Field> {};

TEST_P(Laws, DaggerIsAContravariantInvolution) {
  for_all("dagger-functor", GetParam(), 200, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), b = s.obj(s.dim()), c = s.obj(s.dim());
    const ConMor f = gen_contraction(s, a, b), g = gen_contraction(s, b, c);
    return within(distance(dagger(compose(g, f)).mat(), compose(dagger(f), dagger(g)).mat()), 1e-14,
                  "(gf)^dag");
  });
}

TEST_P(Laws, TensorInterchange) {
  for_all("interchange", GetParam(), 200, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), b = s.obj(s.dim()), c = s.obj(s.dim());
    const HObj x = s.obj(s.dim()), y = s.obj(s.dim()), z = s.obj(s.dim());
    const ConMor f = gen_contraction(s, a, b), f2 = gen_contraction(s, b, c);
    const ConMor g = gen_contraction(s, x, y), g2 = gen_contraction(s, y, z);
    const double t = distance(compose(tensor(f2, g2), tensor(f, g)).mat(),
                              tensor(compose(f2, f), compose(g2, g)).mat());
    const double o = distance(compose(oplus(f2, g2), oplus(f, g)).mat(),
                              oplus(compose(f2, f), compose(g2, g)).mat());
    return within(std::max(t, o), 1e-14, "interchange");
  });
}

TEST_P(Laws, AssociatorsAreNaturalAndPentagonal) {
  for_all("associator", GetParam(), 100, [](Sampler& s) {
    const HObj a = s.obj(s.dim(1, 3)), b = s.obj(s.dim(1, 3)), c = s.obj(s.dim(1, 3)),
               d = s.obj(s.dim(1, 2));
    // Pentagon for ⊗.
    const ConMor lhs = compose(tensor_associator(a, b, tensor(c, d)),
                               tensor_associator(tensor(a, b), c, d));
    const ConMor rhs = compose(
        tensor(identity(a), tensor_associator(b, c, d)),
        compose(tensor_associator(a, tensor(b, c), d), tensor(tensor_associator(a, b, c), identity(d))));
    // Pentagon for ⊕.
    const ConMor lo = compose(oplus_associator(a, b, oplus(c, d)), oplus_associator(oplus(a, b), c, d));
    const ConMor ro = compose(
        oplus(identity(a), oplus_associator(b, c, d)),
        compose(oplus_associator(a, oplus(b, c), d), oplus(oplus_associator(a, b, c), identity(d))));
    // Naturality of the ⊗ associator.
    const ConMor f = gen_contraction(s, a, a), g = gen_contraction(s, b, b), h = gen_contraction(s, c, c);
    const double nat = distance(
        compose(tensor_associator(a, b, c), tensor(tensor(f, g), h)).mat(),
        compose(tensor(f, tensor(g, h)), tensor_associator(a, b, c)).mat());
    return within(std::max({distance(lhs.mat(), rhs.mat()), distance(lo.mat(), ro.mat()), nat}), 1e-14,
                  "pentagon/naturality");
  });
}

TEST_P(Laws, BraidingsAreSymmetricAndNatural) {
  for_all("braiding", GetParam(), 100, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), b = s.obj(s.dim());
    const double sym_t = distance(compose(tensor_braiding(b, a), tensor_braiding(a, b)).mat(),
                                  identity(tensor(a, b)).mat());
    const double sym_o = distance(compose(oplus_braiding(b, a), oplus_braiding(a, b)).mat(),
                                  identity(oplus(a, b)).mat());
    const ConMor f = gen_contraction(s, a, a), g = gen_contraction(s, b, b);
    const double nat = distance(compose(tensor_braiding(a, b), tensor(f, g)).mat(),
                                compose(tensor(g, f), tensor_braiding(a, b)).mat());
    return within(std::max({sym_t, sym_o, nat}), 1e-14, "symmetry/naturality");
  });
}

TEST_P(Laws, UnitorsAreNatural) {
  for_all("unitors", GetParam(), 100, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), b = s.obj(s.dim());
    const ConMor f = gen_contraction(s, a, b);
    const HObj i = HObj::unit(a.field);
    const double l = distance(compose(tensor_left_unitor(b), tensor(identity(i), f)).mat(),
                              compose(f, tensor_left_unitor(a)).mat());
    const double r = distance(compose(tensor_right_unitor(b), tensor(f, identity(i))).mat(),
                              compose(f, tensor_right_unitor(a)).mat());
    const HObj zero_obj = HObj::zero(a.field);
    const double o = distance(compose(oplus_left_unitor(b), oplus(identity(zero_obj), f)).mat(),
                              compose(f, oplus_left_unitor(a)).mat());
    return within(std::max({l, r, o}), 1e-14, "unitor");
  });
}

TEST_P(Laws, ZeroObjectIsInitialAndTerminal) {
  for_all("zero-object", GetParam(), 50, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), z = HObj::zero(a.field);
    const ConMor f = gen_contraction(s, z, a), g = gen_contraction(s, a, z);
    const bool ok = f.mat() == zero(z, a).mat() && g.mat() == zero(a, z).mat() &&
                    compose(zero(z, a), zero(a, z)).mat() == zero(a, a).mat();
    return ok ? std::string() : std::string("nonzero map through 0");
  });
}

TEST_P(Laws, FactorisationIsUniqueUpToUnitary) {
  for_all("factor-unique", GetParam(), 150, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), b = s.obj(s.dim());
    const ConMor t = gen_contraction(s, a, b);
    const Factorization f = factor(t);
    // Any other epi/dagger-mono factorisation k'e' with k' = k∘u gives e' = u†∘e.
    const ConMor u = gen_unitary(s, f.e.cod());
    const ConMor k2 = compose(f.k, u), e2 = compose(dagger(u), f.e);
    const double r = distance(compose(k2, e2).mat(), t.mat());
    const double proj = distance(range_projector(k2), range_projector(f.k));
    return within(std::max(r, proj), kTol.eq, "alternative factorisation");
  });
}

TEST_P(Laws, FractionOperationsRespectEquivalence) {
  for_all("fraction-congruence", GetParam(), 150, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), b = s.obj(s.dim()), c = s.obj(s.dim());
    auto gen = [&](const HObj& x, const HObj& y) {
      return Fraction(gen_contraction(s, x, y), s.scalar(0.05, 1.0));
    };
    auto again = [&](const Fraction& f) {
      const Scalar x = s.scalar(0.05, 1.0);
      return Fraction(scaled(x, f.num()), x * f.den());
    };
    const Fraction f = gen(a, b), g = gen(b, c);
    const double r = std::max({frac_residual(frac_compose(g, f), frac_compose(again(g), again(f))),
                               frac_residual(frac_dagger(f), frac_dagger(again(f))),
                               frac_residual(frac_tensor(f, g), frac_tensor(again(f), again(g))),
                               frac_residual(frac_oplus(f, g), frac_oplus(again(f), again(g)))});
    return within(r, kTol.eq, "congruence");
  });
}

TEST_P(Laws, ToHilbPreservesMonoidalStructure) {
  for_all("to-hilb-monoidal", GetParam(), 150, [](Sampler& s) {
    const HObj a = s.obj(s.dim()), b = s.obj(s.dim()), c = s.obj(s.dim()), d = s.obj(s.dim());
    const Fraction f(gen_contraction(s, a, b), s.scalar(0.1, 1.0));
    const Fraction g(gen_contraction(s, c, d), s.scalar(0.1, 1.0));
    const double ref = std::max(1.0, to_hilb(f).norm() * to_hilb(g).norm());
    const double t = distance(to_hilb(frac_tensor(f, g)).mat(), kron(to_hilb(f).mat(), to_hilb(g).mat()));
    const double o =
        distance(to_hilb(frac_oplus(f, g)).mat(), direct_sum(to_hilb(f).mat(), to_hilb(g).mat()));
    return within(std::max(t, o) / ref, 1e-12, "to_hilb monoidal");
  });
}

INSTANTIATE_TEST_SUITE_P(Fields, Laws, ::testing::Values(Field::Real, Field::Complex), FieldName());

}  // namespace
}  // namespace daghilb
