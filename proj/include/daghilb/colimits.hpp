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

// Directed colimits of contractions at finite truncation.
//
// A finite directed poset has a maximum, and the colimit of a diagram over it
// is the object at the maximum with the diagram's own edges as cocone legs.
// Infinite increasing chains of scalars are represented by a finite prefix
// plus a declared supremum.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "daghilb/concat.hpp"
#include "daghilb/errors.hpp"
#include "daghilb/tolerances.hpp"

namespace daghilb {

// ---------------------------------------------------------------------------
// Finite directed diagrams
// ---------------------------------------------------------------------------

class FiniteDiagram {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    ConMor mor;
  };

  /// `edges` lists one morphism per strictly comparable pair i < j. The
  /// order must be transitive and antisymmetric, every pair of nodes needs
  /// an upper bound, and edges must compose: edge(i,k) = edge(j,k)∘edge(i,j).
  /// Violations throw Inadmissible (ShapeError for mismatched objects).
  FiniteDiagram(std::vector<HObj> objects, std::vector<Edge> edges, double tol = kTol.eq)
      : objects_(std::move(objects)) {
    const std::size_t n = objects_.size();
    if (n == 0) throw Inadmissible("empty diagram has no colimit in this representation");
    for (auto& e : edges) {
      if (e.from >= n || e.to >= n) throw ShapeError("edge refers to a missing node");
      if (e.from == e.to) throw Inadmissible("explicit identity edge");
      if (!(e.mor.dom() == objects_[e.from]) || !(e.mor.cod() == objects_[e.to])) {
        throw ShapeError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                         " does not match its node objects");
      }
      if (!edges_.emplace(std::pair{e.from, e.to}, e.mor).second) {
        throw Inadmissible("duplicate edge");
      }
    }
    for (const auto& [key, mor] : edges_) {
      if (edges_.contains({key.second, key.first})) throw Inadmissible("order is not antisymmetric");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (i == j || j == k || i == k) continue;
          if (!leq(i, j) || !leq(j, k)) continue;
          if (!leq(i, k)) throw Inadmissible("order is not transitive");
          if (!approx_equal(edge(i, k), compose(edge(j, k), edge(i, j)), tol)) {
            throw Inadmissible("diagram is not functorial at " + std::to_string(i) + "<=" +
                               std::to_string(j) + "<=" + std::to_string(k));
          }
        }
    std::optional<std::size_t> top;
    for (std::size_t t = 0; t < n && !top; ++t) {
      bool above_all = true;
      for (std::size_t i = 0; i < n; ++i) above_all = above_all && leq(i, t);
      if (above_all) top = t;
    }
    if (!top) throw Inadmissible("diagram is not directed: no upper bound for all nodes");
    top_ = *top;
  }

  /// A chain H₀ → H₁ → … with the given consecutive steps; all composites
  /// are filled in.
  static FiniteDiagram chain(std::span<const ConMor> steps) {
    if (steps.empty()) throw Inadmissible("chain needs at least one step");
    std::vector<HObj> objects{steps.front().dom()};
    for (const auto& s : steps) objects.push_back(s.cod());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      ConMor acc = steps[i];
      edges.push_back({i, i + 1, acc});
      for (std::size_t j = i + 1; j < steps.size(); ++j) {
        acc = compose(steps[j], acc);
        edges.push_back({i, j + 1, acc});
      }
    }
    return FiniteDiagram(std::move(objects), std::move(edges));
  }

  static FiniteDiagram single(const HObj& h) { return FiniteDiagram({h}, {}); }

  std::size_t size() const { return objects_.size(); }
  const std::vector<HObj>& objects() const { return objects_; }
  std::size_t top() const { return top_; }

  bool leq(std::size_t i, std::size_t j) const { return i == j || edges_.contains({i, j}); }

  /// The edge i → j (identity when i = j). Throws if i ≰ j.
  ConMor edge(std::size_t i, std::size_t j) const {
    if (i == j) return identity(objects_.at(i));
    auto it = edges_.find({i, j});
    if (it == edges_.end()) throw Inadmissible("nodes are not comparable");
    return it->second;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& [key, mor] : edges_) out.push_back({key.first, key.second, mor});
    return out;
  }

 private:
  std::vector<HObj> objects_;
  std::map<std::pair<std::size_t, std::size_t>, ConMor> edges_;
  std::size_t top_ = 0;
};

/// Colimit of a finite directed diagram: the object at the maximum node.
struct FiniteColimit {
  HObj apex;
  std::vector<ConMor> legs;
  FiniteDiagram diagram;

  /// Mediator from this colimit to another cocone {t_i}: t_top. Rejects
  /// cocones that do not commute with the diagram.
  ConMor mediate(std::span<const ConMor> cocone, double tol = kTol.eq) const {
    if (cocone.size() != diagram.size()) throw ShapeError("cocone has the wrong number of legs");
    for (std::size_t i = 0; i < diagram.size(); ++i) {
      if (!(cocone[i].dom() == diagram.objects()[i])) throw ShapeError("cocone leg domain mismatch");
      if (!(cocone[i].cod() == cocone.front().cod())) throw ShapeError("cocone legs disagree on apex");
    }
    for (std::size_t i = 0; i < diagram.size(); ++i)
      for (std::size_t j = 0; j < diagram.size(); ++j) {
        if (i == j || !diagram.leq(i, j)) continue;
        if (!approx_equal(compose(cocone[j], diagram.edge(i, j)), cocone[i], tol)) {
          throw Inadmissible("not a cocone: leg " + std::to_string(i) + " disagrees with leg " +
                             std::to_string(j));
        }
      }
    const ConMor& u = cocone[diagram.top()];
    for (std::size_t i = 0; i < diagram.size(); ++i) {
      if (!approx_equal(compose(u, legs[i]), cocone[i], tol)) {
        throw Inadmissible("mediator fails on leg " + std::to_string(i));
      }
    }
    return u;
  }
};

inline FiniteColimit finite_colimit(const FiniteDiagram& d) {
  FiniteColimit out{d.objects()[d.top()], {}, d};
  for (std::size_t i = 0; i < d.size(); ++i) out.legs.push_back(d.edge(i, d.top()));
  return out;
}

/// Result of checking a diagram of isometries: the adjoint-cocone identity
/// t_ik† ∘ t_jk = t_ij† and isometric colimit legs.
struct ChainReport {
  bool pass = true;
  double worst_residual = 0.0;
};

inline ChainReport dagger_mono_chain_check(const FiniteDiagram& d, const Tolerances& tol = kTol) {
  for (const auto& e : d.edges()) {
    if (!is_isometry(e.mor.mor(), tol.ortho)) {
      throw Inadmissible("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                         " is not an isometry");
    }
  }
  ChainReport report;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!d.leq(i, j) || !d.leq(j, k)) continue;
        const Matrix lhs = adjoint(d.edge(i, k).mat()) * d.edge(j, k).mat();
        const Matrix rhs = adjoint(d.edge(i, j).mat());
        const double r = distance(lhs, rhs);
        report.worst_residual = std::max(report.worst_residual, r);
        report.pass = report.pass && r <= tol.eq;
      }
  const FiniteColimit c = finite_colimit(d);
  for (const auto& leg : c.legs) {
    const double r = isometry_defect(leg.mat());
    report.worst_residual = std::max(report.worst_residual, r);
    report.pass = report.pass && r <= tol.ortho;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Scalar chains
// ---------------------------------------------------------------------------

/// An increasing chain 0 < z₁ < … < z_d ≤ sup ≤ 1 acting on `base`.
struct ChainSpec {
  HObj base;
  std::vector<double> scalars;
  double sup = 1.0;

  void validate() const {
    if (scalars.empty()) throw Inadmissible("scalar chain is empty");
    if (!(scalars.front() > 0.0)) throw Inadmissible("scalar chain must start above 0");
    for (std::size_t i = 1; i < scalars.size(); ++i) {
      if (!(scalars[i] > scalars[i - 1])) throw Inadmissible("scalar chain is not strictly increasing");
    }
    if (!(scalars.back() <= sup && sup <= 1.0)) {
      throw Inadmissible("declared supremum must satisfy z_d <= sup <= 1");
    }
  }
};

/// The cocone (z_n / sup) • id over the chain with steps (z_n / z_{n+1}) • id.
struct ScalarChainCocone {
  ChainSpec spec;
  std::vector<ConMor> steps;  // n → n+1
  std::vector<ConMor> legs;   // n → apex

  /// For a compatible cocone t_n: base → K, the mediator
  /// u = (sup / z_d) • t_d with u ∘ leg_n = t_n for every n. Rejects
  /// incompatible cocones, and mediators of norm above 1 (the supremum was
  /// declared too small for this target).
  ConMor mediate(std::span<const ConMor> cocone, const Tolerances& tol = kTol) const {
    const auto& z = spec.scalars;
    if (cocone.size() != z.size()) throw ShapeError("cocone has the wrong number of legs");
    for (const auto& t : cocone) {
      if (!(t.dom() == spec.base) || !(t.cod() == cocone.front().cod())) {
        throw ShapeError("cocone leg has the wrong shape");
      }
    }
    for (std::size_t n = 0; n + 1 < z.size(); ++n) {
      if (!approx_equal(compose(cocone[n + 1], steps[n]), cocone[n], tol.eq)) {
        throw Inadmissible("incompatible cocone at step " + std::to_string(n + 1));
      }
    }
    const Mor u = scalar_act(Scalar(spec.base.field, spec.sup / z.back()), cocone.back());
    auto admitted = ConMor::try_admit(u, tol.con);
    if (!admitted) throw Inadmissible("mediator is not a contraction: declared supremum too small");
    for (std::size_t n = 0; n < z.size(); ++n) {
      if (!approx_equal(compose(*admitted, legs[n]), cocone[n], tol.eq)) {
        throw Inadmissible("mediator fails on leg " + std::to_string(n + 1));
      }
      const Mor rescaled = scalar_act(Scalar(spec.base.field, spec.sup / z[n]), cocone[n]);
      if (!approx_equal(rescaled, admitted->mor(), tol.eq)) {
        throw Inadmissible("cross-index inconsistency at leg " + std::to_string(n + 1));
      }
    }
    return *admitted;
  }
};

inline ScalarChainCocone scalar_chain_cocone(const ChainSpec& spec) {
  spec.validate();
  ScalarChainCocone out{spec, {}, {}};
  const auto& z = spec.scalars;
  const ConMor id = identity(spec.base);
  const Field f = spec.base.field;
  for (std::size_t n = 0; n + 1 < z.size(); ++n) {
    out.steps.push_back(scaled(Scalar(f, z[n] / z[n + 1]), id));
  }
  for (double zn : z) out.legs.push_back(scaled(Scalar(f, zn / spec.sup), id));
  return out;
}

}  // namespace daghilb
