// groups.hpp — matrix-group closures over the coefficient fields, the
// parameter substitution groups acting on the lambda-line, stabilizers of
// specialized configurations, and the component homomorphism that splits the
// code automorphisms.
#pragma once

#include <string>
#include <vector>

#include "families.hpp"
#include "permgroup.hpp"
#include "plane.hpp"

namespace k3m {

// A finite group of homographies with its elements materialized.
template <class K>
struct Pgl3Group {
  std::vector<Pgl3<K>> gens;
  std::vector<Pgl3<K>> elements;

  size_t order() const { return elements.size(); }
  bool contains(const Pgl3<K>& g) const {
    for (const auto& e : elements)
      if (e == g) return true;
    return false;
  }
};

// Breadth-first closure under products; canonical scaling deduplicates scalar
// multiples.  EXPLOSION once the element count exceeds the bound.
template <class K>
Pgl3Group<K> pgl_closure(std::vector<Pgl3<K>> gens, size_t bound = 1000000) {
  Pgl3Group<K> g;
  g.gens = gens;
  if (gens.empty()) return g;
  const K* nz = nullptr;
  for (const auto& e : gens[0].m)
    if (!e.is_zero()) {
      nz = &e;
      break;
    }
  auto [zero, one] = zero_one_from(*nz);
  Pgl3<K> id({one, zero, zero, zero, one, zero, zero, zero, one});
  g.elements.push_back(id);
  std::vector<Pgl3<K>> frontier{id};
  while (!frontier.empty()) {
    std::vector<Pgl3<K>> next;
    for (const auto& e : frontier)
      for (const auto& s : g.gens) {
        Pgl3<K> p = e * s;
        if (g.contains(p)) continue;
        if (g.elements.size() >= bound)
          raise(ErrorCode::EXPLOSION, "group closure exceeded its bound");
        g.elements.push_back(p);
        next.push_back(p);
      }
    frontier = std::move(next);
  }
  return g;
}

// Entrywise image of an F4 matrix in a field containing F4; `sample` supplies
// the field context.
template <class K>
Pgl3<K> lift_pgl3(const Pgl3<F4>& m, const K& sample) {
  std::array<K, 9> e{};
  for (size_t i = 0; i < 9; ++i) e[i] = lift_scalar(m.m[i], sample);
  return Pgl3<K>(e);
}

// Generators of the matrix group that preserves the specialized configuration
// of the family at the given parameter value.  The family C group involves
// alpha itself; A and B consist of constant matrices.
std::vector<Pgl3<GFElement>> family_stabilizer_generators(Family t, const GFElement& alpha);

// True iff every element of the group permutes the 21-point set.
template <class K>
bool stabilizes_configuration(const Pgl3Group<K>& g, const std::array<PPoint<K>, 21>& cfg) {
  for (const auto& e : g.elements)
    for (const auto& p : cfg) {
      PPoint<K> q = e.apply(p);
      bool found = false;
      for (const auto& r : cfg)
        if (r == q) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

// All homographies realizing some relabeling of the configuration drawn from
// the given permutation group: for each sigma, the frame map sending four
// points in general position to their sigma-images, kept when it matches on
// all 21 points.  NOT_IN_STRATUM when the configuration carries no frame.
Pgl3Group<GFElement> full_stabilizer(const std::array<PPoint<GFElement>, 21>& cfg,
                                     const PermGroup& aut);

// Summary of the parameter substitution group of a family.
struct GammaReport {
  size_t order = 0;
  bool closed = false;       // set closed under composition and inverse
  bool j_fixed = false;      // J o phi = J for every substitution
  bool free_action = false;  // fixed points only at excluded parameter values
  std::string structure;     // "S3", "A4", or "AGL(1,4)"
};
GammaReport gamma_group_action(Family t);

// Side of the parameter stratum reached by relabeling the symbolic
// configuration with sigma (a code automorphism).
Component component_sign(Family t, const Perm& sigma);

// The subgroup of code automorphisms whose relabelings keep each component of
// the parameter stratum; index 2 in the full automorphism group.
const PermGroup& component_kernel(Family t);

}  // namespace k3m
