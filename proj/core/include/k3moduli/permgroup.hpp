// permgroup.hpp — permutations of the 21 points and finitely generated
// permutation groups.
//
// Group order comes from a deterministic Schreier–Sims stabilizer chain, so
// it works at any order; explicit element lists are materialized by breadth-
// first closure only when the order is at most 30000.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "code21.hpp"

namespace k3m {

struct Perm {
  std::array<uint8_t, NPOINTS> p;  // image of point i (0-based)

  Perm() {
    for (unsigned i = 0; i < NPOINTS; ++i) p[i] = uint8_t(i);
  }
  static Perm identity() { return Perm(); }

  // Build from disjoint cycles of 1-based points, e.g. {{1,2},{3,5}}.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles);
  // Build from the images of 1..21 (1-based).
  static Perm from_images(const std::vector<int>& images);

  uint8_t operator()(uint8_t i) const { return p[i]; }
  bool is_identity() const { return *this == identity(); }
  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& o) const { return p < o.p; }

  // (a*b)(i) = a(b(i)): b acts first.
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    for (unsigned i = 0; i < NPOINTS; ++i) r.p[i] = a.p[b.p[i]];
    return r;
  }
  Perm inverse() const {
    Perm r;
    for (unsigned i = 0; i < NPOINTS; ++i) r.p[p[i]] = uint8_t(i);
    return r;
  }

  Word apply(Word w) const {
    Word r = 0;
    for (unsigned i = 0; i < NPOINTS; ++i)
      if (w >> i & 1) r |= Word(1) << p[i];
    return r;
  }

  std::string cycle_str() const;  // "(1 2)(3 5)" with 1-based points
};

class PermGroup {
 public:
  PermGroup() = default;
  static PermGroup from_generators(std::vector<Perm> gens);

  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t order() const { return order_; }
  bool contains(const Perm& g) const;

  // All elements via BFS closure; TOO_LARGE when the order exceeds the limit.
  std::vector<Perm> elements(uint64_t limit = 30000) const;

  // Orbit of a word under the generators.
  std::vector<Word> orbit_of(Word w) const;

  // Partition the given words into orbits; each orbit is reported by its
  // smallest member together with the orbit size, sorted by representative.
  std::vector<std::pair<Word, size_t>> orbit_decomposition(const std::vector<Word>& words) const;

 private:
  std::vector<Perm> gens_;
  uint64_t order_ = 1;

  // Stabilizer chain (filled by from_generators).
  struct Level {
    int base = -1;
    std::vector<Perm> gens;          // generators fixing all earlier base points
    std::map<int, Perm> transversal; // orbit point -> coset representative
  };
  std::vector<Level> chain_;

  void rebuild_transversal(size_t l);
  Perm sift(Perm g, size_t from, bool* ok) const;
  void extend(size_t l);
};

}  // namespace k3m
