// permgroup.cpp — Schreier–Sims chain, closures and orbits.

#include "k3moduli/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace k3m {

Perm Perm::from_cycles(const std::vector<std::vector<int>>& cycles) {
  Perm r;
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > int(NPOINTS) || to < 1 || to > int(NPOINTS))
        raise(ErrorCode::BAD_INPUT, "cycle point out of range");
      r.p[from - 1] = uint8_t(to - 1);
    }
  }
  // Validate bijectivity.
  std::array<bool, NPOINTS> seen{};
  for (unsigned i = 0; i < NPOINTS; ++i) {
    if (seen[r.p[i]]) raise(ErrorCode::BAD_INPUT, "cycles are not disjoint");
    seen[r.p[i]] = true;
  }
  return r;
}

Perm Perm::from_images(const std::vector<int>& images) {
  if (images.size() != NPOINTS)
    raise(ErrorCode::BAD_INPUT, "permutation needs 21 images");
  Perm r;
  std::array<bool, NPOINTS> seen{};
  for (unsigned i = 0; i < NPOINTS; ++i) {
    int im = images[i];
    if (im < 1 || im > int(NPOINTS) || seen[im - 1])
      raise(ErrorCode::BAD_INPUT, "images are not a permutation of 1..21");
    seen[im - 1] = true;
    r.p[i] = uint8_t(im - 1);
  }
  return r;
}

std::string Perm::cycle_str() const {
  std::string out;
  std::array<bool, NPOINTS> seen{};
  for (unsigned i = 0; i < NPOINTS; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup PermGroup::from_generators(std::vector<Perm> gens) {
  PermGroup g;
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const Perm& p) { return p.is_identity(); }),
             gens.end());
  g.gens_ = gens;
  if (!gens.empty()) {
    g.chain_.push_back(Level{});
    g.chain_[0].gens = gens;
    g.extend(0);
  }
  g.order_ = 1;
  for (const Level& l : g.chain_) g.order_ *= l.transversal.size();
  return g;
}

void PermGroup::rebuild_transversal(size_t l) {
  Level& lev = chain_[l];
  lev.transversal.clear();
  lev.transversal.emplace(lev.base, Perm::identity());
  std::deque<int> queue = {lev.base};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    const Perm ux = lev.transversal.at(x);
    for (const Perm& s : lev.gens) {
      int y = s(uint8_t(x));
      if (!lev.transversal.count(y)) {
        lev.transversal.emplace(y, s * ux);
        queue.push_back(y);
      }
    }
  }
}

Perm PermGroup::sift(Perm g, size_t from, bool* ok) const {
  for (size_t l = from; l < chain_.size(); ++l) {
    const Level& lev = chain_[l];
    int x = g(uint8_t(lev.base));
    auto it = lev.transversal.find(x);
    if (it == lev.transversal.end()) {
      *ok = false;
      return g;
    }
    g = it->second.inverse() * g;
  }
  *ok = g.is_identity();
  return g;
}

void PermGroup::extend(size_t l) {
  Level& lev = chain_[l];
  if (lev.base < 0) {
    // Choose the first point moved by some generator at this level.
    for (const Perm& s : lev.gens) {
      for (unsigned i = 0; i < NPOINTS; ++i)
        if (s(uint8_t(i)) != i) { lev.base = int(i); break; }
      if (lev.base >= 0) break;
    }
    if (lev.base < 0) return;  // all generators trivial
  }
  for (;;) {
    rebuild_transversal(l);
    bool dirty = false;
    // Schreier generators must sift to the identity through deeper levels.
    for (const auto& [x, ux] : chain_[l].transversal) {
      for (const Perm& s : chain_[l].gens) {
        const Perm& uy = chain_[l].transversal.at(s(uint8_t(x)));
        Perm schreier = uy.inverse() * s * ux;
        if (schreier.is_identity()) continue;
        bool ok = false;
        Perm residue = (l + 1 < chain_.size()) ? sift(schreier, l + 1, &ok)
                                               : schreier;
        if (l + 1 >= chain_.size()) ok = residue.is_identity();
        if (!ok) {
          if (l + 1 == chain_.size()) chain_.push_back(Level{});
          chain_[l + 1].gens.push_back(residue);
          extend(l + 1);
          dirty = true;
        }
      }
      if (dirty) break;
    }
    if (!dirty) return;
  }
}

bool PermGroup::contains(const Perm& g) const {
  if (chain_.empty()) return g.is_identity();
  bool ok = false;
  sift(g, 0, &ok);
  return ok;
}

std::vector<Perm> PermGroup::elements(uint64_t limit) const {
  if (order_ > limit)
    raise(ErrorCode::TOO_LARGE, "group of order " + std::to_string(order_) +
                                    " exceeds materialization limit " + std::to_string(limit));
  std::set<Perm> seen = {Perm::identity()};
  std::deque<Perm> queue = {Perm::identity()};
  while (!queue.empty()) {
    Perm g = queue.front();
    queue.pop_front();
    for (const Perm& s : gens_) {
      Perm h = s * g;
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<Word> PermGroup::orbit_of(Word w) const {
  std::set<Word> seen = {w};
  std::deque<Word> queue = {w};
  while (!queue.empty()) {
    Word x = queue.front();
    queue.pop_front();
    for (const Perm& s : gens_) {
      Word y = s.apply(x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

std::vector<std::pair<Word, size_t>> PermGroup::orbit_decomposition(
    const std::vector<Word>& words) const {
  std::set<Word> remaining(words.begin(), words.end());
  std::vector<std::pair<Word, size_t>> out;
  while (!remaining.empty()) {
    Word seed = *remaining.begin();
    std::vector<Word> orb = orbit_of(seed);
    for (Word w : orb)
      if (!remaining.erase(w))
        raise(ErrorCode::BAD_INPUT,
              "orbit leaves the given word set at " + word_str(w));
    out.emplace_back(*std::min_element(orb.begin(), orb.end()), orb.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace k3m
