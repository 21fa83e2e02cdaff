// autsearch.cpp — backtracking search over point images.

#include "k3moduli/autsearch.hpp"

#include <algorithm>

namespace k3m {

namespace {

struct Profile {
  std::vector<Word> w1, w2;                  // linear and quadratic words, sorted
  std::array<std::array<int, NPOINTS>, NPOINTS> pair_lin{};   // words containing both points
  std::array<std::array<int, NPOINTS>, NPOINTS> pair_quad{};  // (diagonal = point counts)
  // Per-point lists of containing words (indices into w1/w2), used when the
  // profile is the source of a search.
  std::array<std::vector<uint16_t>, NPOINTS> lin_through, quad_through;
  // All subset masks of the words, sorted, used when the profile is the
  // target: a partial image of a source word must stay inside some target
  // word of the same class or the branch is dead.  Pairwise counts alone are
  // far too weak for the most symmetric codes.
  std::vector<Word> sub_lin, sub_quad;

  explicit Profile(const Code21& c) {
    WordClasses wc = classify_words(c);
    w1 = wc.linear;
    w2 = wc.quadratic;
    for (size_t i = 0; i < w1.size(); ++i) accumulate(w1[i], uint16_t(i), pair_lin, lin_through);
    for (size_t i = 0; i < w2.size(); ++i) accumulate(w2[i], uint16_t(i), pair_quad, quad_through);
    for (Word w : w1) subsets_into(w, sub_lin);
    for (Word w : w2) subsets_into(w, sub_quad);
    sort_unique(sub_lin);
    sort_unique(sub_quad);
  }

  bool sub_ok_lin(Word m) const { return std::binary_search(sub_lin.begin(), sub_lin.end(), m); }
  bool sub_ok_quad(Word m) const { return std::binary_search(sub_quad.begin(), sub_quad.end(), m); }

  static void accumulate(Word w, uint16_t idx, std::array<std::array<int, NPOINTS>, NPOINTS>& m,
                         std::array<std::vector<uint16_t>, NPOINTS>& through) {
    std::vector<unsigned> pts;
    for (unsigned i = 0; i < NPOINTS; ++i)
      if (w >> i & 1) pts.push_back(i);
    for (unsigned a : pts) {
      through[a].push_back(idx);
      for (unsigned b : pts) ++m[a][b];
    }
  }

  static void subsets_into(Word w, std::vector<Word>& out) {
    Word s = w;
    while (true) {
      out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & w;
    }
  }

  static void sort_unique(std::vector<Word>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
};

bool same_word_set(const std::vector<Word>& ws, const Perm& s, const std::vector<Word>& target) {
  std::vector<Word> mapped;
  mapped.reserve(ws.size());
  for (Word w : ws) mapped.push_back(s.apply(w));
  std::sort(mapped.begin(), mapped.end());
  return mapped == target;
}

struct Search {
  const Profile& src;
  const Profile& dst;
  bool find_all;
  std::vector<Perm> found;

  std::array<int, NPOINTS> img{};
  std::array<bool, NPOINTS> used{};
  // Image-so-far of every source word, as a mask in the target point set.
  std::vector<Word> mask_lin, mask_quad;

  Search(const Profile& s, const Profile& d, bool all)
      : src(s), dst(d), find_all(all), mask_lin(s.w1.size(), 0), mask_quad(s.w2.size(), 0) {
    img.fill(-1);
  }

  bool leaf_ok(const Perm& s) const {
    return same_word_set(src.w1, s, dst.w1) && same_word_set(src.w2, s, dst.w2);
  }

  // Returns true when the search should stop (single-witness mode).
  bool run(unsigned depth) {
    if (depth == NPOINTS) {
      std::vector<int> images(NPOINTS);
      for (unsigned i = 0; i < NPOINTS; ++i) images[i] = img[i] + 1;
      Perm s = Perm::from_images(images);
      if (leaf_ok(s)) {
        found.push_back(s);
        if (!find_all) return true;
      }
      return false;
    }
    for (unsigned c = 0; c < NPOINTS; ++c) {
      if (used[c]) continue;
      if (dst.pair_lin[c][c] != src.pair_lin[depth][depth]) continue;
      if (dst.pair_quad[c][c] != src.pair_quad[depth][depth]) continue;
      bool ok = true;
      for (unsigned e = 0; e < depth; ++e) {
        unsigned ie = unsigned(img[e]);
        if (dst.pair_lin[c][ie] != src.pair_lin[depth][e] ||
            dst.pair_quad[c][ie] != src.pair_quad[depth][e]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      Word bit = Word(1) << c;
      for (uint16_t wi : src.lin_through[depth])
        if (!dst.sub_ok_lin(mask_lin[wi] | bit)) { ok = false; break; }
      if (ok)
        for (uint16_t wi : src.quad_through[depth])
          if (!dst.sub_ok_quad(mask_quad[wi] | bit)) { ok = false; break; }
      if (!ok) continue;
      img[depth] = int(c);
      used[c] = true;
      for (uint16_t wi : src.lin_through[depth]) mask_lin[wi] |= bit;
      for (uint16_t wi : src.quad_through[depth]) mask_quad[wi] |= bit;
      bool stop = run(depth + 1);
      for (uint16_t wi : src.lin_through[depth]) mask_lin[wi] &= ~bit;
      for (uint16_t wi : src.quad_through[depth]) mask_quad[wi] &= ~bit;
      used[c] = false;
      img[depth] = -1;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

PermGroup code_automorphisms(const Code21& c) {
  Profile prof(c);
  Search s(prof, prof, /*find_all=*/true);
  s.run(0);
  // The search lists every automorphism; keep only the ones that enlarge the
  // generated group, so the stabilizer chain stays small.
  std::vector<Perm> gens;
  PermGroup g;
  for (const Perm& p : s.found) {
    if (!g.contains(p)) {
      gens.push_back(p);
      g = PermGroup::from_generators(gens);
    }
  }
  if (g.order() != s.found.size())
    raise(ErrorCode::BAD_INPUT, "automorphism search is inconsistent with the generated group");
  return g;
}

std::optional<Perm> code_isomorphism(const Code21& a, const Code21& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  Profile pa(a), pb(b);
  if (pa.w1.size() != pb.w1.size() || pa.w2.size() != pb.w2.size()) return std::nullopt;
  Search s(pa, pb, /*find_all=*/false);
  s.run(0);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

}  // namespace k3m
