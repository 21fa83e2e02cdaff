// families.hpp — the parametric 21-point plane configurations of types A, B
// and C, the degenerate configuration of all F4-rational points, their sextic
// forms, J-invariants and parameter groups; verification that the
// configuration is the zero scheme of the sextic's differential; the code cut
// out by a configuration; and recovery of (type, lambda, component) from a
// labelled configuration.
#pragma once

#include <array>
#include <vector>

#include "code21.hpp"
#include "plane.hpp"
#include "tripoly.hpp"

namespace k3m {

enum class Family { A, B, C, DK };

char family_letter(Family t);
Family family_from_letter(char c);  // 'A', 'B', 'C', or 'D' for the degenerate one

// Lifts of F4 scalars into the fields used for configurations.  The second
// argument supplies the context (relevant only for GF(2^m)).
inline F4 lift_scalar(F4 a, const F4&) { return a; }
inline RatFun lift_scalar(F4 a, const RatFun&) { return RatFun::constant(a); }
inline GFElement lift_scalar(F4 a, const GFElement& sample) {
  return GFElement::from_f4(a, sample.ctx());
}

// The 21 points with polynomial coordinates in the parameter l (constant for
// the degenerate family).  Index i holds the point labelled P_(i+1).
using PolyConfig = std::array<PolyPoint, 21>;
const PolyConfig& gamma_table(Family t);

// The table with l evaluated at a field element (the coordinates of each
// table point are coprime, so specialization never produces [0,0,0]).
template <class K>
std::array<PPoint<K>, 21> gamma_eval(Family t, const K& lambda) {
  const PolyConfig& tbl = gamma_table(t);
  auto lift = [&](F4 a) { return lift_scalar(a, lambda); };
  std::array<PPoint<K>, 21> out;
  for (size_t i = 0; i < 21; ++i) {
    std::array<K, 3> c;
    for (size_t j = 0; j < 3; ++j) c[j] = tbl[i].x[j].template eval_with<K>(lambda, lift);
    out[i] = PPoint<K>(c[0], c[1], c[2]);
  }
  return out;
}

template <class K>
bool configuration_injective(const std::array<PPoint<K>, 21>& cfg) {
  for (size_t i = 0; i < 21; ++i)
    for (size_t j = i + 1; j < 21; ++j)
      if (cfg[i] == cfg[j]) return false;
  return true;
}

// The sextic form of the family (over F4[l]; the degenerate form has no l).
const TriPoly& sextic(Family t);

// J-invariants: J as a rational function of l, and its value at a parameter.
const RatFun& j_function(Family t);                            // BAD_INPUT for the degenerate family
GFElement j_invariant_at(Family t, const GFElement& lambda);   // POLE at excluded parameters

// The finite group of fractional-linear parameter changes preserving the
// family (order 6, 12, 12 for A, B, C).
const std::vector<FracLinear>& parameter_group(Family t);

// ---------------------------------------------------------------------------
// Zero-scheme verification.
struct ZeroSchemeReport {
  bool partials_vanish = false;   // dG/dX, dG/dY, dG/dZ vanish at all 21 points
  bool points_distinct = false;   // pairwise distinct over F4(l)
  bool dimension_zero = false;    // gcd certificates + specialized point count
  int quintic_span_dim = 0;       // rank of the three partials as quintics
  int specialized_zero_count = 0; // zeros of the partials over the sampled plane
  bool verified() const {
    return partials_vanish && points_distinct && dimension_zero && quintic_span_dim == 3;
  }
};

// Checks that the configuration is exactly the zero scheme of dG: the three
// partials vanish at every point, the points are distinct, the partials have
// no common factor (so the scheme has dimension 0), and a specialization of l
// into GF(2^spec_degree) has exactly 21 projective zeros.
ZeroSchemeReport verify_zero_scheme(const TriPoly& g, const PolyConfig& cfg,
                                    unsigned spec_degree = 8);

// Number of common projective zeros of the three partials of g over
// P^2(GF(2^m)) with l specialized to alpha.
int count_partial_zeros(const TriPoly& g, const GFElement& alpha);

// ---------------------------------------------------------------------------
// The code of a configuration: spanned by the all-ones word, the weight-5
// words whose points are collinear, and the weight-8 words whose points lie
// on a (necessarily nonsingular) conic with no three collinear.
Code21 configuration_code(const std::array<PPoint<F4>, 21>& cfg);
Code21 configuration_code(const std::array<PPoint<GFElement>, 21>& cfg);

// Symbolic variant: every candidate subset is first rejected by rank over two
// specializations of l (sound: a full-rank specialization forces full rank
// symbolically), and each survivor is decided exactly over F4(l).
Code21 configuration_code(const PolyConfig& cfg);

// The configuration code of the family's parametric table, computed once.
const Code21& family_code(Family t);

// Specialization values at which the parametric table stays injective: odd
// powers of the field generator outside F4; `skip` selects among them.
GFElement good_alpha(const GFContext& ctx, const PolyConfig& cfg, unsigned skip = 0);

// ---------------------------------------------------------------------------
// The line through the points of a weight-5 word, or the conic through the
// points of a weight-8 word (NO_SOLUTION / NOT_UNIQUE when the geometry does
// not cooperate).
template <class K>
Line<K> word_line(const std::array<PPoint<K>, 21>& cfg, Word w) {
  auto idx = indices_of(w);
  if (idx.size() < 2) raise(ErrorCode::BAD_INPUT, "line of a word with fewer than 2 points");
  Line<K> l = Line<K>::through(cfg[size_t(idx[0] - 1)], cfg[size_t(idx[1] - 1)]);
  for (size_t k = 2; k < idx.size(); ++k)
    if (!l.contains(cfg[size_t(idx[k] - 1)]))
      raise(ErrorCode::NO_SOLUTION, "word points are not collinear: " + word_str(w));
  return l;
}

template <class K>
Conic<K> word_conic(const std::array<PPoint<K>, 21>& cfg, Word w) {
  std::vector<PPoint<K>> pts;
  for (int i : indices_of(w)) pts.push_back(cfg[size_t(i - 1)]);
  auto basis = conic_space(pts);
  if (basis.empty()) raise(ErrorCode::NO_SOLUTION, "no conic through the word: " + word_str(w));
  if (basis.size() > 1) raise(ErrorCode::NOT_UNIQUE, "conic through the word not unique: " + word_str(w));
  return Conic<K>(basis[0]);
}

// ---------------------------------------------------------------------------
// Recovery of the parameter from a labelled configuration.
enum class Component { plus, minus };

template <class K>
struct Recovery {
  K lambda;
  Component component;
  Pgl3<K> transform;  // g with g(cfg(t(P_i))) = gamma_lambda(P_i) for all i
};

// The label involution exchanging the two components of the parameter space
// of each family.
const std::vector<int>& component_swap(Family t);  // image of 1..21, 1-based at index 0..20

Recovery<GFElement> recover_lambda(Family t, const std::array<PPoint<GFElement>, 21>& cfg);
Recovery<RatFun> recover_lambda(Family t, const std::array<PPoint<RatFun>, 21>& cfg);

}  // namespace k3m
