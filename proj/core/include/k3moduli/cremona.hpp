// cremona.hpp — centers of plane Cremona transformations on the 21-point
// configurations, the homaloidal quintic system, the induced map on
// configurations over F4(l), correspondence relations between family
// parameters, and the action on the Neron-Severi basis.
#pragma once

#include "autsearch.hpp"
#include "bipoly.hpp"
#include "families.hpp"

namespace k3m {

// A center is a weight-6 word meeting every linear word of the code in at
// most 2 points and every quadratic word in at most 4 points (equivalently:
// no three of its points collinear, no six on a conic, for the geometric
// realizations).  BAD_WEIGHT unless the weight is 6.
bool is_center(const Code21& code, Word c);

// All weight-6 words over the 21 points passing is_center.
std::vector<Word> enumerate_centers(const Code21& code);

// The 3-dimensional space of quintic forms with double points at the six
// center points.  rows holds the reduced-echelon basis of the solution space
// over the degree-5 monomials in decreasing lex order, rows listed in
// reverse pivot order (F1, F2, F3); the Cremona map is p -> [F1:F2:F3](p).
struct QuinticSystem {
  std::array<std::vector<RatFun>, 3> rows;

  TriPoly form(size_t i) const;  // row i with denominators cleared, primitive
};

// DEGENERATE_CENTER when three of the center points are collinear or the
// solution space does not have dimension exactly 3.
QuinticSystem quintic_system(const PolyConfig& cfg, Word center);

// Image of a single point under [F1:F2:F3]; MAP_UNDEFINED on the base locus.
PolyPoint cremona_image_point(const QuinticSystem& qs, const PolyPoint& p);

// The image configuration: the 15 points outside the center in label order,
// followed by the 6 exceptional images (one per center point, label order).
// The exceptional image over a center point p is determined by the conic
// through the other five: the quintics divisible by that conic form a
// 2-dimensional subspace, and the image point annihilates its coordinates
// with respect to (F1, F2, F3).
PolyConfig apply_cremona(const PolyConfig& cfg, Word center);

// ---------------------------------------------------------------------------
// Correspondences on the moduli parameters.

struct Correspondence {
  Family source = Family::A;
  Family target = Family::A;
  Word center = 0;
  RatFun lambda_image;                    // l' as a rational function of l
  Component component = Component::plus;  // component of the recovered labelling
  BiPoly relation;                        // canonical curve in (J, J')
};

// Full pipeline for one center of the family's code: apply the Cremona map
// at symbolic l, classify the image code by word counts, relabel via a code
// isomorphism, recover l', and eliminate l between J and J'.
Correspondence correspondence_of_center(Family t, Word center);

// Elimination of l between J = jt(l) and J' = jp(l): the canonical curve cut
// out by the resultant, with monomial factors and contents stripped and the
// squarefree part taken.  Returns J + J' when jt and jp are identical.
BiPoly eliminate_parameter(const RatFun& jt, const RatFun& jp);

// ---------------------------------------------------------------------------
// Action on the Neron-Severi basis (e_1 .. e_21, h) with e_i^2 = -2, h^2 = 2.
// Columns hold images: column i < 21 is the image of e_(i+1), column 21 the
// image of h.

using NSMatrix = std::array<std::array<int, 22>, 22>;

NSMatrix ns_gram();
NSMatrix ns_action(Word center);  // BAD_WEIGHT unless weight 6
bool preserves_gram(const NSMatrix& m);

}  // namespace k3m
