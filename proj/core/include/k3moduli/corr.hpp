// corr.hpp — the catalog of correspondence curves between the three moduli
// curves, with transposes, composites via elimination of the shared moduli
// coordinate, and verification of the full relation table.
//
// A correspondence curve lives in M_source x M_target and is stored as a
// canonical bivariate polynomial in (J, J') = (source coordinate, target
// coordinate): squarefree, no monomial factor, no single-variable content.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bipoly.hpp"
#include "families.hpp"

namespace k3m {

struct CorrCurve {
  Family source = Family::A;
  Family target = Family::A;
  BiPoly poly;
};

// Swap the two factors (and the variables), re-canonicalized.
CorrCurve transpose(const CorrCurve& d);

// Named collection: the three diagonals J + J', the ten curves of the
// irreducible-correspondence table, and the six transposes of the cross-type
// entries (nineteen entries in all).
class Catalog {
 public:
  static const Catalog& standard();

  void add(const std::string& name, CorrCurve d);   // BAD_INPUT on duplicate
  const CorrCurve& at(const std::string& name) const;  // BAD_INPUT if absent
  const std::map<std::string, CorrCurve>& entries() const { return entries_; }

  // Name of the entry with these endpoints and exactly this canonical
  // polynomial, if any.
  std::optional<std::string> identify(Family source, Family target,
                                      const BiPoly& canonical) const;

 private:
  std::map<std::string, CorrCurve> entries_;
};

// Eliminate the shared moduli coordinate (d1's J', d2's J) by resultant;
// returns the canonical curve in (J of d1, J' of d2).
// Errors: ENDPOINT_MISMATCH when d1.target != d2.source.
BiPoly compose_curves(const CorrCurve& d1, const CorrCurve& d2);

// Support of the composite: trial-divide the canonical eliminant by every
// catalog entry with matching endpoints; the remainder must reduce to 1.
// Errors: ENDPOINT_MISMATCH; UNKNOWN_COMPONENT when a non-unit factor
// survives (the detector for correspondences outside the catalog).
std::set<std::string> compose_support(const CorrCurve& d1, const CorrCurve& d2,
                                      const Catalog& cat);

// One row of the relation table: support of left * right.
struct Relation {
  std::string left, right;
  std::set<std::string> support;
};

// The 86 expected supports: every composable ordered pair of the sixteen
// non-diagonal entries.
const std::vector<Relation>& relation_table();

struct RelationCheck {
  std::string left, right;
  std::set<std::string> expected, derived;
  bool ok = false;
};

// Recompute every table row through compose_support and compare.
std::vector<RelationCheck> verify_relation_table(const Catalog& cat);

}  // namespace k3m
