// corr.cpp — catalog construction, transposes, and composites of
// correspondence curves via Sylvester elimination of the shared coordinate.
#include "k3moduli/corr.hpp"

#include <utility>

#include "k3moduli/errors.hpp"

namespace k3m {

CorrCurve transpose(const CorrCurve& d) {
  return CorrCurve{d.target, d.source, canonicalize_curve(d.poly.transposed())};
}

void Catalog::add(const std::string& name, CorrCurve d) {
  if (entries_.count(name)) raise(ErrorCode::BAD_INPUT, "duplicate catalog name " + name);
  entries_.emplace(name, std::move(d));
}

const CorrCurve& Catalog::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) raise(ErrorCode::BAD_INPUT, "unknown catalog name " + name);
  return it->second;
}

std::optional<std::string> Catalog::identify(Family source, Family target,
                                             const BiPoly& canonical) const {
  for (const auto& [name, e] : entries_)
    if (e.source == source && e.target == target && e.poly == canonical) return name;
  return std::nullopt;
}

namespace {

CorrCurve curve(Family s, Family t, const char* text) {
  return CorrCurve{s, t, parse_bipoly(text)};
}

}  // namespace

const Catalog& Catalog::standard() {
  static const Catalog cat = [] {
    Catalog c;
    c.add("Delta_A", curve(Family::A, Family::A, "J+J'"));
    c.add("Delta_B", curve(Family::B, Family::B, "J+J'"));
    c.add("Delta_C", curve(Family::C, Family::C, "J+J'"));
    c.add("D_AA1", curve(Family::A, Family::A,
                         "J^3*J'^2+J^2*J'^3+J^2*J'^2+J*J'+1"));
    c.add("D_AA2", curve(Family::A, Family::A,
                         "J^6*J'^2+J^4*J'^4+J^2*J'^6+J^4*J'^3+J^3*J'^4+J^4*J'^2+J^3*J'^3"
                         "+J^2*J'^4+J^4*J'+J*J'^4+J^3*J'+J^2*J'^2+J*J'^3+J^3+J^2*J'"
                         "+J*J'^2+J'^3"));
    c.add("D_BB1", curve(Family::B, Family::B,
                         "J^4*J'+J^3*J'^2+J^2*J'^3+J*J'^4+J^3*J'+J^2*J'^2+J*J'^3+1"));
    c.add("D_CC1", curve(Family::C, Family::C,
                         "J^4*J'^4+J^3*J'+J^2*J'^2+J*J'^3+J^3+J^2*J'+J*J'^2+J'^3"));
    c.add("D_AB1", curve(Family::A, Family::B, "J^4+J^2*J'+J*J'^2+J*J'+J'"));
    c.add("D_AB2", curve(Family::A, Family::B,
                         "J^6*J'+J^5*J'+J^4*J'^2+J^3*J'^3+J^4*J'+J^2*J'^2+J^2*J'+J*J'+1"));
    c.add("D_BC1", curve(Family::B, Family::C, "J*J'+1"));
    c.add("D_BC2", curve(Family::B, Family::C,
                         "J^4*J'^3+J^3*J'^3+J^3*J'^2+J^2*J'^2+J'^4+J^2*J'+J*J'+J"));
    c.add("D_CA1", curve(Family::C, Family::A, "J^2*J'^4+J*J'^2+J*J'+J+J'"));
    c.add("D_CA2", curve(Family::C, Family::A,
                         "J^2*J'^6+J^2*J'^5+J^2*J'^4+J*J'^4+J^2*J'^2+J^3+J^2*J'+J*J'^2+J'^3"));
    c.add("D_BA1", transpose(c.at("D_AB1")));
    c.add("D_BA2", transpose(c.at("D_AB2")));
    c.add("D_CB1", transpose(c.at("D_BC1")));
    c.add("D_CB2", transpose(c.at("D_BC2")));
    c.add("D_AC1", transpose(c.at("D_CA1")));
    c.add("D_AC2", transpose(c.at("D_CA2")));
    return c;
  }();
  return cat;
}

BiPoly compose_curves(const CorrCurve& d1, const CorrCurve& d2) {
  if (d1.target != d2.source)
    raise(ErrorCode::ENDPOINT_MISMATCH, "composite endpoints do not meet");
  // The shared coordinate is d1's J' and d2's J.  Rewrite both curves as
  // polynomials in it, with the surviving variables placed in the J slot
  // (from d1) and the J' slot (from d2) of the result, and eliminate.
  auto lift = [](const UPoly<F2Poly>& p, bool into_second) {
    std::vector<BiPoly> cs;
    for (int i = 0; i <= p.deg(); ++i) {
      BiPoly coeff;
      F2Poly f = p.coeff(size_t(i));
      for (int e = 0; e <= f.deg(); ++e)
        if (f.get(unsigned(e)))
          coeff.toggle(into_second ? 0 : unsigned(e), into_second ? unsigned(e) : 0);
      cs.push_back(coeff);
    }
    return UPoly<BiPoly>(cs);
  };
  BiPoly res = sylvester_resultant(lift(rows_in_jp(d1.poly), false),
                                   lift(rows_in_j(d2.poly), true));
  if (res.is_zero()) raise(ErrorCode::NO_SOLUTION, "composite eliminant vanishes");
  return canonicalize_curve(res);
}

std::set<std::string> compose_support(const CorrCurve& d1, const CorrCurve& d2,
                                      const Catalog& cat) {
  BiPoly rem = compose_curves(d1, d2);
  std::set<std::string> support;
  for (const auto& [name, e] : cat.entries()) {
    if (e.source != d1.source || e.target != d2.target) continue;
    BiPoly q;
    if (rem.divides_into(e.poly, &q)) {
      support.insert(name);
      rem = q;
    }
  }
  if (!rem.is_one())
    raise(ErrorCode::UNKNOWN_COMPONENT,
          "composite has a component outside the catalog: " + rem.str());
  return support;
}

const std::vector<Relation>& relation_table() {
  static const std::vector<Relation> table = {
      {"D_AA1", "D_AA1", {"Delta_A", "D_AA2"}},
      {"D_AA1", "D_AA2", {"D_AA1", "D_AA2"}},
      {"D_AA2", "D_AA1", {"D_AA1", "D_AA2"}},
      {"D_AA2", "D_AA2", {"Delta_A", "D_AA1", "D_AA2"}},
      {"D_AA1", "D_AB1", {"D_AB2"}},
      {"D_AA1", "D_AB2", {"D_AB1", "D_AB2"}},
      {"D_AA2", "D_AB1", {"D_AB1", "D_AB2"}},
      {"D_AA2", "D_AB2", {"D_AB1", "D_AB2"}},
      {"D_AA1", "D_AC1", {"D_AC2"}},
      {"D_AA1", "D_AC2", {"D_AC1", "D_AC2"}},
      {"D_AA2", "D_AC1", {"D_AC1", "D_AC2"}},
      {"D_AA2", "D_AC2", {"D_AC1", "D_AC2"}},
      {"D_BB1", "D_BB1", {"Delta_B", "D_BB1"}},
      {"D_BB1", "D_BA1", {"D_BA1", "D_BA2"}},
      {"D_BB1", "D_BA2", {"D_BA1", "D_BA2"}},
      {"D_BB1", "D_BC1", {"D_BC2"}},
      {"D_BB1", "D_BC2", {"D_BC1", "D_BC2"}},
      {"D_CC1", "D_CC1", {"Delta_C", "D_CC1"}},
      {"D_CC1", "D_CB1", {"D_CB2"}},
      {"D_CC1", "D_CB2", {"D_CB1", "D_CB2"}},
      {"D_CC1", "D_CA1", {"D_CA1", "D_CA2"}},
      {"D_CC1", "D_CA2", {"D_CA1", "D_CA2"}},
      {"D_AB1", "D_BB1", {"D_AB1", "D_AB2"}},
      {"D_AB2", "D_BB1", {"D_AB1", "D_AB2"}},
      {"D_AB1", "D_BA1", {"Delta_A", "D_AA2"}},
      {"D_AB1", "D_BA2", {"D_AA1", "D_AA2"}},
      {"D_AB2", "D_BA1", {"D_AA1", "D_AA2"}},
      {"D_AB2", "D_BA2", {"Delta_A", "D_AA1", "D_AA2"}},
      {"D_AB1", "D_BC1", {"D_AC1"}},
      {"D_AB1", "D_BC2", {"D_AC1", "D_AC2"}},
      {"D_AB2", "D_BC1", {"D_AC2"}},
      {"D_AB2", "D_BC2", {"D_AC1", "D_AC2"}},
      {"D_BA1", "D_AA1", {"D_BA2"}},
      {"D_BA1", "D_AA2", {"D_BA1", "D_BA2"}},
      {"D_BA2", "D_AA1", {"D_BA1", "D_BA2"}},
      {"D_BA2", "D_AA2", {"D_BA1", "D_BA2"}},
      {"D_BA1", "D_AB1", {"Delta_B", "D_BB1"}},
      {"D_BA1", "D_AB2", {"D_BB1"}},
      {"D_BA2", "D_AB1", {"D_BB1"}},
      {"D_BA2", "D_AB2", {"Delta_B", "D_BB1"}},
      {"D_BA1", "D_AC1", {"D_BC1", "D_BC2"}},
      {"D_BA1", "D_AC2", {"D_BC2"}},
      {"D_BA2", "D_AC1", {"D_BC2"}},
      {"D_BA2", "D_AC2", {"D_BC1", "D_BC2"}},
      {"D_BC1", "D_CC1", {"D_BC2"}},
      {"D_BC2", "D_CC1", {"D_BC1", "D_BC2"}},
      {"D_BC1", "D_CB1", {"Delta_B"}},
      {"D_BC1", "D_CB2", {"D_BB1"}},
      {"D_BC2", "D_CB1", {"D_BB1"}},
      {"D_BC2", "D_CB2", {"Delta_B", "D_BB1"}},
      {"D_BC1", "D_CA1", {"D_BA1"}},
      {"D_BC1", "D_CA2", {"D_BA2"}},
      {"D_BC2", "D_CA1", {"D_BA1", "D_BA2"}},
      {"D_BC2", "D_CA2", {"D_BA1", "D_BA2"}},
      {"D_CB1", "D_BB1", {"D_CB2"}},
      {"D_CB2", "D_BB1", {"D_CB1", "D_CB2"}},
      {"D_CB1", "D_BA1", {"D_CA1"}},
      {"D_CB1", "D_BA2", {"D_CA2"}},
      {"D_CB2", "D_BA1", {"D_CA1", "D_CA2"}},
      {"D_CB2", "D_BA2", {"D_CA1", "D_CA2"}},
      {"D_CB1", "D_BC1", {"Delta_C"}},
      {"D_CB1", "D_BC2", {"D_CC1"}},
      {"D_CB2", "D_BC1", {"D_CC1"}},
      {"D_CB2", "D_BC2", {"Delta_C", "D_CC1"}},
      {"D_CA1", "D_AA1", {"D_CA2"}},
      {"D_CA1", "D_AA2", {"D_CA1", "D_CA2"}},
      {"D_CA2", "D_AA1", {"D_CA1", "D_CA2"}},
      {"D_CA2", "D_AA2", {"D_CA1", "D_CA2"}},
      {"D_CA1", "D_AB1", {"D_CB1", "D_CB2"}},
      {"D_CA1", "D_AB2", {"D_CB2"}},
      {"D_CA2", "D_AB1", {"D_CB2"}},
      {"D_CA2", "D_AB2", {"D_CB1", "D_CB2"}},
      {"D_CA1", "D_AC1", {"Delta_C", "D_CC1"}},
      {"D_CA1", "D_AC2", {"D_CC1"}},
      {"D_CA2", "D_AC1", {"D_CC1"}},
      {"D_CA2", "D_AC2", {"Delta_C", "D_CC1"}},
      {"D_AC1", "D_CC1", {"D_AC1", "D_AC2"}},
      {"D_AC2", "D_CC1", {"D_AC1", "D_AC2"}},
      {"D_AC1", "D_CB1", {"D_AB1"}},
      {"D_AC1", "D_CB2", {"D_AB1", "D_AB2"}},
      {"D_AC2", "D_CB1", {"D_AB2"}},
      {"D_AC2", "D_CB2", {"D_AB1", "D_AB2"}},
      {"D_AC1", "D_CA1", {"Delta_A", "D_AA2"}},
      {"D_AC1", "D_CA2", {"D_AA1", "D_AA2"}},
      {"D_AC2", "D_CA1", {"D_AA1", "D_AA2"}},
      {"D_AC2", "D_CA2", {"Delta_A", "D_AA1", "D_AA2"}},
  };
  return table;
}

std::vector<RelationCheck> verify_relation_table(const Catalog& cat) {
  std::vector<RelationCheck> out;
  for (const auto& row : relation_table()) {
    RelationCheck rc;
    rc.left = row.left;
    rc.right = row.right;
    rc.expected = row.support;
    rc.derived = compose_support(cat.at(row.left), cat.at(row.right), cat);
    rc.ok = rc.derived == rc.expected;
    out.push_back(std::move(rc));
  }
  return out;
}

}  // namespace k3m
