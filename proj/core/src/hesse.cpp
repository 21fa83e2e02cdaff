// hesse.cpp — the affine-plane construction of the type-B code and the
// F4-line code with its even-intersection subcodes.

#include "k3moduli/hesse.hpp"

#include <algorithm>

#include "k3moduli/plane.hpp"

namespace k3m {

const std::array<std::array<int, 3>, 12>& AffineF3::lines() {
  // Classes: a constant; a' constant; a' - a constant; a' + a constant.
  static const std::array<std::array<int, 3>, 12> kLines = {{
      {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // a = 0, 1, 2
      {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // a' = 0, 1, 2
      {0, 4, 8}, {1, 5, 6}, {2, 3, 7},  // a' - a = 0, 1, 2
      {0, 5, 7}, {1, 3, 8}, {2, 4, 6},  // a' + a = 0, 1, 2
  }};
  return kLines;
}

bool AffineF3::on_line(int line, int p) {
  const auto& l = lines()[size_t(line)];
  return l[0] == p || l[1] == p || l[2] == p;
}

int AffineF3::line_through(int p, int q) {
  if (p == q) raise(ErrorCode::BAD_INPUT, "line through a repeated affine point");
  for (int l = 0; l < 12; ++l)
    if (on_line(l, p) && on_line(l, q)) return l;
  raise(ErrorCode::BAD_INPUT, "no affine line through the given points");
}

HesseLabels hesse_standard_labels() {
  HesseLabels lb;
  lb.c_point = {17, 13, 5, 10, 8, 6, 2, 3, 1};
  lb.t_point = {21, 12, 4, 20, 15, 7, 19, 14, 11, 18, 16, 9};
  return lb;
}

std::vector<Word> hesse_linear_words(const HesseLabels& lb) {
  std::vector<Word> out;
  for (int p = 0; p < 9; ++p) {
    std::vector<int> pts = {lb.c_point[size_t(p)]};
    for (int l = 0; l < 12; ++l)
      if (AffineF3::on_line(l, p)) pts.push_back(lb.t_point[size_t(l)]);
    out.push_back(word_from_indices(pts));
  }
  return out;
}

std::vector<Word> hesse_type1_words(const HesseLabels& lb) {
  std::vector<Word> out;
  for (int l = 0; l < 12; ++l) {
    std::vector<int> pts;
    for (int l2 = 3 * AffineF3::parallel_class(l); l2 < 3 * AffineF3::parallel_class(l) + 3; ++l2) {
      if (l2 == l) continue;
      for (int p : AffineF3::lines()[size_t(l2)]) pts.push_back(lb.c_point[size_t(p)]);
      pts.push_back(lb.t_point[size_t(l2)]);
    }
    out.push_back(word_from_indices(pts));
  }
  return out;
}

namespace {

// The type-II word for intersecting lines l1, l2 built from the auxiliary
// parallel pair {m, n} taken in class mn_class: m and n are the two lines of
// that class avoiding the intersection point, l' the line through it in the
// remaining class.  The word collects C of the four points where m and n meet
// l1 and l2, and T of the four cross connection lines.
Word type2_word(const HesseLabels& lb, int l1, int l2, int mn_class) {
  int p = -1;  // intersection of l1 and l2
  for (int q : AffineF3::lines()[size_t(l1)])
    if (AffineF3::on_line(l2, q)) p = q;
  // Classes are {0,1,2,3}; l' lives in the one not used by l1, l2 or {m,n}.
  int lp_class = 6 - AffineF3::parallel_class(l1) - AffineF3::parallel_class(l2) - mn_class;
  int m = -1, n = -1, lp = -1;
  for (int l = 3 * mn_class; l < 3 * mn_class + 3; ++l) {
    if (AffineF3::on_line(l, p)) continue;
    (m < 0 ? m : n) = l;
  }
  for (int l = 3 * lp_class; l < 3 * lp_class + 3; ++l)
    if (AffineF3::on_line(l, p)) lp = l;
  auto meet = [](int la, int lc) {
    for (int q : AffineF3::lines()[size_t(la)])
      if (AffineF3::on_line(lc, q)) return q;
    raise(ErrorCode::BAD_INPUT, "parallel lines do not meet");
  };
  int m1 = meet(m, l1), m2 = meet(m, l2), mp = meet(m, lp);
  int n1 = meet(n, l1), n2 = meet(n, l2), np = meet(n, lp);
  return word_from_indices({lb.c_point[size_t(m1)], lb.c_point[size_t(m2)],
                            lb.c_point[size_t(n1)], lb.c_point[size_t(n2)],
                            lb.t_point[size_t(AffineF3::line_through(m1, np))],
                            lb.t_point[size_t(AffineF3::line_through(m2, np))],
                            lb.t_point[size_t(AffineF3::line_through(n1, mp))],
                            lb.t_point[size_t(AffineF3::line_through(n2, mp))]});
}

}  // namespace

std::vector<HesseType2Word> hesse_type2_words(const HesseLabels& lb) {
  std::vector<HesseType2Word> out;
  for (int l1 = 0; l1 < 12; ++l1) {
    for (int l2 = l1 + 1; l2 < 12; ++l2) {
      int c1 = AffineF3::parallel_class(l1), c2 = AffineF3::parallel_class(l2);
      if (c1 == c2) continue;
      std::vector<int> other;
      for (int c = 0; c < 4; ++c)
        if (c != c1 && c != c2) other.push_back(c);
      Word w = type2_word(lb, l1, l2, other[0]);
      if (w != type2_word(lb, l1, l2, other[1]))
        raise(ErrorCode::BAD_INPUT, "type-II word depends on the auxiliary pair");
      int t1 = lb.t_point[size_t(l1)], t2 = lb.t_point[size_t(l2)];
      out.push_back({std::min(t1, t2), std::max(t1, t2), w});
    }
  }
  return out;
}

Code21 build_code_B_hesse() {
  HesseLabels lb = hesse_standard_labels();
  std::vector<Word> gens = {FULL_WORD};
  for (Word w : hesse_linear_words(lb)) gens.push_back(w);
  for (Word w : hesse_type1_words(lb)) gens.push_back(w);
  for (const auto& t : hesse_type2_words(lb)) gens.push_back(t.w);
  return Code21::span(gens);
}

std::vector<Word> f4_line_words() {
  auto pts = p2f4_points();
  std::vector<Word> out;
  for (const auto& l : p2f4_lines()) {
    Word w = 0;
    for (size_t i = 0; i < pts.size(); ++i)
      if (l.contains(pts[i])) w |= Word(1) << i;
    out.push_back(w);
  }
  return out;
}

Code21 build_code_DK() { return Code21::span(f4_line_words()); }

Code21 subcode_DK_F(const std::array<int, 4>& f_labels) {
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (f_labels[i] == f_labels[j])
        raise(ErrorCode::BAD_INPUT, "the four plane points must be distinct");
  Word f = word_from_indices({f_labels[0], f_labels[1], f_labels[2], f_labels[3]});
  std::vector<Word> even;
  for (Word w : build_code_DK().all_words())
    if (weight(w & f) % 2 == 0) even.push_back(w);
  return Code21::span(even);
}

}  // namespace k3m
