// hesse.hpp — combinatorial constructions of the 21-point codes from finite
// plane geometry:
//
//  * the nine-point affine plane of order 3 (Hesse configuration) whose
//    C/T-labelled line structure generates the dimension-9 code of type B;
//  * the code generated by the 21 line words of the projective plane over F4
//    (dimension 10), and its even-intersection subcodes C_F for four-point
//    sets F, which realize the three dimension-9 classes according to how
//    collinear F is.
#pragma once

#include <array>

#include "code21.hpp"

namespace k3m {

// The affine plane over F3.  Points 0..8 encode (a,a') as 3a+a'; the twelve
// lines come in four parallel classes of three (class = index / 3).
struct AffineF3 {
  static const std::array<std::array<int, 3>, 12>& lines();
  static int parallel_class(int line) { return line / 3; }
  static bool on_line(int line, int p);
  static int line_through(int p, int q);  // p != q
};

// Fixed labelling of the 21 points: c_point[3a+a'] is the label (1..21) of
// the C-point at (a,a'), t_point[line] the label of the T-point of a line.
struct HesseLabels {
  std::array<int, 9> c_point;
  std::array<int, 12> t_point;
};
HesseLabels hesse_standard_labels();

// The nine linear words: C(aa') together with the T-points of the four lines
// through (a,a').
std::vector<Word> hesse_linear_words(const HesseLabels& lb);

// Type-I quadratic words, one per line l: the C-points of the two lines
// parallel to l plus their two T-points.
std::vector<Word> hesse_type1_words(const HesseLabels& lb);

// Type-II quadratic words, one per unordered pair of intersecting lines
// (54).  Each entry records the T-labels of the two lines for table lookups.
struct HesseType2Word {
  int t1, t2;  // T-labels of the intersecting lines, t1 < t2
  Word w;
};
std::vector<HesseType2Word> hesse_type2_words(const HesseLabels& lb);

// Span of the all-ones word, the 9 linear and the 12 + 54 quadratic words.
Code21 build_code_B_hesse();

// Word of each F4-rational line (5 points) under the fixed plane enumeration,
// and the dimension-10 code they generate.
std::vector<Word> f4_line_words();
Code21 build_code_DK();

// The subcode {w : |w intersect F| even} for four distinct points of the
// plane over F4, given by labels 1..21 into the fixed enumeration.
Code21 subcode_DK_F(const std::array<int, 4>& f_labels);

}  // namespace k3m
