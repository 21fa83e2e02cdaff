// code21.hpp — binary linear codes on a fixed 21-point ground set.
//
// A word is a 21-bit mask: bit i (0-based) marks point P_(i+1).  A code is
// stored by its reduced-row-echelon basis, so equal codes compare equal.
// Weight-5 words are called linear, weight-8 words that are not sums of two
// linear words quadratic, and weight-9 words that are neither sums of three
// linear words nor of a linear and a quadratic word cubic — matching the
// plane curves that cut them out on the 21-point configurations.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace k3m {

using Word = uint32_t;
constexpr unsigned NPOINTS = 21;
constexpr Word FULL_WORD = (Word(1) << NPOINTS) - 1;

inline int weight(Word w) { return __builtin_popcount(w); }

// 1-based point indices <-> masks.
Word word_from_indices(const std::vector<int>& pts);
std::vector<int> indices_of(Word w);

// 21-character 0/1 row, leftmost character = P_1.
Word parse_word_row(const std::string& row);
std::string word_row(Word w);
std::string word_str(Word w);  // "{1,2,8,...}"

class Code21 {
 public:
  Code21() = default;
  static Code21 span(const std::vector<Word>& generators);

  size_t dim() const { return basis_.size(); }
  const std::vector<Word>& basis() const { return basis_; }
  bool contains(Word w) const;
  bool operator==(const Code21& o) const { return basis_ == o.basis_; }
  bool operator!=(const Code21& o) const { return !(*this == o); }

  // All 2^dim codewords; TOO_LARGE when dim > 12.
  std::vector<Word> all_words() const;

 private:
  std::vector<Word> basis_;  // RREF, sorted by pivot position (descending bit)
};

struct WordClasses {
  std::vector<Word> linear;     // weight 5
  std::vector<Word> quadratic;  // weight 8, not a sum of two linear words
  std::vector<Word> cubic;      // weight 9, not 3 linear and not linear+quadratic
};

WordClasses classify_words(const Code21& c);

// weight -> number of codewords of that weight.
std::map<int, uint64_t> weight_enumerator(const Code21& c);

// The admissibility conditions for the code of a polarized supersingular
// surface of the kind studied here: dimension at most 10, the all-ones word
// present, and all weights in {0,5,8,9,12,13,16,21}.
bool check_k3_code_conditions(const Code21& c);

// 11 - dim for an admissible code; NOT_ADMISSIBLE otherwise.
int artin_invariant(const Code21& c);

}  // namespace k3m
