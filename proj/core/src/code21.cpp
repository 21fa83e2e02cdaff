// code21.cpp — span, weight enumeration and word classification.

#include "k3moduli/code21.hpp"

#include <algorithm>
#include <unordered_set>

namespace k3m {

Word word_from_indices(const std::vector<int>& pts) {
  Word w = 0;
  for (int p : pts) {
    if (p < 1 || p > int(NPOINTS))
      raise(ErrorCode::BAD_INPUT, "point index out of range: " + std::to_string(p));
    w |= Word(1) << (p - 1);
  }
  return w;
}

std::vector<int> indices_of(Word w) {
  std::vector<int> r;
  for (unsigned i = 0; i < NPOINTS; ++i)
    if (w >> i & 1) r.push_back(int(i + 1));
  return r;
}

Word parse_word_row(const std::string& row) {
  if (row.size() != NPOINTS)
    raise(ErrorCode::BAD_INPUT, "word row must have 21 characters: '" + row + "'");
  Word w = 0;
  for (unsigned i = 0; i < NPOINTS; ++i) {
    if (row[i] == '1') w |= Word(1) << i;
    else if (row[i] != '0')
      raise(ErrorCode::BAD_INPUT, "word row must be 0/1: '" + row + "'");
  }
  return w;
}

std::string word_row(Word w) {
  std::string s(NPOINTS, '0');
  for (unsigned i = 0; i < NPOINTS; ++i)
    if (w >> i & 1) s[i] = '1';
  return s;
}

std::string word_str(Word w) {
  std::string s = "{";
  bool first = true;
  for (int p : indices_of(w)) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

Code21 Code21::span(const std::vector<Word>& generators) {
  // Gaussian elimination over F2, pivot on the highest set bit.
  std::vector<Word> basis;
  for (Word g : generators) {
    Word w = g & FULL_WORD;
    for (Word b : basis) {
      Word pivot = Word(1) << (31 - __builtin_clz(b));
      if (w & pivot) w ^= b;
    }
    if (w) basis.push_back(w);
  }
  // Back-substitute to reduced echelon form and sort by pivot.
  for (size_t i = 0; i < basis.size(); ++i) {
    Word pivot = Word(1) << (31 - __builtin_clz(basis[i]));
    for (size_t j = 0; j < basis.size(); ++j)
      if (j != i && (basis[j] & pivot)) basis[j] ^= basis[i];
  }
  std::sort(basis.begin(), basis.end(), std::greater<Word>());
  Code21 c;
  c.basis_ = std::move(basis);
  return c;
}

bool Code21::contains(Word w) const {
  w &= FULL_WORD;
  for (Word b : basis_) {
    Word pivot = Word(1) << (31 - __builtin_clz(b));
    if (w & pivot) w ^= b;
  }
  return w == 0;
}

std::vector<Word> Code21::all_words() const {
  if (dim() > 12)
    raise(ErrorCode::TOO_LARGE, "refusing to enumerate a code of dimension " +
                                    std::to_string(dim()));
  std::vector<Word> words(size_t(1) << dim(), 0);
  for (size_t i = 1; i < words.size(); ++i) {
    // Gray-code walk: flip one basis vector per step.
    size_t bit = __builtin_ctzll(i);
    words[i] = words[i - 1] ^ basis_[bit];
  }
  return words;
}

WordClasses classify_words(const Code21& c) {
  if (!check_k3_code_conditions(c))
    raise(ErrorCode::NOT_ADMISSIBLE, "word classification needs an admissible code");
  WordClasses wc;
  std::vector<Word> w8, w9;
  for (Word w : c.all_words()) {
    switch (weight(w)) {
      case 5: wc.linear.push_back(w); break;
      case 8: w8.push_back(w); break;
      case 9: w9.push_back(w); break;
      default: break;
    }
  }
  std::unordered_set<Word> two_linear;  // sums of two distinct linear words
  for (size_t i = 0; i < wc.linear.size(); ++i)
    for (size_t j = i + 1; j < wc.linear.size(); ++j)
      two_linear.insert(wc.linear[i] ^ wc.linear[j]);
  for (Word w : w8)
    if (!two_linear.count(w)) wc.quadratic.push_back(w);
  std::unordered_set<Word> reducible9;  // linear+quadratic or three linear
  for (Word l : wc.linear) {
    for (Word q : wc.quadratic) reducible9.insert(l ^ q);
    for (Word s : two_linear) reducible9.insert(l ^ s);  // includes l in s's pair: weight off, harmless
  }
  for (Word w : w9)
    if (!reducible9.count(w)) wc.cubic.push_back(w);
  std::sort(wc.linear.begin(), wc.linear.end());
  std::sort(wc.quadratic.begin(), wc.quadratic.end());
  std::sort(wc.cubic.begin(), wc.cubic.end());
  return wc;
}

std::map<int, uint64_t> weight_enumerator(const Code21& c) {
  std::map<int, uint64_t> e;
  for (Word w : c.all_words()) ++e[weight(w)];
  return e;
}

bool check_k3_code_conditions(const Code21& c) {
  if (c.dim() > 10) return false;  // also keeps all_words() below feasible
  if (!c.contains(FULL_WORD)) return false;
  static const std::unordered_set<int> allowed = {0, 5, 8, 9, 12, 13, 16, 21};
  for (Word w : c.all_words())
    if (!allowed.count(weight(w))) return false;
  return true;
}

int artin_invariant(const Code21& c) {
  if (!check_k3_code_conditions(c))
    raise(ErrorCode::NOT_ADMISSIBLE, "artin invariant of a non-admissible code");
  return 11 - int(c.dim());
}

}  // namespace k3m
