#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "codealg/error.hpp"

namespace codealg {

// A codeword of length n <= 64, coordinate i (0-based) stored in bit i.
using word = std::uint64_t;
using Perm = std::vector<int>;

inline int weight(word w) { return __builtin_popcountll(w); }
inline bool get_bit(word w, int i) { return (w >> i) & 1u; }
inline int dot2(word a, word b) { return __builtin_parityll(a & b); }

std::string word_str(word w, int n);
word word_from_str(const std::string& s);  // throws parse_error on bad chars

// lexicographic order of the bit strings (coordinate 0 most significant)
bool lex_less(word a, word b);

word apply_perm(word w, const Perm& p);  // image has bit p[i] = bit i of w
Perm inverse_perm(const Perm& p);
Perm compose_perm(const Perm& a, const Perm& b);  // apply a, then b

// A binary linear code: generators plus, for k <= 20, the enumerated word
// list in lexicographic order.
class LinearCode {
public:
  // Row span of the given bit strings.  Rejects length mismatches and
  // dependent rows with a diagnostic listing a dependency.
  static LinearCode from_generators(const std::vector<std::string>& rows);
  // Internal constructor from independent generator words (possibly none).
  static LinearCode from_basis(int n, std::vector<word> gens);
  static LinearCode zero_code(int n) { return from_basis(n, {}); }
  static LinearCode full_space(int n);

  int length() const { return n_; }
  int dim() const { return int(gens_.size()); }
  size_t size() const { return size_t(1) << gens_.size(); }
  const std::vector<word>& generators() const { return gens_; }

  bool enumerated() const { return !words_.empty(); }
  const std::vector<word>& words() const;  // throws too_large if k > 20
  std::vector<word> nonconstant_words() const;

  bool contains(word w) const;
  bool is_subcode_of(const LinearCode& C) const;
  word all_ones() const { return n_ == 64 ? ~word(0) : ((word(1) << n_) - 1); }
  bool has_all_ones() const { return contains(all_ones()); }
  word support() const;  // OR of all generators

  bool operator==(const LinearCode& o) const;

private:
  int n_ = 0;
  std::vector<word> gens_;     // reduced echelon basis
  std::vector<word> echelon_;  // same as gens_ (kept for clarity of use)
  std::vector<word> words_;    // sorted lexicographically when enumerated

  void enumerate();
  word reduce(word w) const;
};

// C_k = { alpha in C : (alpha, v) = k }
std::pair<std::vector<word>, std::vector<word>> split_by_dot(const LinearCode& C, word v);

LinearCode dual_code(const LinearCode& C);

struct ConstantWeight {
  bool constant;
  int weight;  // the common weight when constant
};
ConstantWeight is_constant_weight(const LinearCode& C);  // throws empty_cstar

bool is_projective(const LinearCode& C);

struct ConstWeightClass {
  enum Kind { SimplexJuxtaposition, ReedMullerJuxtaposition } kind;
  int m, r;
};
ConstWeightClass classify_constant_weight(const LinearCode& C);

// Builds the m-fold juxtaposition of a simplex code [2^r-1, r, 2^{r-1}] or a
// first order Reed-Muller code [2^r, r+1, 2^{r-1}] (for round-trip tests).
LinearCode juxtaposition_code(ConstWeightClass cls);

std::vector<int> weight_enumerator(const LinearCode& C);

// Full setwise stabiliser of C in S_n by backtracking with column-profile
// pruning; permutations returned in lexicographic order.
std::vector<Perm> automorphism_group(const LinearCode& C, int max_n = 12);

// One canonical representative per coset of D-perp in F_2^n; count = |D|.
std::vector<word> coset_reps(const LinearCode& D);

}  // namespace codealg
