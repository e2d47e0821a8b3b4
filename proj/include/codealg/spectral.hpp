#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "codealg/algebra.hpp"

namespace codealg {

struct EigenPair {
  Scalar value;
  Mat basis;  // columns are eigenvectors in algebra coordinates
  int dim() const { return basis.cols(); }
};

struct EigenDecomposition {
  std::vector<EigenPair> pairs;  // eigenvalue order: 1 first, 0 second, rest ascending
  bool semisimple = false;
  int residual_dim = 0;  // dim A - sum of eigenspace dims

  std::vector<Scalar> spectrum() const;
  int total_dim() const;
  const EigenPair* find(const Scalar& v) const;
};

// Peirce decomposition of ad_{t_i}, assembled from the diagonal structure.
EigenDecomposition toral_peirce(const CodeAlgebra& A, int i);

// Exact eigen decomposition by candidate testing: {1, 0}, parameter values,
// hints (plus surd conjugates), and rational roots of the characteristic
// polynomial when the candidates fall short.  Non-semisimplicity over the
// session field is a reported state, not an error.
EigenDecomposition eigen_decompose(const CodeAlgebra& A, const Element& x,
                                   const std::vector<Scalar>& hints = {});

struct FusionLaw {
  std::vector<Scalar> labels;
  std::vector<std::vector<std::set<int>>> table;  // table[i][j] = set of label indices

  int label_index(const Scalar& v) const;  // -1 when absent
  bool entry_contains(int i, int j, int k) const { return table[i][j].count(k) > 0; }
};

// Computed fusion law of a semisimple element: products of eigenspace basis
// pairs expanded exactly in the eigenbasis.
FusionLaw fusion_law(const CodeAlgebra& A, const Element& x, const EigenDecomposition& dec);

// A_0 A_lambda <= A_lambda for every eigenvalue lambda != 1.
bool seress_check(const FusionLaw& law);

struct AxisVerdict {
  enum Kind { NotAxis, Axis, PrimitiveAxis } kind;
  std::string witness;  // set when kind == NotAxis
  EigenDecomposition dec;
};
AxisVerdict is_axis(const CodeAlgebra& A, const Element& x, const FusionLaw& law);
// same check over an already computed decomposition and fusion law
AxisVerdict is_axis_precomputed(const CodeAlgebra& A, const Element& x, const FusionLaw& law,
                                const EigenDecomposition& dec, const FusionLaw& actual);

struct Z2Grading {
  std::set<int> plus, minus;  // label indices; {1, 0} always graded even
};

// Exhaustive search over label bipartitions; prefers maximal odd part.  The
// degenerate grading (empty odd part) always exists and is returned last of
// all choices.
std::optional<Z2Grading> z2_grading(const FusionLaw& law);

// tau = identity on the even eigenspaces, negation on the odd ones; verified
// to be an algebra automorphism with square the identity.
Mat miyamoto_involution(const CodeAlgebra& A, const EigenDecomposition& dec,
                        const FusionLaw& law, const Z2Grading& grading);

// Reference patterns.  Labels may coincide numerically; containment checks
// merge entries of equal labels.
FusionLaw toral_law_pattern(const std::vector<Scalar>& nontrivial);
FusionLaw small_idempotent_law_pattern(const Scalar& lambda, const Scalar& mu, const Scalar& b);
bool law_contained_in(const FusionLaw& law, const FusionLaw& pattern);

}  // namespace codealg
