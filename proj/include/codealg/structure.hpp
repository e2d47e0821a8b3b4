#pragma once

#include "codealg/algebra.hpp"

namespace codealg {

struct Ideal {
  Mat basis;  // row-reduced
  int dim = 0;
};

// Smallest multiplication-closed subspace containing x.
Ideal ideal_generated(const CodeAlgebra& A, const Element& x);

struct SimplicityResult {
  bool simple = false;
  std::vector<Ideal> ideals;  // the nontrivial proper ideals in the exceptional case
};

// Decision by ideal closure from every basis element plus a fixed random
// sample, cross-checked against the structural criterion: a non-degenerate
// code algebra is simple unless C = {0, 1, alpha, alpha^c}.
SimplicityResult is_simple(const CodeAlgebra& A);

}  // namespace codealg
