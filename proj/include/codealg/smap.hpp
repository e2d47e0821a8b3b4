#pragma once

#include "codealg/spectral.hpp"

namespace codealg {

enum class Root { Plus, Minus };

// Data of one s-map idempotent s(D, v) = lambda t_D + mu sum (-1)^{(v,a)} e^a.
// lambda = (1 - b e mu) / (2 a d) and mu solves
// (b^2 e^2 + 4 a^2 c |D*| d^3 / m) mu^2 + 2 b e (a d - 1) mu + (1 - 2 a d) = 0
// with e = 2|D*| - |D|, d the common weight of D*, m = |supp(D)|.
struct SMapSpec {
  LinearCode D;
  word v = 0;
  long e = 0;
  int d = 0;
  int m = 0;
  size_t dstar = 0;
  Scalar lambda, mu;
  Root root = Root::Plus;
  long extension_disc = 1;  // discriminant adjoined when the session was plain Q
};

struct SMapResult {
  SMapSpec spec;
  Element idem;
};

SMapResult smap_idempotent(const CodeAlgebra& A, const LinearCode& D, word v, Root root);

// Distinct idempotents s(D, v) over coset representatives of D-perp, both
// roots, exact-equality deduplication.
std::vector<SMapResult> enumerate_smap(const CodeAlgebra& A, const LinearCode& D);

struct SmallIdempotents {
  Element plus, minus;  // lambda t_alpha +- mu e^alpha
  Scalar lambda, mu;
  long extension_disc = 1;
};
SmallIdempotents small_idempotents(const CodeAlgebra& A, word alpha);

// Closed-form eigenbasis of a small idempotent on a constant-weight code,
// cross-validated against eigen_decompose.
EigenDecomposition small_idempotent_spectrum(const CodeAlgebra& A, word alpha,
                                             const Element& e);

struct GenerationReport {
  int span_dim = 0;     // linear span of the generators
  int closure_dim = 0;  // span closed under multiplication
  bool generates = false;
  bool one_closed = false;  // the generators already span the algebra
};
GenerationReport axial_generation_check(const CodeAlgebra& A,
                                        const std::vector<Element>& generators);

}  // namespace codealg
