#pragma once

#include "codealg/spectral.hpp"

namespace codealg {

// Sign maps tau_v : e^alpha -> (-1)^{(v,alpha)} e^alpha are parametrised by
// v modulo the kernel {v : (v, alpha) = 0 for all alpha in C*}.
struct MiyamotoGroup {
  LinearCode kernel;
  unsigned long long order = 0;  // 2^(n - dim kernel)
  std::vector<SignedMap> generators;  // tau_1 .. tau_n, sign vectors reduced
};

MiyamotoGroup miyamoto_group(const CodeAlgebra& A);

// tau_v with the sign vector reduced to the canonical kernel-coset
// representative; every returned map is a verified algebra automorphism.
SignedMap miyamoto_sign_map(const CodeAlgebra& A, word v);

word reduce_mod_kernel(const LinearCode& kernel, word v);

struct FullGroup {
  unsigned long long order = 0;  // |M| * |Aut(C)|
  MiyamotoGroup m;
  std::vector<Perm> code_autos;       // all of Aut(C)
  std::vector<SignedMap> generators;  // tau_i's followed by the induced maps
};

// G = M : Aut(C); requires regular parameters and a_{i,alpha} != 1.  The
// conjugation relation tau_i g = g tau_{ig} is verified on all generators.
FullGroup full_group(const CodeAlgebra& A, int aut_max_n = 12);

// All |M| * |Aut(C)| elements as SignedMaps (sign coset reps x code autos).
std::vector<SignedMap> enumerate_group(const CodeAlgebra& A, const FullGroup& G);

bool signed_map_equal(const LinearCode& kernel, const SignedMap& x, const SignedMap& y);

struct OrbitResult {
  bool closed = false;
  size_t count = 0;                // distinct axes found (final when closed)
  std::vector<Element> axes;       // in discovery order
};

// Repeatedly applies each axis's Miyamoto involution to the current axis
// set; stops when stable or when more than `bound` distinct axes appear.
// Involutions already known for the initial axes may be passed in
// (index-aligned) to avoid recomputation.
OrbitResult axis_orbit(const CodeAlgebra& A, const std::vector<Element>& axes,
                       size_t bound = 512,
                       const std::vector<Mat>* initial_involutions = nullptr);

}  // namespace codealg
