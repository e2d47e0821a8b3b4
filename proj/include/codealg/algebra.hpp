#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "codealg/codes.hpp"
#include "codealg/linalg.hpp"

namespace codealg {

using Element = Vec;

// The structure parameters a_{i,alpha}, b_{alpha,beta}, c_{i,alpha}.  Keys
// outside the domain are rejected; b is stored on unordered pairs.
class StructureParams {
public:
  using AKey = std::pair<int, word>;    // i in supp(alpha)
  using BKey = std::pair<word, word>;   // normalized: first < second numerically

  static StructureParams constants(const LinearCode& C, const Scalar& a, const Scalar& b,
                                   const Scalar& c);
  // Code VOA preset (a, b, c) = (1/4, lambda, 4*lambda^2).
  static StructureParams voa(const LinearCode& C, const Scalar& lambda);

  const Scalar& a(int i, word alpha) const;
  const Scalar& b(word alpha, word beta) const;
  const Scalar& c(int i, word alpha) const;

  void set_a(int i, word alpha, const Scalar& v);
  void set_b(word alpha, word beta, const Scalar& v);
  void set_c(int i, word alpha, const Scalar& v);

  const std::map<AKey, Scalar>& a_map() const { return a_; }
  const std::map<BKey, Scalar>& b_map() const { return b_; }
  const std::map<AKey, Scalar>& c_map() const { return c_; }

  static BKey bkey(word alpha, word beta) {
    return alpha < beta ? BKey{alpha, beta} : BKey{beta, alpha};
  }

private:
  std::map<AKey, Scalar> a_, c_;
  std::map<BKey, Scalar> b_;
};

struct BuildOptions {
  int max_dim = 200;
};

// The code algebra A_C(Lambda) on basis {t_1..t_n} u {e^alpha : alpha in C*},
// toral slots first, codeword slots in lexicographic order.  The basis
// multiplication table is precomputed at build time.
class CodeAlgebra {
public:
  using SparseVec = std::vector<std::pair<int, Scalar>>;

  const LinearCode& code() const { return code_; }
  const StructureParams& params() const { return params_; }
  int n() const { return code_.length(); }
  int dim() const { return dim_; }
  const std::vector<word>& cstar() const { return cstar_; }
  int codeword_index(word alpha) const;  // basis index of e^alpha
  word codeword_at(int idx) const { return cstar_[idx - n()]; }
  bool is_toral_index(int idx) const { return idx < n(); }
  std::string basis_name(int idx) const;

  // session field discriminant: 1 when all parameters are rational
  long session_disc() const { return disc_; }

  const SparseVec& basis_product(int i, int j) const;
  Element multiply(const Element& x, const Element& y) const;
  Mat adjoint(const Element& x) const;

  Element zero() const { return Element(dim_); }
  Element basis_element(int idx) const;
  Element toral_sum(word support) const;  // t_alpha = sum of t_i over supp

  friend CodeAlgebra build_algebra(const LinearCode& C, StructureParams params,
                                   const BuildOptions& opts);

private:
  LinearCode code_;
  StructureParams params_;
  std::vector<word> cstar_;
  std::map<word, int> cstar_idx_;
  int dim_ = 0;
  long disc_ = 1;
  std::vector<SparseVec> table_;  // upper triangular, (i,j) with i <= j

  size_t tri_index(int i, int j) const {
    return size_t(i) * dim_ - size_t(i) * (i - 1) / 2 + (j - i);
  }
};

CodeAlgebra build_algebra(const LinearCode& C, StructureParams params,
                          const BuildOptions& opts = {});

CodeAlgebra build_constant_algebra(const LinearCode& C, const Scalar& a, const Scalar& b,
                                   const Scalar& c, const BuildOptions& opts = {});

struct NondegeneracyReport {
  bool ok;
  bool support_full;
  bool cstar_nonempty;
  bool params_nonzero;
  std::vector<std::string> reasons;
};
NondegeneracyReport is_nondegenerate(const CodeAlgebra& A);

struct RegularityReport {
  bool regular;
  std::string witness;
};
RegularityReport is_regular(const CodeAlgebra& A, const std::vector<Perm>& G);

// A monomial linear map t_i -> t_{perm[i]}, e^alpha -> sign(alpha) e^{perm(alpha)}
// with sign(alpha) = (-1)^{(sign_vec, alpha)}.
struct SignedMap {
  Perm perm;
  word sign_vec = 0;

  int sign_of(word alpha) const { return dot2(sign_vec, alpha) ? -1 : 1; }
};

SignedMap signed_identity(int n);
// apply a, then b
SignedMap compose(const SignedMap& a, const SignedMap& b);
SignedMap signed_inverse(const SignedMap& m);
Element apply(const CodeAlgebra& A, const SignedMap& m, const Element& x);
Mat signed_map_matrix(const CodeAlgebra& A, const SignedMap& m);

// nullopt when m preserves every basis product; otherwise a witness pair
std::optional<std::pair<int, int>> automorphism_witness(const CodeAlgebra& A,
                                                        const SignedMap& m);
std::optional<std::pair<int, int>> automorphism_witness(const CodeAlgebra& A, const Mat& g);

// The induced action of g in Aut(C): t_i -> t_{i g^-1}, e^a -> e^{a g^-1};
// throws not_regular (with a witness pair) when the map fails to be
// multiplicative.
SignedMap induced_automorphism(const CodeAlgebra& A, const Perm& g);

struct Subalgebra {
  std::vector<int> basis_indices;
};
Subalgebra subalgebra_from_subcode(const CodeAlgebra& A, const LinearCode& D);

struct IdentityResult {
  Element toral_unit;               // t = sum t_i, with t*t_i = t_i always
  std::optional<Element> identity;  // present iff t e^alpha = e^alpha for all alpha
};
IdentityResult identity_element(const CodeAlgebra& A);

struct PowerAssocReport {
  Element square_of_square;   // (x^2)^2 for x = e^alpha
  Element nested;             // x*(x*x^2)
  bool equal;
};
PowerAssocReport power_associativity_witness(const CodeAlgebra& A, word alpha);

}  // namespace codealg
