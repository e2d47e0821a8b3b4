#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "codealg/spectral.hpp"

namespace codealg {

// Diagonal Gram data (t_i, t_i) = lambda_i, (e^a, e^a) = lambda_a, plus the
// exceptional off-diagonal (t_i, e^a) entries that only arise for
// C = {0, 1, a, a^c} with |a| = 1 and a_{i,a} = 1.
struct GramForm {
  Vec lambda_toral;
  std::map<word, Scalar> lambda_codeword;
  std::map<std::pair<int, word>, Scalar> exceptional;

  Mat gram(const CodeAlgebra& A) const;
  Scalar eval(const CodeAlgebra& A, const Element& x, const Element& y) const;
};

struct FrobeniusOutcome {
  enum class Status { Ok, ConditionOneFails, ConditionTwoFails } status;
  std::optional<GramForm> form;
  std::string witness;
  bool exceptional_case = false;
  bool ok() const { return status == Status::Ok; }
};

// Existence test and construction per the two parameter conditions; the
// toral weights default to all ones and exceptional entries to zero.
FrobeniusOutcome frobenius_form(
    const CodeAlgebra& A, std::optional<Vec> lambda_toral = std::nullopt,
    const std::map<std::pair<int, word>, Scalar>& exceptional_entries = {});

struct AssocReport {
  bool ok;
  std::array<int, 3> witness;  // basis triple when !ok
};
AssocReport verify_associative(const CodeAlgebra& A, const Mat& gram);

// (u, w) = 0 for eigenvectors of distinct eigenvalues
bool eigenspace_orthogonality(const CodeAlgebra& A, const GramForm& form,
                              const EigenDecomposition& dec);

struct InvarianceReport {
  bool ok;
  std::string witness;
};
InvarianceReport g_invariance(const CodeAlgebra& A, const GramForm& form,
                              const std::vector<SignedMap>& G);

// All diagonal entries positive under the real embedding; exceptional
// off-diagonal blocks via 2x2 minors.  Throws unordered_field when the
// session discriminant is negative.
bool positive_definite(const CodeAlgebra& A, const GramForm& form);

}  // namespace codealg
