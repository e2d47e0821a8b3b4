#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "codealg/form.hpp"
#include "codealg/group.hpp"
#include "test_util.hpp"

using namespace codealg;

namespace {

CodeAlgebra even3(const Scalar& a, const Scalar& b, const Scalar& c) {
  return build_constant_algebra(LinearCode::from_generators({"011", "101"}), a, b, c);
}

CodeAlgebra even3() { return even3(Scalar(frac(1, 2)), Scalar(frac(1, 2)), Scalar(1)); }

}  // namespace

TEST_CASE("frobenius_form on the worked examples") {
  CodeAlgebra E = even3();
  auto out = frobenius_form(E);
  REQUIRE(out.ok());
  // diag(1, 1, 1, 2, 2, 2): lambda_alpha = c/a = 2
  for (int i = 0; i < 3; ++i) CHECK(out.form->lambda_toral[i] == Scalar(1));
  for (word alpha : E.cstar()) CHECK(out.form->lambda_codeword.at(alpha) == Scalar(2));
  CHECK(verify_associative(E, out.form->gram(E)).ok);
  CHECK(positive_definite(E, *out.form));

  CodeAlgebra H = build_constant_algebra(
      LinearCode::from_generators({"11111111", "00001111", "00110011", "01010101"}),
      Scalar(frac(1, 4)), Scalar(frac(1, 2)), Scalar(1));
  auto oh = frobenius_form(H);
  REQUIRE(oh.ok());
  for (word alpha : H.cstar()) CHECK(oh.form->lambda_codeword.at(alpha) == Scalar(4));
  CHECK(verify_associative(H, oh.form->gram(H)).ok);
}

TEST_CASE("condition failures carry witnesses") {
  // break condition 1 with a c-override
  LinearCode C = LinearCode::from_generators({"011", "101"});
  StructureParams P = StructureParams::constants(C, Scalar(frac(1, 2)), Scalar(frac(1, 2)),
                                                 Scalar(1));
  P.set_c(1, word_from_str("011"), Scalar(3));
  auto out = frobenius_form(build_algebra(C, P));
  CHECK(out.status == FrobeniusOutcome::Status::ConditionOneFails);
  CHECK(!out.witness.empty());

  // break condition 2 with a b-override
  StructureParams Q = StructureParams::constants(C, Scalar(frac(1, 2)), Scalar(frac(1, 2)),
                                                 Scalar(1));
  Q.set_b(word_from_str("011"), word_from_str("101"), Scalar(5));
  auto out2 = frobenius_form(build_algebra(C, Q));
  CHECK(out2.status == FrobeniusOutcome::Status::ConditionTwoFails);
  CHECK(!out2.witness.empty());

  CHECK_THROWS_AS(frobenius_form(even3(), Vec(3, Scalar(0))), Error);
}

TEST_CASE("verify_associative witnesses") {
  CodeAlgebra E = even3();
  // the identity Gram matrix is not associative: (e^a e^a, t_i) mismatches
  auto rep = verify_associative(E, Mat::identity(6));
  CHECK(!rep.ok);
  CHECK(rep.witness[0] >= 0);
  // the zero form is associative (and rejected as a Frobenius form elsewhere)
  CHECK(verify_associative(E, Mat(6, 6)).ok);
}

TEST_CASE("eigenspace orthogonality and a perturbed form") {
  CodeAlgebra E = even3();
  auto out = frobenius_form(E);
  auto dec = toral_peirce(E, 0);
  CHECK(eigenspace_orthogonality(E, *out.form, dec));
  GramForm bad = *out.form;
  bad.exceptional[{0, word_from_str("011")}] = Scalar(1);  // cross term
  CHECK(!eigenspace_orthogonality(E, bad, dec));
}

TEST_CASE("G-invariance") {
  CodeAlgebra E = even3();
  auto out = frobenius_form(E);
  auto G = full_group(E);
  CHECK(g_invariance(E, *out.form, G.generators).ok);

  // {0, 1, 1100, 0011}: the two support blocks decouple condition 1, so
  // distinct block weights give a valid form that the block swap moves
  CodeAlgebra B = build_constant_algebra(LinearCode::from_generators({"1100", "0011"}),
                                         Scalar(frac(1, 2)), Scalar(1), Scalar(1));
  Vec lam{Scalar(1), Scalar(1), Scalar(2), Scalar(2)};
  auto out2 = frobenius_form(B, lam);
  REQUIRE(out2.ok());
  auto GB = full_group(B);
  CHECK(!g_invariance(B, *out2.form, GB.generators).ok);
  // but the Miyamoto part alone always preserves the diagonal form
  CHECK(g_invariance(B, *out2.form, miyamoto_group(B).generators).ok);
  // equal weights restore invariance
  CHECK(g_invariance(B, *frobenius_form(B).form, GB.generators).ok);
}

TEST_CASE("positive definiteness") {
  CHECK(positive_definite(even3(), *frobenius_form(even3()).form));
  // opposite signs of a and c give a negative codeword diagonal
  CodeAlgebra M = even3(Scalar(frac(1, 2)), Scalar(frac(1, 2)), Scalar(-1));
  auto om = frobenius_form(M);
  REQUIRE(om.ok());
  CHECK(!positive_definite(M, *om.form));
  // zero diagonal entry
  auto oz = frobenius_form(even3());
  GramForm z = *oz.form;
  z.lambda_toral[0] = Scalar(0);
  CHECK(!positive_definite(even3(), z));
  // unordered field: negative discriminant weight
  GramForm u = *oz.form;
  u.lambda_toral[0] = Scalar(1, 1, -2);
  CHECK_THROWS_AS(positive_definite(even3(), u), Error);
}

TEST_CASE("exceptional F2^2 case with a = 1") {
  CodeAlgebra F = build_constant_algebra(LinearCode::from_generators({"10", "01"}),
                                         Scalar(1), Scalar(1), Scalar(1));
  auto out = frobenius_form(F);
  REQUIRE(out.ok());
  CHECK(out.exceptional_case);
  CHECK(out.form->exceptional.size() == 2);  // both weight-1 words qualify
  // free off-diagonal entries stay associative
  std::map<std::pair<int, word>, Scalar> exc{
      {{0, word_from_str("10")}, Scalar(frac(2, 3))},
      {{1, word_from_str("01")}, Scalar(frac(-1, 5))}};
  auto out2 = frobenius_form(F, std::nullopt, exc);
  REQUIRE(out2.ok());
  CHECK(verify_associative(F, out2.form->gram(F)).ok);
  // G-invariance under the coordinate swap needs equal exceptional entries
  auto swaps = induced_automorphism(F, Perm{1, 0});
  CHECK(!g_invariance(F, *out2.form, {swaps}).ok);
  std::map<std::pair<int, word>, Scalar> exc_eq{
      {{0, word_from_str("10")}, Scalar(frac(2, 3))},
      {{1, word_from_str("01")}, Scalar(frac(2, 3))}};
  auto out3 = frobenius_form(F, std::nullopt, exc_eq);
  CHECK(g_invariance(F, *out3.form, {swaps}).ok);
}

TEST_CASE("brute-force oracle agrees on small algebras") {
  std::mt19937_64 rng(71);
  std::vector<CodeAlgebra> corpus;
  corpus.push_back(even3());
  corpus.push_back(even3(testutil::rand_rational(rng), testutil::rand_rational(rng),
                         testutil::rand_rational(rng)));
  corpus.push_back(build_constant_algebra(LinearCode::from_generators({"10", "01"}),
                                          Scalar(1), Scalar(1), Scalar(1)));
  corpus.push_back(build_constant_algebra(LinearCode::from_generators({"10", "01"}),
                                          Scalar(-1), Scalar(1), Scalar(-1)));
  // a condition-2 violation: solution space must collapse accordingly
  {
    LinearCode C = LinearCode::from_generators({"011", "101"});
    StructureParams P = StructureParams::constants(C, Scalar(frac(1, 2)),
                                                   Scalar(frac(1, 2)), Scalar(1));
    P.set_b(word_from_str("011"), word_from_str("101"), Scalar(5));
    corpus.push_back(build_algebra(C, P));
  }
  for (const auto& A : corpus) {
    Mat oracle = testutil::associative_form_space(A);
    Mat family = testutil::theorem_form_family(A);
    CHECK(subspace_equal(oracle, family));
  }
}
