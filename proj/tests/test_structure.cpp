#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "codealg/form.hpp"
#include "codealg/structure.hpp"
#include "test_util.hpp"

using namespace codealg;

namespace {

CodeAlgebra even3() {
  return build_constant_algebra(LinearCode::from_generators({"011", "101"}),
                                Scalar(frac(1, 2)), Scalar(frac(1, 2)), Scalar(1));
}

CodeAlgebra f2sq() {
  return build_constant_algebra(LinearCode::from_generators({"10", "01"}), Scalar(-1),
                                Scalar(1), Scalar(-1));
}

}  // namespace

TEST_CASE("ideal_generated") {
  CodeAlgebra E = even3();
  // a codeword element generates everything when |C| > 4 or C != {0,1,a,a^c}
  Ideal I = ideal_generated(E, E.basis_element(3));
  CHECK(I.dim == 6);
  CHECK(ideal_generated(E, E.zero()).dim == 0);

  // F2^2: t_1 + e^{10} generates the 2-dimensional ideal
  CodeAlgebra F = f2sq();
  Element x = vec_add(F.basis_element(0),
                      F.basis_element(F.codeword_index(word_from_str("10"))));
  Ideal J = ideal_generated(F, x);
  CHECK(J.dim == 2);
  // closed under multiplication by everything
  for (int r = 0; r < J.basis.rows(); ++r)
    for (int j = 0; j < F.dim(); ++j) {
      Vec prod = F.multiply(J.basis.row(r), F.basis_element(j));
      CHECK(subspace_contained(Mat::from_columns({prod}), J.basis.transposed()));
    }
}

TEST_CASE("is_simple") {
  CHECK(is_simple(even3()).simple);  // |C| = 4 but 1 is not in C

  CodeAlgebra H = build_constant_algebra(
      LinearCode::from_generators({"11111111", "00001111", "00110011", "01010101"}),
      Scalar(frac(1, 4)), Scalar(frac(1, 2)), Scalar(1));
  CHECK(is_simple(H).simple);

  auto res = is_simple(f2sq());
  CHECK(!res.simple);
  REQUIRE(res.ideals.size() == 2);
  CHECK(res.ideals[0].dim == 2);
  CHECK(res.ideals[1].dim == 2);
  // the two ideals annihilate each other and are orthogonal for the form
  CodeAlgebra F = f2sq();
  auto frob = frobenius_form(F);
  RowSpan direct_sum(4);
  for (const auto& I : res.ideals)
    for (int r = 0; r < I.basis.rows(); ++r) {
      direct_sum.add(I.basis.row(r));
      for (int r2 = 0; r2 < res.ideals[0].basis.rows(); ++r2) {
        if (&I == &res.ideals[0]) continue;
        CHECK(vec_is_zero(F.multiply(I.basis.row(r), res.ideals[0].basis.row(r2))));
        CHECK(frob.form->eval(F, I.basis.row(r), res.ideals[0].basis.row(r2)).is_zero());
      }
    }
  CHECK(direct_sum.dim() == 4);  // A decomposes as the direct sum

  // degenerate algebras are refused
  CodeAlgebra Z = build_constant_algebra(LinearCode::from_generators({"10", "01"}),
                                         Scalar(1), Scalar(1), Scalar(0));
  CHECK_THROWS_AS(is_simple(Z), Error);
}

TEST_CASE("decision matches the structural criterion on random algebras") {
  std::mt19937_64 rng(91);
  int done = 0;
  while (done < 20) {
    LinearCode C = testutil::rand_code(rng, 3 + int(rng() % 4), true);
    CodeAlgebra A = build_algebra(
        C, StructureParams::constants(C, testutil::rand_rational(rng),
                                      testutil::rand_rational(rng),
                                      testutil::rand_rational(rng)));
    bool exceptional = C.size() == 4 && C.has_all_ones();
    auto res = is_simple(A);
    CHECK(res.simple == !exceptional);
    ++done;
  }
  // and the exceptional family explicitly, at several lengths
  for (const char* alpha : {"100", "110"}) {
    std::string ac;
    for (char c : std::string(alpha)) ac += (c == '0' ? '1' : '0');
    LinearCode C = LinearCode::from_generators({alpha, ac});
    CodeAlgebra A = build_constant_algebra(C, Scalar(frac(1, 2)), Scalar(1), Scalar(3));
    auto res = is_simple(A);
    CHECK(!res.simple);
    CHECK(res.ideals.size() == 2);
  }
}
