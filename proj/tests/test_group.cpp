#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "codealg/group.hpp"
#include "codealg/smap.hpp"
#include "test_util.hpp"

using namespace codealg;

namespace {

CodeAlgebra even3() {
  return build_constant_algebra(LinearCode::from_generators({"011", "101"}),
                                Scalar(frac(1, 2)), Scalar(frac(1, 2)), Scalar(1));
}

CodeAlgebra hamming8() {
  return build_constant_algebra(
      LinearCode::from_generators({"11111111", "00001111", "00110011", "01010101"}),
      Scalar(frac(1, 4)), Scalar(frac(1, 2)), Scalar(1));
}

}  // namespace

TEST_CASE("miyamoto_group orders and kernels") {
  CodeAlgebra H = hamming8();
  auto M = miyamoto_group(H);
  CHECK(M.order == 16);
  CHECK(M.kernel == H.code());  // self-dual kernel

  CodeAlgebra E = even3();
  auto ME = miyamoto_group(E);
  CHECK(ME.order == 4);
  CHECK(ME.kernel.dim() == 1);
  CHECK(ME.kernel.contains(word_from_str("111")));

  CodeAlgebra F = build_constant_algebra(LinearCode::full_space(2), Scalar(-1), Scalar(1),
                                         Scalar(-1));
  CHECK(miyamoto_group(F).order == 4);  // trivial kernel, 2^n

  // a = 1 breaks the grading
  CodeAlgebra B = build_constant_algebra(LinearCode::full_space(2), Scalar(1), Scalar(1),
                                         Scalar(1));
  CHECK_THROWS_AS(miyamoto_group(B), Error);
}

TEST_CASE("sign maps compose through the quotient") {
  CodeAlgebra E = even3();
  auto M = miyamoto_group(E);
  std::mt19937_64 rng(83);
  for (int t = 0; t < 40; ++t) {
    word v = rng() & 7, w = rng() & 7;
    SignedMap tv = miyamoto_sign_map(E, v), tw = miyamoto_sign_map(E, w);
    SignedMap tvw = miyamoto_sign_map(E, v ^ w);
    CHECK(signed_map_equal(M.kernel, compose(tv, tw), tvw));
    // tau_v = tau_{v + kernel element}
    CHECK(signed_map_equal(M.kernel, tv,
                           miyamoto_sign_map(E, v ^ word_from_str("111"))));
  }
}

TEST_CASE("full_group") {
  CodeAlgebra E = even3();
  auto G = full_group(E);
  CHECK(G.order == 24);  // 4 * 6
  CHECK(G.code_autos.size() == 6);

  CodeAlgebra H = hamming8();
  auto GH = full_group(H);
  CHECK(GH.order == 21504);  // 16 * 1344
  CHECK(GH.m.order == 16);
  CHECK(GH.code_autos.size() == 1344);

  // M meets the induced Aut(C) image trivially: sign maps fix all toral
  // indices, induced maps of nontrivial permutations do not
  for (const auto& g : G.code_autos) {
    bool is_id = true;
    for (size_t i = 0; i < g.size(); ++i)
      if (g[i] != int(i)) is_id = false;
    if (is_id) continue;
    SignedMap ind = induced_automorphism(E, g);
    for (const auto& tau : G.m.generators) CHECK(!(ind.perm == tau.perm));
  }

  // non-regular parameters are rejected
  StructureParams P = StructureParams::constants(E.code(), Scalar(frac(1, 2)),
                                                 Scalar(frac(1, 2)), Scalar(1));
  P.set_a(1, word_from_str("011"), Scalar(frac(1, 3)));
  CHECK_THROWS_AS(full_group(build_algebra(E.code(), P)), Error);
}

TEST_CASE("every enumerated group element is an automorphism (even3)") {
  CodeAlgebra E = even3();
  auto G = full_group(E);
  auto elements = enumerate_group(E, G);
  CHECK(elements.size() == 24);
  for (const auto& m : elements) CHECK(!automorphism_witness(E, m).has_value());
  // distinct as maps
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      CHECK(!signed_map_equal(G.m.kernel, elements[i], elements[j]));
}

TEST_CASE("axis orbits on even3") {
  CodeAlgebra E = even3();
  std::vector<Element> axes9;
  for (int i = 0; i < 3; ++i) axes9.push_back(E.basis_element(i));
  for (word alpha : E.cstar()) {
    auto s = small_idempotents(E, alpha);
    axes9.push_back(s.plus);
    axes9.push_back(s.minus);
  }
  auto closed = axis_orbit(E, axes9, 512);
  CHECK(closed.closed);
  CHECK(closed.count == 9);

  std::vector<Element> axes13 = axes9;
  for (const auto& r : enumerate_smap(E, E.code()))
    if (r.spec.root == Root::Plus) axes13.push_back(r.idem);
  CHECK(axes13.size() == 13);
  auto growing = axis_orbit(E, axes13, 64);
  CHECK(!growing.closed);
  CHECK(growing.count > 64);
}

TEST_CASE("orbit rejects ungraded axes") {
  // a small idempotent on H8 has lambda and nu+ merged at 1/2 with
  // (1/2) * (1/2) meeting 1/2 again, so only the degenerate grading exists
  CodeAlgebra H = hamming8();
  auto s = small_idempotents(H, word_from_str("00001111"));
  try {
    axis_orbit(H, {s.plus}, 16);
    FAIL("expected NoGrading");
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_grading);
  }
}
