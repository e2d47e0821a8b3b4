#include "codealg/structure.hpp"

#include <algorithm>
#include <random>

namespace codealg {

Ideal ideal_generated(const CodeAlgebra& A, const Element& x) {
  RowSpan span(A.dim());
  std::vector<Vec> frontier;
  if (span.add(x)) frontier.push_back(x);
  while (!frontier.empty() && span.dim() < A.dim()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (int j = 0; j < A.dim(); ++j) {
        Vec prod = A.multiply(v, A.basis_element(j));
        if (span.add(prod)) next.push_back(std::move(prod));
      }
      if (span.dim() == A.dim()) break;  // already the whole algebra
    }
    frontier = std::move(next);
  }
  Ideal I;
  I.basis = span.basis();
  I.dim = span.dim();
  return I;
}

SimplicityResult is_simple(const CodeAlgebra& A) {
  if (!is_nondegenerate(A).ok)
    throw Error(errc::degenerate, "simplicity decision requires a non-degenerate algebra");

  std::vector<Element> seeds;
  for (int i = 0; i < A.dim(); ++i) seeds.push_back(A.basis_element(i));
  // fixed-seed random elements, belt and braces on top of the basis seeds
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int s = 0; s < 64; ++s) {
    Element x(A.dim());
    for (int i = 0; i < A.dim(); ++i) x[i] = Scalar(coef(rng));
    if (!vec_is_zero(x)) seeds.push_back(std::move(x));
  }

  SimplicityResult res;
  std::vector<Ideal> proper;
  for (const auto& x : seeds) {
    Ideal I = ideal_generated(A, x);
    if (I.dim == 0 || I.dim == A.dim()) continue;
    bool dup = false;
    for (const auto& J : proper)
      if (J.dim == I.dim && J.basis == I.basis) dup = true;
    if (!dup) proper.push_back(std::move(I));
  }
  res.simple = proper.empty();

  // structural criterion: nonsimple iff C = {0, 1, alpha, alpha^c}
  bool exceptional = A.code().size() == 4 && A.code().has_all_ones();
  if (res.simple == exceptional)
    throw Error(errc::internal, "ideal closure disagrees with the structural criterion");
  if (exceptional) {
    if (proper.size() != 2)
      throw Error(errc::internal, "exceptional case must have exactly two proper ideals");
    std::sort(proper.begin(), proper.end(), [](const Ideal& a, const Ideal& b) {
      return vec_key_less(a.basis.row(0), b.basis.row(0));
    });
    res.ideals = std::move(proper);
  }
  return res;
}

}  // namespace codealg
