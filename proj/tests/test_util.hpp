#pragma once

#include <algorithm>
#include <random>

#include "codealg/form.hpp"
#include "codealg/smap.hpp"

// Shared helpers for the test suites: random generators with fixed seeds and
// brute-force oracles kept independent of the library code paths they check.
namespace testutil {

using namespace codealg;

inline Scalar rand_rational(std::mt19937_64& rng, bool nonzero = true) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  long p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return Scalar(frac(p, den(rng)));
}

// an a-parameter draw honouring the toral-axis hypothesis a_{i,alpha} != 1
inline Scalar rand_a_param(std::mt19937_64& rng) {
  Scalar a = rand_rational(rng);
  while (a.is_one()) a = rand_rational(rng);
  return a;
}

// random code with enumerable words; resamples until C* is nonempty
inline LinearCode rand_code(std::mt19937_64& rng, int n, bool full_support = false) {
  std::uniform_int_distribution<int> kdist(1, n);
  std::uniform_int_distribution<word> wdist(1, (word(1) << n) - 1);
  for (;;) {
    int k = kdist(rng);
    std::vector<word> rows;
    LinearCode C = LinearCode::zero_code(n);
    for (int tries = 0; tries < 4 * k && int(rows.size()) < k; ++tries) {
      word w = wdist(rng);
      std::vector<word> cand = rows;
      cand.push_back(w);
      try {
        C = LinearCode::from_basis(n, cand);
        rows = cand;
      } catch (const Error&) {
      }
    }
    if (rows.empty()) continue;
    C = LinearCode::from_basis(n, rows);
    if (C.nonconstant_words().empty()) continue;
    if (full_support && C.support() != C.all_ones()) continue;
    return C;
  }
}

// random constant-weight subcode of C with at least one nonconstant word
inline std::optional<LinearCode> rand_constant_weight_subcode(std::mt19937_64& rng,
                                                              const LinearCode& C) {
  auto cstar = C.nonconstant_words();
  std::vector<std::vector<word>> by_weight(C.length() + 1);
  for (word w : cstar) by_weight[weight(w)].push_back(w);
  std::vector<int> weights;
  for (int w = 1; w <= C.length(); ++w)
    if (!by_weight[w].empty()) weights.push_back(w);
  if (weights.empty()) return std::nullopt;
  std::shuffle(weights.begin(), weights.end(), rng);
  for (int w : weights) {
    auto& words = by_weight[w];
    std::shuffle(words.begin(), words.end(), rng);
    // grow a subcode greedily while it stays constant weight
    std::vector<word> basis;
    for (word cand : words) {
      std::vector<word> trial = basis;
      trial.push_back(cand);
      try {
        LinearCode D = LinearCode::from_basis(C.length(), trial);
        auto cw = is_constant_weight(D);
        if (cw.constant) basis = trial;
      } catch (const Error&) {
      }
    }
    if (!basis.empty()) return LinearCode::from_basis(C.length(), basis);
  }
  return std::nullopt;
}

// brute-force solution space of the associativity equations: symmetric gram
// matrices G with (b_i b_j, b_k) = (b_i, b_j b_k) for all basis triples.
// Returns a basis (columns) of the space in the d(d+1)/2 packed coordinates.
inline Mat associative_form_space(const CodeAlgebra& A) {
  int d = A.dim();
  int m = d * (d + 1) / 2;
  auto pack = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
  };
  std::vector<Vec> rows;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        // (b_x, b_y b_z) - (b_x b_y, b_z) = 0
        Vec row(m);
        for (const auto& [k, s] : A.basis_product(y, z)) row[pack(x, k)] += s;
        for (const auto& [k, s] : A.basis_product(x, y)) row[pack(k, z)] -= s;
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
  Mat M(int(rows.size()), m);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < m; ++c) M(int(r), c) = rows[r][c];
  return kernel_basis(std::move(M));
}

inline Vec pack_gram(const CodeAlgebra& A, const Mat& G) {
  int d = A.dim();
  Vec out(d * (d + 1) / 2);
  int t = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) out[t++] = G(i, j);
  return out;
}

// The family of forms allowed by the closed formulas: the two conditions are
// linear in (lambda_i, lambda_alpha), so the family is the image of that
// solution space as diagonal gram matrices, plus the free exceptional
// off-diagonal entries.  Packed columns.
inline Mat theorem_form_family(const CodeAlgebra& A) {
  int n = A.n(), d = A.dim();
  const auto& cstar = A.cstar();
  std::vector<Vec> rows;
  // condition 1: lambda_alpha = (c_{i,a}/a_{i,a}) lambda_i for every i
  for (size_t s = 0; s < cstar.size(); ++s) {
    word alpha = cstar[s];
    for (int i = 0; i < n; ++i) {
      if (!get_bit(alpha, i)) continue;
      Vec row(d);
      row[n + s] = Scalar(1);
      row[i] = -(A.params().c(i, alpha) / A.params().a(i, alpha));
      rows.push_back(std::move(row));
    }
  }
  // condition 2: b_{a,b} lambda_c = b_{a,c} lambda_b = b_{b,c} lambda_a
  for (size_t p = 0; p < cstar.size(); ++p)
    for (size_t q = p + 1; q < cstar.size(); ++q) {
      word alpha = cstar[p], beta = cstar[q], gamma = alpha ^ beta;
      if (!A.code().contains(gamma) || gamma == 0 || gamma == A.code().all_ones()) continue;
      if (!lex_less(beta, gamma)) continue;
      size_t r = std::find(cstar.begin(), cstar.end(), gamma) - cstar.begin();
      Vec row1(d), row2(d);
      row1[n + r] = A.params().b(alpha, beta);
      row1[n + p] = row1[n + p] - A.params().b(beta, gamma);
      rows.push_back(std::move(row1));
      row2[n + q] = A.params().b(alpha, gamma);
      row2[n + p] = row2[n + p] - A.params().b(beta, gamma);
      rows.push_back(std::move(row2));
    }
  Mat M(int(rows.size()), d);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < d; ++c) M(int(r), c) = rows[r][c];
  Mat L = rows.empty() ? Mat::identity(d) : kernel_basis(std::move(M));

  int m = d * (d + 1) / 2;
  auto pack = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return i * d - i * (i - 1) / 2 + (j - i);
  };
  std::vector<Vec> cols;
  for (int c = 0; c < L.cols(); ++c) {
    Vec g(m);
    for (int i = 0; i < d; ++i) g[pack(i, i)] = L(i, c);
    cols.push_back(std::move(g));
  }
  // exceptional case: free (t_i, e^alpha) for |alpha| = 1 with a = 1
  if (A.code().size() == 4 && A.code().has_all_ones()) {
    for (word alpha : cstar) {
      if (weight(alpha) != 1) continue;
      int i = __builtin_ctzll(alpha);
      if (A.params().a(i, alpha).is_one()) {
        Vec g(m);
        g[pack(i, A.codeword_index(alpha))] = Scalar(1);
        cols.push_back(std::move(g));
      }
    }
  }
  if (cols.empty()) return Mat(m, 0);
  return Mat::from_columns(cols);
}

}  // namespace testutil
