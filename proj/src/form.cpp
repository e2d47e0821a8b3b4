#include "codealg/form.hpp"

namespace codealg {

Mat GramForm::gram(const CodeAlgebra& A) const {
  Mat G(A.dim(), A.dim());
  for (int i = 0; i < A.n(); ++i) G(i, i) = lambda_toral[i];
  for (const auto& [alpha, v] : lambda_codeword) {
    int idx = A.codeword_index(alpha);
    G(idx, idx) = v;
  }
  for (const auto& [key, v] : exceptional) {
    int idx = A.codeword_index(key.second);
    G(key.first, idx) = v;
    G(idx, key.first) = v;
  }
  return G;
}

Scalar GramForm::eval(const CodeAlgebra& A, const Element& x, const Element& y) const {
  Scalar out(0);
  for (int i = 0; i < A.n(); ++i) out += lambda_toral[i] * x[i] * y[i];
  for (const auto& [alpha, v] : lambda_codeword) {
    int idx = A.codeword_index(alpha);
    out += v * x[idx] * y[idx];
  }
  for (const auto& [key, v] : exceptional) {
    int idx = A.codeword_index(key.second);
    out += v * (x[key.first] * y[idx] + x[idx] * y[key.first]);
  }
  return out;
}

FrobeniusOutcome frobenius_form(const CodeAlgebra& A, std::optional<Vec> lambda_toral,
                                const std::map<std::pair<int, word>, Scalar>& exceptional_entries) {
  Vec lambdas = lambda_toral ? std::move(*lambda_toral) : Vec(A.n(), Scalar(1));
  if (int(lambdas.size()) != A.n())
    throw Error(errc::length_mismatch, "need one toral weight per coordinate");
  bool all_zero = true;
  for (const auto& l : lambdas)
    if (!l.is_zero()) all_zero = false;
  if (all_zero && exceptional_entries.empty())
    throw Error(errc::zero_form, "a Frobenius form must be nonzero");

  FrobeniusOutcome out{FrobeniusOutcome::Status::Ok, std::nullopt, "", false};
  GramForm form;
  form.lambda_toral = lambdas;

  // condition 1: lambda_alpha := (c_{i,a}/a_{i,a}) lambda_i constant on supp
  for (word alpha : A.cstar()) {
    std::optional<Scalar> val;
    int first_i = -1;
    for (int i = 0; i < A.n(); ++i) {
      if (!get_bit(alpha, i)) continue;
      Scalar cur = A.params().c(i, alpha) / A.params().a(i, alpha) * lambdas[i];
      if (!val) {
        val = cur;
        first_i = i;
      } else if (cur != *val) {
        out.status = FrobeniusOutcome::Status::ConditionOneFails;
        out.witness = "lambda_" + word_str(alpha, A.n()) + " differs between i=" +
                      std::to_string(first_i + 1) + " and i=" + std::to_string(i + 1);
        return out;
      }
    }
    form.lambda_codeword[alpha] = *val;
  }

  // condition 2: b_{a,b} lambda_c = b_{a,c} lambda_b = b_{b,c} lambda_a
  // whenever a + b = c in C*
  const auto& cstar = A.cstar();
  for (size_t p = 0; p < cstar.size(); ++p)
    for (size_t q = p + 1; q < cstar.size(); ++q) {
      word alpha = cstar[p], beta = cstar[q], gamma = alpha ^ beta;
      if (!A.code().contains(gamma) || gamma == 0 || gamma == A.code().all_ones()) continue;
      if (!lex_less(beta, gamma)) continue;  // visit each triple once (alpha < beta < gamma)
      Scalar lhs = A.params().b(alpha, beta) * form.lambda_codeword.at(gamma);
      Scalar mid = A.params().b(alpha, gamma) * form.lambda_codeword.at(beta);
      Scalar rhs = A.params().b(beta, gamma) * form.lambda_codeword.at(alpha);
      if (lhs != mid || mid != rhs) {
        out.status = FrobeniusOutcome::Status::ConditionTwoFails;
        out.witness = "triple (" + word_str(alpha, A.n()) + ", " + word_str(beta, A.n()) +
                      ", " + word_str(gamma, A.n()) + ")";
        return out;
      }
    }

  // exceptional case C = {0, 1, alpha, alpha^c}, |alpha| = 1, a = 1
  if (A.code().size() == 4 && A.code().has_all_ones()) {
    for (word alpha : cstar) {
      if (weight(alpha) != 1) continue;
      int i = __builtin_ctzll(alpha);
      if (A.params().a(i, alpha).is_one()) {
        out.exceptional_case = true;
        auto it = exceptional_entries.find({i, alpha});
        form.exceptional[{i, alpha}] = it != exceptional_entries.end() ? it->second : Scalar(0);
      }
    }
  }
  out.form = std::move(form);
  return out;
}

AssocReport verify_associative(const CodeAlgebra& A, const Mat& gram) {
  int d = A.dim();
  auto pair_with_product = [&](int x, int i, int j) {
    // (b_x, b_i b_j) via the table
    Scalar out(0);
    for (const auto& [k, s] : A.basis_product(i, j)) out += s * gram(x, k);
    return out;
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        if (pair_with_product(x, y, z) != pair_with_product(z, x, y))
          return {false, {x, y, z}};
  return {true, {-1, -1, -1}};
}

bool eigenspace_orthogonality(const CodeAlgebra& A, const GramForm& form,
                              const EigenDecomposition& dec) {
  for (size_t p = 0; p < dec.pairs.size(); ++p)
    for (size_t q = p + 1; q < dec.pairs.size(); ++q) {
      const Mat& U = dec.pairs[p].basis;
      const Mat& W = dec.pairs[q].basis;
      for (int u = 0; u < U.cols(); ++u)
        for (int w = 0; w < W.cols(); ++w)
          if (!form.eval(A, U.col(u), W.col(w)).is_zero()) return false;
    }
  return true;
}

InvarianceReport g_invariance(const CodeAlgebra& A, const GramForm& form,
                              const std::vector<SignedMap>& G) {
  Mat Gm = form.gram(A);
  for (const auto& g : G) {
    int n = A.n();
    auto image = [&](int idx) -> std::pair<int, int> {
      if (idx < n) return {g.perm[idx], 1};
      word alpha = A.codeword_at(idx);
      return {A.codeword_index(apply_perm(alpha, g.perm)), g.sign_of(alpha)};
    };
    for (int i = 0; i < A.dim(); ++i) {
      auto [pi, si] = image(i);
      for (int j = i; j < A.dim(); ++j) {
        auto [pj, sj] = image(j);
        Scalar lhs = Gm(pi, pj);
        if (si * sj < 0) lhs = -lhs;
        if (lhs != Gm(i, j))
          return {false, "(" + A.basis_name(i) + ", " + A.basis_name(j) + ")"};
      }
    }
  }
  return {true, ""};
}

bool positive_definite(const CodeAlgebra&, const GramForm& form) {
  for (const auto& l : form.lambda_toral)
    if (l.sign() <= 0) return false;
  for (const auto& [alpha, v] : form.lambda_codeword)
    if (v.sign() <= 0) return false;
  for (const auto& [key, v] : form.exceptional) {
    if (v.is_zero()) continue;
    Scalar li = form.lambda_toral[key.first];
    Scalar la = form.lambda_codeword.at(key.second);
    if ((li * la - v * v).sign() <= 0) return false;
  }
  return true;
}

}  // namespace codealg
