#include "codealg/algebra.hpp"

#include <algorithm>
#include <set>

namespace codealg {

StructureParams StructureParams::constants(const LinearCode& C, const Scalar& a,
                                           const Scalar& b, const Scalar& c) {
  StructureParams P;
  auto cstar = C.nonconstant_words();
  word ones = C.all_ones();
  bool complements = C.has_all_ones();
  for (word alpha : cstar) {
    for (int i = 0; i < C.length(); ++i)
      if (get_bit(alpha, i)) {
        P.a_[{i, alpha}] = a;
        P.c_[{i, alpha}] = c;
      }
    for (word beta : cstar) {
      if (beta == alpha) continue;
      if (complements && beta == (alpha ^ ones)) continue;
      P.b_[bkey(alpha, beta)] = b;
    }
  }
  return P;
}

StructureParams StructureParams::voa(const LinearCode& C, const Scalar& lambda) {
  return constants(C, Scalar(mpq_class(1, 4)), lambda, Scalar(4) * lambda * lambda);
}

const Scalar& StructureParams::a(int i, word alpha) const {
  auto it = a_.find({i, alpha});
  if (it == a_.end())
    throw Error(errc::missing_param, "a[" + std::to_string(i + 1) + ",?]");
  return it->second;
}

const Scalar& StructureParams::b(word alpha, word beta) const {
  auto it = b_.find(bkey(alpha, beta));
  if (it == b_.end()) throw Error(errc::missing_param, "b[?,?]");
  return it->second;
}

const Scalar& StructureParams::c(int i, word alpha) const {
  auto it = c_.find({i, alpha});
  if (it == c_.end())
    throw Error(errc::missing_param, "c[" + std::to_string(i + 1) + ",?]");
  return it->second;
}

void StructureParams::set_a(int i, word alpha, const Scalar& v) {
  auto it = a_.find({i, alpha});
  if (it == a_.end()) throw Error(errc::parse_error, "a-override key outside parameter domain");
  it->second = v;
}

void StructureParams::set_b(word alpha, word beta, const Scalar& v) {
  auto it = b_.find(bkey(alpha, beta));
  if (it == b_.end()) throw Error(errc::parse_error, "b-override key outside parameter domain");
  it->second = v;
}

void StructureParams::set_c(int i, word alpha, const Scalar& v) {
  auto it = c_.find({i, alpha});
  if (it == c_.end()) throw Error(errc::parse_error, "c-override key outside parameter domain");
  it->second = v;
}

int CodeAlgebra::codeword_index(word alpha) const {
  auto it = cstar_idx_.find(alpha);
  if (it == cstar_idx_.end()) throw Error(errc::internal, "word not in C*");
  return it->second;
}

std::string CodeAlgebra::basis_name(int idx) const {
  if (idx < n()) return "t" + std::to_string(idx + 1);
  return "e^" + word_str(codeword_at(idx), n());
}

const CodeAlgebra::SparseVec& CodeAlgebra::basis_product(int i, int j) const {
  if (i > j) std::swap(i, j);
  return table_[tri_index(i, j)];
}

Element CodeAlgebra::multiply(const Element& x, const Element& y) const {
  Element out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar f = x[i] * y[j];
      for (const auto& [k, s] : basis_product(i, j)) out[k] += f * s;
    }
  }
  return out;
}

Mat CodeAlgebra::adjoint(const Element& x) const {
  Mat M(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (const auto& [k, s] : basis_product(i, j)) M(k, j) += x[i] * s;
    }
  }
  return M;
}

Element CodeAlgebra::basis_element(int idx) const {
  Element e(dim_);
  e[idx] = Scalar(1);
  return e;
}

Element CodeAlgebra::toral_sum(word support) const {
  Element e(dim_);
  for (int i = 0; i < n(); ++i)
    if (get_bit(support, i)) e[i] = Scalar(1);
  return e;
}

CodeAlgebra build_algebra(const LinearCode& C, StructureParams params,
                          const BuildOptions& opts) {
  CodeAlgebra A;
  A.code_ = C;
  A.cstar_ = C.nonconstant_words();
  if (A.cstar_.empty()) throw Error(errc::empty_cstar, "|C*| must be positive");
  int n = C.length();
  A.dim_ = n + int(A.cstar_.size());
  if (A.dim_ > opts.max_dim)
    throw Error(errc::dim_too_large, "algebra dimension " + std::to_string(A.dim_) +
                                         " exceeds limit " + std::to_string(opts.max_dim) +
                                         " (raise BuildOptions::max_dim to override)");
  for (size_t r = 0; r < A.cstar_.size(); ++r) A.cstar_idx_[A.cstar_[r]] = n + int(r);

  // parameter domain must be complete, and all values in one field
  for (word alpha : A.cstar_)
    for (int i = 0; i < n; ++i)
      if (get_bit(alpha, i)) {
        const Scalar& a = params.a(i, alpha);
        const Scalar& c = params.c(i, alpha);
        for (const Scalar* s : {&a, &c})
          if (!s->is_rational()) {
            if (A.disc_ != 1 && A.disc_ != s->disc())
              throw Error(errc::discriminant_mismatch, "parameters mix two surds");
            A.disc_ = s->disc();
          }
      }
  word ones = C.all_ones();
  bool complements = C.has_all_ones();
  for (word alpha : A.cstar_)
    for (word beta : A.cstar_) {
      if (beta == alpha || (complements && beta == (alpha ^ ones))) continue;
      const Scalar& b = params.b(alpha, beta);
      if (!b.is_rational()) {
        if (A.disc_ != 1 && A.disc_ != b.disc())
          throw Error(errc::discriminant_mismatch, "parameters mix two surds");
        A.disc_ = b.disc();
      }
    }
  A.params_ = std::move(params);

  // multiplication table
  A.table_.resize(size_t(A.dim_) * (A.dim_ + 1) / 2);
  auto& P = A.params_;
  for (int i = 0; i < A.dim_; ++i)
    for (int j = i; j < A.dim_; ++j) {
      CodeAlgebra::SparseVec e;
      if (i < n && j < n) {
        if (i == j) e.push_back({i, Scalar(1)});
      } else if (i < n) {
        word alpha = A.cstar_[j - n];
        if (get_bit(alpha, i)) e.push_back({j, P.a(i, alpha)});
      } else {
        word alpha = A.cstar_[i - n], beta = A.cstar_[j - n];
        if (alpha == beta) {
          for (int t = 0; t < n; ++t)
            if (get_bit(alpha, t)) e.push_back({t, P.c(t, alpha)});
        } else if (complements && beta == (alpha ^ ones)) {
          // e^alpha e^{alpha^c} = 0
        } else {
          e.push_back({A.cstar_idx_.at(alpha ^ beta), P.b(alpha, beta)});
        }
      }
      A.table_[A.tri_index(i, j)] = std::move(e);
    }
  return A;
}

CodeAlgebra build_constant_algebra(const LinearCode& C, const Scalar& a, const Scalar& b,
                                   const Scalar& c, const BuildOptions& opts) {
  return build_algebra(C, StructureParams::constants(C, a, b, c), opts);
}

NondegeneracyReport is_nondegenerate(const CodeAlgebra& A) {
  NondegeneracyReport rep{};
  rep.support_full = A.code().support() == A.code().all_ones();
  if (!rep.support_full) rep.reasons.push_back("supp(C) is a proper subset of [n]");
  rep.cstar_nonempty = !A.cstar().empty();
  if (!rep.cstar_nonempty) rep.reasons.push_back("C* is empty");
  rep.params_nonzero = true;
  auto check = [&](const char* name, const Scalar& v, const std::string& key) {
    if (v.is_zero() && rep.params_nonzero) {
      rep.params_nonzero = false;
      rep.reasons.push_back(std::string(name) + key + " = 0");
    }
  };
  for (const auto& [k, v] : A.params().a_map())
    check("a", v, "[" + std::to_string(k.first + 1) + "," + word_str(k.second, A.n()) + "]");
  for (const auto& [k, v] : A.params().c_map())
    check("c", v, "[" + std::to_string(k.first + 1) + "," + word_str(k.second, A.n()) + "]");
  for (const auto& [k, v] : A.params().b_map())
    check("b", v, "[" + word_str(k.first, A.n()) + "," + word_str(k.second, A.n()) + "]");
  rep.ok = rep.support_full && rep.cstar_nonempty && rep.params_nonzero;
  return rep;
}

RegularityReport is_regular(const CodeAlgebra& A, const std::vector<Perm>& G) {
  const auto& C = A.code();
  for (const Perm& g : G) {
    for (word gen : C.generators())
      if (!C.contains(apply_perm(gen, g)))
        throw Error(errc::not_an_automorphism, "permutation does not preserve the code");
    for (const auto& [k, v] : A.params().a_map()) {
      auto [i, alpha] = k;
      if (A.params().a(g[i], apply_perm(alpha, g)) != v)
        return {false, "a[" + std::to_string(i + 1) + "," + word_str(alpha, A.n()) + "]"};
    }
    for (const auto& [k, v] : A.params().c_map()) {
      auto [i, alpha] = k;
      if (A.params().c(g[i], apply_perm(alpha, g)) != v)
        return {false, "c[" + std::to_string(i + 1) + "," + word_str(alpha, A.n()) + "]"};
    }
    for (const auto& [k, v] : A.params().b_map()) {
      auto [alpha, beta] = k;
      if (A.params().b(apply_perm(alpha, g), apply_perm(beta, g)) != v)
        return {false, "b[" + word_str(alpha, A.n()) + "," + word_str(beta, A.n()) + "]"};
    }
  }
  return {true, ""};
}

SignedMap signed_identity(int n) {
  SignedMap m;
  m.perm.resize(n);
  for (int i = 0; i < n; ++i) m.perm[i] = i;
  return m;
}

SignedMap compose(const SignedMap& a, const SignedMap& b) {
  // (x^a)^b: permutation composes; b's sign is evaluated at the a-image word
  SignedMap m;
  m.perm = compose_perm(a.perm, b.perm);
  m.sign_vec = a.sign_vec ^ apply_perm(b.sign_vec, inverse_perm(a.perm));
  return m;
}

SignedMap signed_inverse(const SignedMap& m) {
  SignedMap r;
  r.perm = inverse_perm(m.perm);
  r.sign_vec = apply_perm(m.sign_vec, m.perm);
  return r;
}

Element apply(const CodeAlgebra& A, const SignedMap& m, const Element& x) {
  Element out(A.dim());
  int n = A.n();
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    out[m.perm[i]] += x[i];
  }
  for (int idx = n; idx < A.dim(); ++idx) {
    if (x[idx].is_zero()) continue;
    word alpha = A.codeword_at(idx);
    int target = A.codeword_index(apply_perm(alpha, m.perm));
    out[target] += m.sign_of(alpha) < 0 ? -x[idx] : x[idx];
  }
  return out;
}

Mat signed_map_matrix(const CodeAlgebra& A, const SignedMap& m) {
  Mat M(A.dim(), A.dim());
  for (int j = 0; j < A.dim(); ++j) {
    Element img = apply(A, m, A.basis_element(j));
    for (int i = 0; i < A.dim(); ++i) M(i, j) = img[i];
  }
  return M;
}

std::optional<std::pair<int, int>> automorphism_witness(const CodeAlgebra& A,
                                                        const SignedMap& m) {
  // basis elements map to signed basis elements, so both sides stay sparse
  int n = A.n();
  auto image = [&](int idx) -> std::pair<int, int> {  // (index, sign)
    if (idx < n) return {m.perm[idx], 1};
    word alpha = A.codeword_at(idx);
    return {A.codeword_index(apply_perm(alpha, m.perm)), m.sign_of(alpha)};
  };
  using Entry = std::pair<int, Scalar>;
  auto by_index = [](const Entry& a, const Entry& b) { return a.first < b.first; };
  for (int i = 0; i < A.dim(); ++i) {
    auto [pi, si] = image(i);
    for (int j = i; j < A.dim(); ++j) {
      auto [pj, sj] = image(j);
      // m(b_i) m(b_j) = s_i s_j table(p(i), p(j))
      std::vector<Entry> lhs;
      for (const auto& [k, s] : A.basis_product(pi, pj))
        lhs.push_back({k, si * sj < 0 ? -s : s});
      // m(b_i b_j): map each table entry of (i, j)
      std::vector<Entry> rhs;
      for (const auto& [k, s] : A.basis_product(i, j)) {
        auto [ki, ks] = image(k);
        rhs.push_back({ki, ks < 0 ? -s : s});
      }
      std::sort(lhs.begin(), lhs.end(), by_index);
      std::sort(rhs.begin(), rhs.end(), by_index);
      if (lhs != rhs) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> automorphism_witness(const CodeAlgebra& A, const Mat& g) {
  for (int i = 0; i < A.dim(); ++i) {
    Vec gi = g.col(i);
    for (int j = i; j < A.dim(); ++j) {
      Element prod(A.dim());
      for (const auto& [k, s] : A.basis_product(i, j)) prod[k] += s;
      if (A.multiply(gi, g.col(j)) != mat_vec(g, prod)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

SignedMap induced_automorphism(const CodeAlgebra& A, const Perm& g) {
  for (word gen : A.code().generators())
    if (!A.code().contains(apply_perm(gen, g)))
      throw Error(errc::not_an_automorphism, "permutation does not preserve the code");
  SignedMap m;
  m.perm = inverse_perm(g);  // t_i -> t_{i g^{-1}}
  if (auto w = automorphism_witness(A, m))
    throw Error(errc::not_regular,
                "induced map fails multiplicativity on basis pair (" +
                    A.basis_name(w->first) + ", " + A.basis_name(w->second) + ")");
  return m;
}

Subalgebra subalgebra_from_subcode(const CodeAlgebra& A, const LinearCode& D) {
  if (!D.is_subcode_of(A.code())) throw Error(errc::not_a_subcode, "D is not a subcode of C");
  Subalgebra S;
  word supp = D.support();
  for (int i = 0; i < A.n(); ++i)
    if (get_bit(supp, i)) S.basis_indices.push_back(i);
  for (word alpha : D.words())
    if (alpha != 0 && alpha != D.all_ones()) S.basis_indices.push_back(A.codeword_index(alpha));
  std::sort(S.basis_indices.begin(), S.basis_indices.end());
  // closure check
  std::set<int> in(S.basis_indices.begin(), S.basis_indices.end());
  for (int i : S.basis_indices)
    for (int j : S.basis_indices)
      for (const auto& [k, s] : A.basis_product(i, j))
        if (!s.is_zero() && !in.count(k))
          throw Error(errc::internal, "subcode span not closed under multiplication");
  return S;
}

IdentityResult identity_element(const CodeAlgebra& A) {
  IdentityResult res;
  res.toral_unit = A.toral_sum(A.code().all_ones());
  bool is_id = true;
  for (word alpha : A.cstar()) {
    Scalar sum(0);
    for (int i = 0; i < A.n(); ++i)
      if (get_bit(alpha, i)) sum += A.params().a(i, alpha);
    if (!sum.is_one()) {
      is_id = false;
      break;
    }
  }
  if (is_id) res.identity = res.toral_unit;
  return res;
}

PowerAssocReport power_associativity_witness(const CodeAlgebra& A, word alpha) {
  PowerAssocReport rep;
  Element x = A.basis_element(A.codeword_index(alpha));
  Element x2 = A.multiply(x, x);
  rep.square_of_square = A.multiply(x2, x2);
  rep.nested = A.multiply(x, A.multiply(x, x2));
  rep.equal = rep.square_of_square == rep.nested;
  return rep;
}

}  // namespace codealg
