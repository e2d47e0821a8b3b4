#include "codealg/spectral.hpp"

#include <algorithm>
#include <map>

namespace codealg {

std::vector<Scalar> EigenDecomposition::spectrum() const {
  std::vector<Scalar> out;
  for (const auto& p : pairs) out.push_back(p.value);
  return out;
}

int EigenDecomposition::total_dim() const {
  int d = 0;
  for (const auto& p : pairs) d += p.dim();
  return d;
}

const EigenPair* EigenDecomposition::find(const Scalar& v) const {
  for (const auto& p : pairs)
    if (p.value == v) return &p;
  return nullptr;
}

namespace {

// canonical eigenvalue order: 1, then 0, then the rest by key order
void sort_pairs(std::vector<EigenPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    auto rank = [](const Scalar& v) { return v.is_one() ? 0 : v.is_zero() ? 1 : 2; };
    int ra = rank(a.value), rb = rank(b.value);
    if (ra != rb) return ra < rb;
    return scalar_key_less(a.value, b.value);
  });
}

}  // namespace

EigenDecomposition toral_peirce(const CodeAlgebra& A, int i) {
  // ad_{t_i} is diagonal: t_i -> 1, t_j -> 0 (j != i), e^a -> a_{i,a} or 0.
  // Grouping by value stays exact even when some a_{i,a} collides with 1 or 0,
  // which also covers the fallback the interface promises.
  std::map<Scalar, std::vector<int>, ScalarKeyLess> groups;
  for (int idx = 0; idx < A.dim(); ++idx) {
    Scalar v(0);
    if (idx == i)
      v = Scalar(1);
    else if (!A.is_toral_index(idx)) {
      word alpha = A.codeword_at(idx);
      if (get_bit(alpha, i)) v = A.params().a(i, alpha);
    }
    groups[v].push_back(idx);
  }
  EigenDecomposition dec;
  for (const auto& [value, idxs] : groups) {
    EigenPair p;
    p.value = value;
    p.basis = Mat(A.dim(), int(idxs.size()));
    for (size_t c = 0; c < idxs.size(); ++c) p.basis(idxs[c], int(c)) = Scalar(1);
    dec.pairs.push_back(std::move(p));
  }
  sort_pairs(dec.pairs);
  dec.semisimple = true;
  dec.residual_dim = 0;
  return dec;
}

EigenDecomposition eigen_decompose(const CodeAlgebra& A, const Element& x,
                                   const std::vector<Scalar>& hints) {
  Mat ad = A.adjoint(x);
  std::set<Scalar, ScalarKeyLess> cands{Scalar(0), Scalar(1)};
  for (const auto& [k, v] : A.params().a_map()) cands.insert(v);
  for (const auto& [k, v] : A.params().b_map()) cands.insert(v);
  for (const auto& [k, v] : A.params().c_map()) cands.insert(v);
  for (const Scalar& h : hints) {
    cands.insert(h);
    if (!h.is_rational()) cands.insert(h.conj());
  }

  EigenDecomposition dec;
  std::set<Scalar, ScalarKeyLess> used;
  auto try_candidates = [&](const std::set<Scalar, ScalarKeyLess>& cs) {
    for (const Scalar& lam : cs) {
      if (used.count(lam)) continue;
      used.insert(lam);
      Mat M = ad;
      for (int d = 0; d < M.rows(); ++d) M(d, d) -= lam;
      Mat K = kernel_basis(std::move(M));
      if (K.cols() > 0) dec.pairs.push_back({lam, std::move(K)});
    }
  };
  try_candidates(cands);
  if (dec.total_dim() < A.dim()) {
    // fall back to rational roots of the characteristic polynomial
    std::set<Scalar, ScalarKeyLess> extra;
    for (const Scalar& r : rational_roots(charpoly(ad))) extra.insert(r);
    try_candidates(extra);
  }
  sort_pairs(dec.pairs);
  dec.residual_dim = A.dim() - dec.total_dim();
  dec.semisimple = dec.residual_dim == 0;
  return dec;
}

int FusionLaw::label_index(const Scalar& v) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == v) return int(i);
  return -1;
}

FusionLaw fusion_law(const CodeAlgebra& A, const Element& x, const EigenDecomposition& dec) {
  if (!dec.semisimple)
    throw Error(errc::not_semisimple, "fusion law requires a semisimple element");
  (void)x;
  int m = int(dec.pairs.size());
  FusionLaw law;
  for (const auto& p : dec.pairs) law.labels.push_back(p.value);
  law.table.assign(m, std::vector<std::set<int>>(m));

  // change of basis to the eigenbasis
  Mat V(A.dim(), 0);
  std::vector<std::pair<int, int>> block_range;  // [start, end) per label
  for (const auto& p : dec.pairs) {
    block_range.push_back({V.cols(), V.cols() + p.basis.cols()});
    V = V.hcat(p.basis);
  }
  auto Vinv = inverse(V);
  if (!Vinv) throw Error(errc::internal, "eigenbasis is singular");

  for (int p = 0; p < m; ++p)
    for (int q = p; q < m; ++q) {
      std::set<int>& entry = law.table[p][q];
      const Mat& U = dec.pairs[p].basis;
      const Mat& W = dec.pairs[q].basis;
      for (int u = 0; u < U.cols(); ++u) {
        int wstart = (p == q) ? u : 0;
        for (int w = wstart; w < W.cols(); ++w) {
          Element prod = A.multiply(U.col(u), W.col(w));
          if (vec_is_zero(prod)) continue;
          Vec z = mat_vec(*Vinv, prod);
          for (int r = 0; r < m; ++r) {
            if (entry.count(r)) continue;
            for (int c = block_range[r].first; c < block_range[r].second; ++c)
              if (!z[c].is_zero()) {
                entry.insert(r);
                break;
              }
          }
        }
      }
      law.table[q][p] = entry;
    }
  return law;
}

bool seress_check(const FusionLaw& law) {
  int i0 = law.label_index(Scalar(0)), i1 = law.label_index(Scalar(1));
  if (i0 < 0 || i1 < 0)
    throw Error(errc::missing_unit_labels, "Seress condition needs labels 1 and 0");
  for (size_t j = 0; j < law.labels.size(); ++j) {
    if (int(j) == i1) continue;
    for (int k : law.table[i0][j])
      if (k != int(j)) return false;
  }
  return true;
}

AxisVerdict is_axis_precomputed(const CodeAlgebra& A, const Element& x, const FusionLaw& law,
                                const EigenDecomposition& dec, const FusionLaw& actual) {
  AxisVerdict v{};
  v.dec = dec;
  if (A.multiply(x, x) != x) {
    v.kind = AxisVerdict::NotAxis;
    v.witness = "not idempotent";
    return v;
  }
  if (!dec.semisimple) {
    v.kind = AxisVerdict::NotAxis;
    v.witness = "not semisimple over the session field (residual dimension " +
                std::to_string(dec.residual_dim) + ")";
    return v;
  }
  for (const auto& p : dec.pairs)
    if (law.label_index(p.value) < 0) {
      v.kind = AxisVerdict::NotAxis;
      v.witness = "eigenvalue " + p.value.str() + " outside the fusion law";
      return v;
    }
  for (size_t p = 0; p < actual.labels.size(); ++p)
    for (size_t q = 0; q < actual.labels.size(); ++q) {
      int lp = law.label_index(actual.labels[p]);
      int lq = law.label_index(actual.labels[q]);
      for (int r : actual.table[p][q])
        if (!law.entry_contains(lp, lq, law.label_index(actual.labels[r]))) {
          v.kind = AxisVerdict::NotAxis;
          v.witness = "product of " + actual.labels[p].str() + "- and " +
                      actual.labels[q].str() + "-eigenvectors escapes the law";
          return v;
        }
    }
  const EigenPair* one = dec.find(Scalar(1));
  v.kind = (one && one->dim() == 1) ? AxisVerdict::PrimitiveAxis : AxisVerdict::Axis;
  return v;
}

AxisVerdict is_axis(const CodeAlgebra& A, const Element& x, const FusionLaw& law) {
  if (A.multiply(x, x) != x) {
    AxisVerdict v{};
    v.kind = AxisVerdict::NotAxis;
    v.witness = "not idempotent";
    return v;
  }
  EigenDecomposition dec = eigen_decompose(A, x, law.labels);
  if (!dec.semisimple) {
    AxisVerdict v{};
    v.dec = std::move(dec);
    v.kind = AxisVerdict::NotAxis;
    v.witness = "not semisimple over the session field (residual dimension " +
                std::to_string(v.dec.residual_dim) + ")";
    return v;
  }
  FusionLaw actual = fusion_law(A, x, dec);
  return is_axis_precomputed(A, x, law, dec, actual);
}

std::optional<Z2Grading> z2_grading(const FusionLaw& law) {
  int m = int(law.labels.size());
  std::vector<int> movable;
  for (int i = 0; i < m; ++i)
    if (!law.labels[i].is_one() && !law.labels[i].is_zero()) movable.push_back(i);
  auto valid = [&](const std::set<int>& minus) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        bool oi = minus.count(i), oj = minus.count(j);
        for (int k : law.table[i][j]) {
          bool ok = minus.count(k);
          if (ok != (oi ^ oj)) return false;
        }
      }
    return true;
  };
  std::optional<Z2Grading> best;
  size_t nsub = size_t(1) << movable.size();
  for (size_t mask = 0; mask < nsub; ++mask) {
    std::set<int> minus;
    for (size_t b = 0; b < movable.size(); ++b)
      if ((mask >> b) & 1) minus.insert(movable[b]);
    if (!valid(minus)) continue;
    if (!best || minus.size() > best->minus.size()) {
      Z2Grading g;
      g.minus = minus;
      for (int i = 0; i < m; ++i)
        if (!minus.count(i)) g.plus.insert(i);
      best = std::move(g);
    }
  }
  return best;
}

FusionLaw toral_law_pattern(const std::vector<Scalar>& nontrivial) {
  FusionLaw law;
  law.labels.push_back(Scalar(1));
  law.labels.push_back(Scalar(0));
  for (const Scalar& a : nontrivial) law.labels.push_back(a);
  int m = int(law.labels.size());
  law.table.assign(m, std::vector<std::set<int>>(m));
  std::set<int> all_a;
  for (int j = 2; j < m; ++j) all_a.insert(j);
  law.table[0][0] = {0};
  law.table[1][1] = {1};
  for (int j = 2; j < m; ++j) {
    law.table[0][j] = law.table[j][0] = {j};
    law.table[1][j] = law.table[j][1] = all_a;
    for (int k = 2; k < m; ++k) law.table[j][k] = (j == k) ? std::set<int>{0, 1} : std::set<int>{1};
  }
  return law;
}

FusionLaw small_idempotent_law_pattern(const Scalar& lambda, const Scalar& mu,
                                       const Scalar& b) {
  FusionLaw law;
  Scalar half(frac(1, 2)), quarter(frac(1, 4));
  // 0:1  1:0  2:lambda  3:lambda-1/2  4:nu+  5:nu-
  law.labels = {Scalar(1), Scalar(0), lambda, lambda - half, quarter + mu * b,
                quarter - mu * b};
  law.table.assign(6, std::vector<std::set<int>>(6));
  auto set = [&](int i, int j, std::set<int> v) { law.table[i][j] = law.table[j][i] = v; };
  set(0, 0, {0});
  set(0, 2, {2});
  set(0, 3, {3});
  set(0, 4, {4});
  set(0, 5, {5});
  set(1, 1, {1});
  set(1, 4, {4});
  set(1, 5, {5});
  set(2, 2, {0, 2, 3});
  set(2, 4, {5});
  set(2, 5, {4});
  set(3, 3, {0, 3});
  set(3, 4, {4});
  set(3, 5, {5});
  set(4, 4, {0, 1, 2, 3, 4, 5});
  set(4, 5, {1, 2});
  set(5, 5, {0, 1, 2, 3, 4, 5});
  return law;
}

bool law_contained_in(const FusionLaw& law, const FusionLaw& pattern) {
  for (size_t i = 0; i < law.labels.size(); ++i)
    for (size_t j = 0; j < law.labels.size(); ++j) {
      // allowed values: union of pattern entries over all label pairs whose
      // values match (handles merged labels)
      std::set<Scalar, ScalarKeyLess> allowed;
      bool pair_found = false;
      for (size_t p = 0; p < pattern.labels.size(); ++p) {
        if (pattern.labels[p] != law.labels[i]) continue;
        for (size_t q = 0; q < pattern.labels.size(); ++q) {
          if (pattern.labels[q] != law.labels[j]) continue;
          pair_found = true;
          for (int r : pattern.table[p][q]) allowed.insert(pattern.labels[r]);
        }
      }
      if (!pair_found) return false;  // law has a label outside the pattern
      for (int r : law.table[i][j])
        if (!allowed.count(law.labels[r])) return false;
    }
  return true;
}

Mat miyamoto_involution(const CodeAlgebra& A, const EigenDecomposition& dec,
                        const FusionLaw& law, const Z2Grading& grading) {
  if (!dec.semisimple) throw Error(errc::not_semisimple, "involution needs a semisimple axis");
  Mat V(A.dim(), 0);
  std::vector<int> sign;
  for (size_t p = 0; p < dec.pairs.size(); ++p) {
    int li = law.label_index(dec.pairs[p].value);
    bool odd = li >= 0 && grading.minus.count(li);
    for (int c = 0; c < dec.pairs[p].basis.cols(); ++c) sign.push_back(odd ? -1 : 1);
    V = V.hcat(dec.pairs[p].basis);
  }
  auto Vinv = inverse(V);
  if (!Vinv) throw Error(errc::internal, "eigenbasis is singular");
  Mat D(V.cols(), V.cols());
  for (int i = 0; i < V.cols(); ++i) D(i, i) = Scalar(sign[i]);
  Mat tau = V * D * *Vinv;
  if (tau * tau != Mat::identity(A.dim()))
    throw Error(errc::internal, "involution does not square to the identity");
  if (auto w = automorphism_witness(A, tau))
    throw Error(errc::internal, "involution fails to preserve the product on basis pair (" +
                                    A.basis_name(w->first) + ", " + A.basis_name(w->second) +
                                    ")");
  return tau;
}

}  // namespace codealg
