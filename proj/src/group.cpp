#include "codealg/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace codealg {

word reduce_mod_kernel(const LinearCode& kernel, word v) {
  for (word g : kernel.generators()) {
    word low = g & (~g + 1);
    if (v & low) v ^= g;
  }
  return v;
}

namespace {

LinearCode sign_kernel(const CodeAlgebra& A) {
  // {v : (v, alpha) = 0 for all alpha in C*} = dual of span(C*)
  std::vector<word> gens;
  LinearCode span = LinearCode::zero_code(A.n());
  std::vector<word> basis;
  for (word alpha : A.cstar()) {
    word v = alpha;
    for (word b : basis) {
      word low = b & (~b + 1);
      if (v & low) v ^= b;
    }
    if (v) {
      word low = v & (~v + 1);
      for (auto& b : basis)
        if (b & low) b ^= v;
      basis.push_back(v);
    }
  }
  return dual_code(LinearCode::from_basis(A.n(), basis));
}

void require_grading(const CodeAlgebra& A) {
  for (const auto& [k, v] : A.params().a_map())
    if (v.is_one())
      throw Error(errc::grading_fails,
                  "a[" + std::to_string(k.first + 1) + "," + word_str(k.second, A.n()) +
                      "] = 1: the toral fusion law is not Z2-graded");
}

}  // namespace

SignedMap miyamoto_sign_map(const CodeAlgebra& A, word v) {
  require_grading(A);
  LinearCode K = sign_kernel(A);
  SignedMap m = signed_identity(A.n());
  m.sign_vec = reduce_mod_kernel(K, v);
  if (auto w = automorphism_witness(A, m))
    throw Error(errc::internal, "sign map fails to preserve the product");
  return m;
}

MiyamotoGroup miyamoto_group(const CodeAlgebra& A) {
  require_grading(A);
  MiyamotoGroup M;
  M.kernel = sign_kernel(A);
  int quotient_dim = A.n() - M.kernel.dim();
  if (quotient_dim >= 64) throw Error(errc::too_large, "Miyamoto group too large to count");
  M.order = 1ULL << quotient_dim;
  for (int i = 0; i < A.n(); ++i) {
    SignedMap tau = signed_identity(A.n());
    tau.sign_vec = reduce_mod_kernel(M.kernel, word(1) << i);
    if (auto w = automorphism_witness(A, tau))
      throw Error(errc::internal, "tau_" + std::to_string(i + 1) +
                                      " fails to preserve the product on (" +
                                      A.basis_name(w->first) + ", " + A.basis_name(w->second) +
                                      ")");
    M.generators.push_back(std::move(tau));
  }
  return M;
}

bool signed_map_equal(const LinearCode& kernel, const SignedMap& x, const SignedMap& y) {
  return x.perm == y.perm &&
         reduce_mod_kernel(kernel, x.sign_vec) == reduce_mod_kernel(kernel, y.sign_vec);
}

FullGroup full_group(const CodeAlgebra& A, int aut_max_n) {
  FullGroup G;
  G.m = miyamoto_group(A);
  if (A.n() > aut_max_n)
    throw Error(errc::aut_too_large, "Aut(C) search limited to n <= " + std::to_string(aut_max_n));
  G.code_autos = automorphism_group(A.code(), aut_max_n);
  auto reg = is_regular(A, G.code_autos);
  if (!reg.regular)
    throw Error(errc::not_regular, "parameters are not Aut(C)-regular at " + reg.witness);
  G.order = G.m.order * (unsigned long long)G.code_autos.size();

  G.generators = G.m.generators;
  std::vector<SignedMap> induced;
  for (const Perm& g : G.code_autos) {
    SignedMap m = induced_automorphism(A, g);
    induced.push_back(m);
    G.generators.push_back(std::move(m));
  }

  // conjugation relation tau_i g = g tau_{ig} on all generators (composition
  // reads right to left: tau_i g applies g first)
  for (int i = 0; i < A.n(); ++i) {
    const SignedMap& tau_i = G.m.generators[i];
    for (size_t a = 0; a < G.code_autos.size(); ++a) {
      const Perm& g = G.code_autos[a];
      SignedMap tau_ig = signed_identity(A.n());
      tau_ig.sign_vec = reduce_mod_kernel(G.m.kernel, word(1) << g[i]);
      if (!signed_map_equal(G.m.kernel, compose(induced[a], tau_i),
                            compose(tau_ig, induced[a])))
        throw Error(errc::internal, "conjugation relation tau_i g = g tau_{ig} fails");
    }
  }
  return G;
}

std::vector<SignedMap> enumerate_group(const CodeAlgebra&, const FullGroup& G) {
  std::vector<SignedMap> out;
  std::vector<word> sign_reps = coset_reps(dual_code(G.m.kernel));
  // cosets of the kernel in F2^n are indexed by the dual of the kernel
  out.reserve(sign_reps.size() * G.code_autos.size());
  for (const Perm& g : G.code_autos) {
    SignedMap base;
    base.perm = inverse_perm(g);
    for (word u : sign_reps) {
      SignedMap m = base;
      m.sign_vec = reduce_mod_kernel(G.m.kernel, u);
      out.push_back(std::move(m));
    }
  }
  return out;
}

OrbitResult axis_orbit(const CodeAlgebra& A, const std::vector<Element>& axes, size_t bound,
                       const std::vector<Mat>* initial_involutions) {
  OrbitResult res;
  std::set<Element, VecKeyLess> seen;
  std::vector<Element> list;
  std::vector<std::optional<Mat>> taus;
  std::vector<Scalar> hint_labels;
  std::set<Scalar, ScalarKeyLess> hint_set;

  auto push_axis = [&](const Element& x) {
    if (seen.insert(x).second) {
      list.push_back(x);
      taus.emplace_back();
    }
  };
  for (size_t i = 0; i < axes.size(); ++i) {
    push_axis(axes[i]);
    if (initial_involutions && i < initial_involutions->size() && list.size() == i + 1)
      taus[i] = (*initial_involutions)[i];
  }

  auto involution_of = [&](size_t i) -> Mat {  // by value: taus may reallocate
    if (!taus[i]) {
      EigenDecomposition dec = eigen_decompose(A, list[i], hint_labels);
      if (!dec.semisimple)
        throw Error(errc::no_grading, "axis " + std::to_string(i) + " is not semisimple");
      for (const Scalar& s : dec.spectrum())
        if (hint_set.insert(s).second) hint_labels.push_back(s);
      FusionLaw law = fusion_law(A, list[i], dec);
      auto grading = z2_grading(law);
      if (!grading || grading->minus.empty())
        throw Error(errc::no_grading,
                    "axis " + std::to_string(i) + " has no nontrivial Z2-grading");
      taus[i] = miyamoto_involution(A, dec, law, *grading);
    }
    return *taus[i];
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < list.size(); ++i) {
      Mat tau = involution_of(i);
      for (size_t j = 0; j < list.size(); ++j) {
        Element img = mat_vec(tau, list[j]);
        size_t before = seen.size();
        push_axis(img);
        if (seen.size() != before) {
          changed = true;
          if (seen.size() > bound) {
            res.closed = false;
            res.count = seen.size();
            res.axes = std::move(list);
            return res;
          }
        }
      }
    }
  }
  res.closed = true;
  res.count = seen.size();
  res.axes = std::move(list);
  return res;
}

}  // namespace codealg
