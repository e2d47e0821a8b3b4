#include "codealg/smap.hpp"

#include <algorithm>
#include <set>

namespace codealg {

namespace {

struct ConstantOnD {
  Scalar a, b, c;
  bool has_b;
};

ConstantOnD constant_params_on(const CodeAlgebra& A, const LinearCode& D,
                               const std::vector<word>& dstar) {
  ConstantOnD out{Scalar(0), Scalar(0), Scalar(0), false};
  bool first = true;
  for (word alpha : dstar)
    for (int i = 0; i < A.n(); ++i) {
      if (!get_bit(alpha, i)) continue;
      const Scalar& a = A.params().a(i, alpha);
      const Scalar& c = A.params().c(i, alpha);
      if (first) {
        out.a = a;
        out.c = c;
        first = false;
      } else if (a != out.a || c != out.c) {
        throw Error(errc::params_not_constant,
                    "a or c varies on D* at (" + std::to_string(i + 1) + ", " +
                        word_str(alpha, A.n()) + ")");
      }
    }
  word ones = D.all_ones();
  bool complements = D.has_all_ones();
  for (size_t p = 0; p < dstar.size(); ++p)
    for (size_t q = p + 1; q < dstar.size(); ++q) {
      if (complements && dstar[q] == (dstar[p] ^ ones)) continue;
      const Scalar& b = A.params().b(dstar[p], dstar[q]);
      if (!out.has_b) {
        out.b = b;
        out.has_b = true;
      } else if (b != out.b) {
        throw Error(errc::params_not_constant,
                    "b varies on D* at (" + word_str(dstar[p], A.n()) + ", " +
                        word_str(dstar[q], A.n()) + ")");
      }
    }
  return out;
}

// sqrt of delta in the session field, auto-extending from plain Q; the
// extension discriminant is reported in *ext
Scalar field_sqrt_or_extend(const Scalar& delta, long session, long* ext) {
  *ext = 1;
  if (auto r = sqrt_in_field(delta, session)) return *r;
  if (session == 1 && delta.is_rational()) {
    long d = choose_discriminant(delta.rat());
    if (auto r = sqrt_in_field(delta.rat(), d)) {
      *ext = d;
      return *r;
    }
  }
  throw Error(errc::no_root_in_field,
              "sqrt(" + delta.str() + ") does not exist in the session field" +
                  (session != 1 ? " Q(sqrt(" + std::to_string(session) + "))" : " Q"));
}

}  // namespace

SMapResult smap_idempotent(const CodeAlgebra& A, const LinearCode& D, word v, Root root) {
  if (!D.is_subcode_of(A.code())) throw Error(errc::not_a_subcode, "D is not a subcode of C");
  auto dstar = D.nonconstant_words();
  if (dstar.empty()) throw Error(errc::empty_cstar, "D* is empty");
  auto cw = is_constant_weight(D);
  if (!cw.constant) throw Error(errc::not_constant_weight, "D is not constant weight");

  SMapSpec spec;
  spec.D = D;
  spec.v = v;
  spec.root = root;
  spec.d = cw.weight;
  spec.m = weight(D.support());
  spec.dstar = dstar.size();
  spec.e = 2 * long(dstar.size()) - long(D.size());

  ConstantOnD P = constant_params_on(A, D, dstar);
  Scalar a = P.a, b = P.b, c = P.c;
  Scalar e(long(spec.e)), d(spec.d);
  Scalar ad = a * d;

  Scalar qa = b * b * e * e +
              Scalar(4) * a * a * c * Scalar(long(spec.dstar)) *
                  Scalar(frac(long(spec.d) * long(spec.d) * long(spec.d), spec.m));
  Scalar qb = Scalar(2) * b * e * (ad - Scalar(1));
  Scalar qc = Scalar(1) - Scalar(2) * ad;

  Scalar mu;
  if (qa.is_zero()) {
    if (qb.is_zero())
      throw Error(errc::no_root_in_field, "degenerate quadratic for mu has no isolated root");
    mu = -qc / qb;
  } else {
    Scalar delta = qb * qb - Scalar(4) * qa * qc;
    Scalar sq = field_sqrt_or_extend(delta, A.session_disc(), &spec.extension_disc);
    mu = (root == Root::Plus ? -qb + sq : -qb - sq) / (Scalar(2) * qa);
  }
  if (mu.is_zero())
    throw Error(errc::degenerate_mu_zero, "mu = 0: s(D, v) degenerates to t_D");
  spec.mu = mu;
  spec.lambda = (Scalar(1) - b * e * mu) / (Scalar(2) * ad);

  SMapResult res;
  res.spec = spec;
  res.idem = A.zero();
  word supp = D.support();
  for (int i = 0; i < A.n(); ++i)
    if (get_bit(supp, i)) res.idem[i] = spec.lambda;
  for (word alpha : dstar) {
    int idx = A.codeword_index(alpha);
    res.idem[idx] = dot2(v, alpha) ? -mu : mu;
  }
  if (A.multiply(res.idem, res.idem) != res.idem)
    throw Error(errc::internal, "s(D, v) fails the idempotency check");
  return res;
}

std::vector<SMapResult> enumerate_smap(const CodeAlgebra& A, const LinearCode& D) {
  std::vector<SMapResult> out;
  std::set<Element, VecKeyLess> seen;
  for (Root root : {Root::Plus, Root::Minus}) {
    for (word v : coset_reps(D)) {
      SMapResult r = smap_idempotent(A, D, v, root);
      if (seen.insert(r.idem).second) out.push_back(std::move(r));
    }
  }
  return out;
}

SmallIdempotents small_idempotents(const CodeAlgebra& A, word alpha) {
  if (!A.code().contains(alpha) || alpha == 0 || alpha == A.code().all_ones())
    throw Error(errc::not_a_subcode, "alpha must lie in C*");
  int w = weight(alpha);
  std::optional<Scalar> a, c;
  for (int i = 0; i < A.n(); ++i) {
    if (!get_bit(alpha, i)) continue;
    const Scalar& ai = A.params().a(i, alpha);
    const Scalar& ci = A.params().c(i, alpha);
    if (!a) {
      a = ai;
      c = ci;
    } else if (ai != *a || ci != *c) {
      throw Error(errc::params_not_constant, "a or c varies over supp(alpha)");
    }
  }
  Scalar two_aw = Scalar(2) * *a * Scalar(w);
  if (two_aw.is_one())
    throw Error(errc::degenerate_half_case,
                "a = 1/(2|alpha|): e_pm degenerates to t_alpha");
  SmallIdempotents out;
  out.lambda = two_aw.inv();
  Scalar mu2 = (out.lambda - out.lambda * out.lambda) / *c;
  out.mu = field_sqrt_or_extend(mu2, A.session_disc(), &out.extension_disc);
  if (out.mu.is_zero()) throw Error(errc::degenerate_mu_zero, "mu = 0");

  Element base = A.zero();
  for (int i = 0; i < A.n(); ++i)
    if (get_bit(alpha, i)) base[i] = out.lambda;
  int idx = A.codeword_index(alpha);
  out.plus = base;
  out.plus[idx] = out.mu;
  out.minus = base;
  out.minus[idx] = -out.mu;
  for (const Element* e : {&out.plus, &out.minus})
    if (A.multiply(*e, *e) != *e)
      throw Error(errc::internal, "small idempotent fails the idempotency check");
  return out;
}

EigenDecomposition small_idempotent_spectrum(const CodeAlgebra& A, word alpha,
                                             const Element& e) {
  auto cw = is_constant_weight(A.code());
  if (!cw.constant)
    throw Error(errc::not_constant_weight, "closed-form spectrum needs a constant-weight code");
  int w = weight(alpha);
  int idx_a = A.codeword_index(alpha);
  if (e[idx_a].is_zero()) throw Error(errc::internal, "e has no e^alpha component");
  const Scalar& mu = e[idx_a];
  // hypotheses: a and c constant per codeword, a shared across the pairs used
  for (word beta : A.cstar()) {
    std::optional<Scalar> ab, cb;
    for (int i = 0; i < A.n(); ++i) {
      if (!get_bit(beta, i)) continue;
      if (!ab) {
        ab = A.params().a(i, beta);
        cb = A.params().c(i, beta);
      } else if (A.params().a(i, beta) != *ab || A.params().c(i, beta) != *cb) {
        throw Error(errc::params_not_constant, "a or c varies over supp(" +
                                                   word_str(beta, A.n()) + ")");
      }
    }
  }
  Scalar a = A.params().a(__builtin_ctzll(alpha), alpha);
  Scalar c = A.params().c(__builtin_ctzll(alpha), alpha);
  Scalar lambda = (Scalar(2) * a * Scalar(w)).inv();
  if ((Scalar(2) * lambda - Scalar(3)).is_zero())
    throw Error(errc::degenerate_third_case,
                "a = 1/(3|alpha|): the (lambda - 1/2)-eigenvector collapses into <e>");

  // eigenvalue 1: e itself; 0: t_i off supp and e^{alpha^c}; lambda: toral
  // differences on supp; lambda - 1/2: 2 mu c t_alpha - e^alpha;
  // nu_pm = a_beta/(4 a_alpha) pm mu b_{alpha,beta}: e^beta pm e^{alpha+beta}
  std::map<Scalar, std::vector<Vec>, ScalarKeyLess> spaces;
  spaces[Scalar(1)].push_back(e);
  for (int i = 0; i < A.n(); ++i)
    if (!get_bit(alpha, i)) spaces[Scalar(0)].push_back(A.basis_element(i));
  word ac = alpha ^ A.code().all_ones();
  if (A.code().has_all_ones())
    spaces[Scalar(0)].push_back(A.basis_element(A.codeword_index(ac)));
  int prev = -1;
  for (int i = 0; i < A.n(); ++i) {
    if (!get_bit(alpha, i)) continue;
    if (prev >= 0) {
      Vec v = A.zero();
      v[prev] = Scalar(1);
      v[i] = Scalar(-1);
      spaces[lambda].push_back(std::move(v));
    }
    prev = i;
  }
  {
    Vec v = A.zero();
    for (int i = 0; i < A.n(); ++i)
      if (get_bit(alpha, i)) v[i] = Scalar(2) * mu * c;
    v[idx_a] = Scalar(-1);
    spaces[lambda - Scalar(mpq_class(1, 2))].push_back(std::move(v));
  }
  std::set<word> done;
  for (word beta : A.cstar()) {
    if (beta == alpha || (A.code().has_all_ones() && beta == ac)) continue;
    word pair = alpha ^ beta;
    if (done.count(beta) || done.count(pair)) continue;
    done.insert(beta);
    done.insert(pair);
    Scalar ab = A.params().a(__builtin_ctzll(beta), beta);
    Scalar bb = A.params().b(alpha, beta);
    if (ab != A.params().a(__builtin_ctzll(pair), pair) || bb != A.params().b(alpha, pair))
      throw Error(errc::params_not_constant,
                  "paired eigenvectors need a_beta = a_{alpha+beta} and "
                  "b_{alpha,beta} = b_{alpha,alpha+beta}");
    Scalar base = ab / (Scalar(4) * a);
    int ib = A.codeword_index(beta), ip = A.codeword_index(pair);
    for (int sign : {+1, -1}) {
      Vec v = A.zero();
      v[ib] = Scalar(1);
      v[ip] = Scalar(sign);
      spaces[sign > 0 ? base + mu * bb : base - mu * bb].push_back(std::move(v));
    }
  }

  EigenDecomposition dec;
  int total = 0;
  for (auto& [value, vecs] : spaces) {
    EigenPair p;
    p.value = value;
    p.basis = Mat::from_columns(vecs);
    total += p.basis.cols();
    dec.pairs.push_back(std::move(p));
  }
  if (total != A.dim())
    throw Error(errc::internal, "closed-form eigenvector count mismatch");
  std::sort(dec.pairs.begin(), dec.pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    auto rank = [](const Scalar& v) { return v.is_one() ? 0 : v.is_zero() ? 1 : 2; };
    int ra = rank(a.value), rb = rank(b.value);
    if (ra != rb) return ra < rb;
    return scalar_key_less(a.value, b.value);
  });
  dec.semisimple = true;
  dec.residual_dim = 0;

  // every stated eigenvector must satisfy ad_e v = value v, and the closed
  // form must agree with the generic solver
  Mat ad = A.adjoint(e);
  for (const auto& p : dec.pairs)
    for (int cidx = 0; cidx < p.basis.cols(); ++cidx) {
      Vec v = p.basis.col(cidx);
      if (mat_vec(ad, v) != vec_scale(p.value, v))
        throw Error(errc::internal, "closed-form eigenvector fails ad_e v = lambda v");
    }
  EigenDecomposition generic = eigen_decompose(A, e, dec.spectrum());
  if (!generic.semisimple || generic.pairs.size() != dec.pairs.size())
    throw Error(errc::internal, "closed form disagrees with the generic solver");
  for (size_t i = 0; i < dec.pairs.size(); ++i) {
    if (generic.pairs[i].value != dec.pairs[i].value ||
        !subspace_equal(generic.pairs[i].basis, dec.pairs[i].basis))
      throw Error(errc::internal, "closed-form eigenspace disagrees with the generic solver");
  }
  return dec;
}

GenerationReport axial_generation_check(const CodeAlgebra& A,
                                        const std::vector<Element>& generators) {
  GenerationReport rep;
  RowSpan span(A.dim());
  for (const auto& g : generators) span.add(g);
  rep.span_dim = span.dim();
  rep.one_closed = span.dim() == A.dim();
  // iterate span-closure under multiplication until stable
  std::vector<Vec> frontier;
  for (int r = 0; r < span.basis().rows(); ++r) frontier.push_back(span.basis().row(r));
  while (!frontier.empty() && span.dim() < A.dim()) {
    Mat cur = span.basis();
    std::vector<Vec> next;
    for (const Vec& f : frontier)
      for (int r = 0; r < cur.rows() && span.dim() < A.dim(); ++r) {
        Vec prod = A.multiply(f, cur.row(r));
        if (span.add(prod)) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  rep.closure_dim = span.dim();
  rep.generates = span.dim() == A.dim();
  return rep;
}

}  // namespace codealg
