#include "codealg/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace codealg {
namespace fixtures {

const char* const kNames[3] = {"f2sq", "even3", "hamming8"};

LinearCode f2sq_code() { return LinearCode::from_generators({"10", "01"}); }

LinearCode even3_code() { return LinearCode::from_generators({"011", "101"}); }

LinearCode hamming8_code() {
  return LinearCode::from_generators(
      {"11111111", "00001111", "00110011", "01010101"});
}

CodeAlgebra f2sq_algebra() {
  return build_constant_algebra(f2sq_code(), Scalar(-1), Scalar(1), Scalar(-1));
}

CodeAlgebra even3_algebra() {
  return build_constant_algebra(even3_code(), Scalar(frac(1, 2)), Scalar(frac(1, 2)),
                                Scalar(1));
}

CodeAlgebra hamming8_algebra() {
  return build_constant_algebra(hamming8_code(), Scalar(frac(1, 4)), Scalar(frac(1, 2)),
                                Scalar(1));
}

namespace {

struct AxisAnalysis {
  json report;
  std::vector<Mat> involutions;  // aligned with the axes
};

AxisAnalysis analyze_axes(const CodeAlgebra& A, const std::vector<Element>& axes,
                          const FusionLaw& expected_pattern) {
  AxisAnalysis out;
  json& j = out.report;
  j["count"] = axes.size();
  bool all_primitive = true, all_in_pattern = true, all_seress = true, spectra_exact = true;
  std::set<Scalar, ScalarKeyLess> expected_values(expected_pattern.labels.begin(),
                                                  expected_pattern.labels.end());
  for (const auto& x : axes) {
    EigenDecomposition dec = eigen_decompose(A, x, expected_pattern.labels);
    FusionLaw law = fusion_law(A, x, dec);
    auto verdict = is_axis_precomputed(A, x, law, dec, law);
    if (verdict.kind != AxisVerdict::PrimitiveAxis) all_primitive = false;
    if (!law_contained_in(law, expected_pattern)) all_in_pattern = false;
    if (!seress_check(law)) all_seress = false;
    std::set<Scalar, ScalarKeyLess> values;
    for (const Scalar& s : dec.spectrum()) values.insert(s);
    if (values != expected_values) spectra_exact = false;
    auto grading = z2_grading(law);
    if (!grading || grading->minus.empty())
      throw Error(errc::no_grading, "axis without a nontrivial grading");
    out.involutions.push_back(miyamoto_involution(A, dec, law, *grading));
  }
  j["spectrum"] = scalar_list_json(expected_pattern.labels);
  j["spectra_exact"] = spectra_exact;
  j["all_primitive"] = all_primitive;
  j["laws_in_pattern"] = all_in_pattern;
  j["seress"] = all_seress;
  auto gen = axial_generation_check(A, axes);
  j["rank"] = gen.span_dim;
  j["one_closed"] = gen.one_closed;
  j["generates"] = gen.generates;
  return out;
}

bool mutually_orthogonal(const CodeAlgebra& A, const std::vector<Element>& xs) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (!vec_is_zero(A.multiply(xs[i], xs[j]))) return false;
  return true;
}

json run_f2sq() {
  json out;
  out["name"] = "f2sq";
  CodeAlgebra A = f2sq_algebra();
  out["summary"] = algebra_report(A);

  // the two ideals annihilate each other and are orthogonal for the form
  auto simp = is_simple(A);
  auto frob = frobenius_form(A);
  bool annihilate = true, orthogonal = true;
  for (int r1 = 0; r1 < simp.ideals[0].basis.rows(); ++r1)
    for (int r2 = 0; r2 < simp.ideals[1].basis.rows(); ++r2) {
      Vec v1 = simp.ideals[0].basis.row(r1), v2 = simp.ideals[1].basis.row(r2);
      if (!vec_is_zero(A.multiply(v1, v2))) annihilate = false;
      if (!frob.form->eval(A, v1, v2).is_zero()) orthogonal = false;
    }
  out["ideals_annihilate"] = annihilate;
  out["ideals_form_orthogonal"] = orthogonal;

  // small idempotents for alpha = (1,0) and their stated eigenvector
  word alpha = word_from_str("10");
  auto small = small_idempotents(A, alpha);
  out["small"] = json{{"lambda", small.lambda.str()},
                      {"mu", small.mu.str()},
                      {"extension_disc", small.extension_disc}};
  Scalar a = A.params().a(0, alpha), c = A.params().c(0, alpha);
  Scalar eigv = (Scalar(1) - a) / (Scalar(2) * a);
  bool eigvec_ok = true;
  for (int sign : {+1, -1}) {
    const Element& e = sign > 0 ? small.plus : small.minus;
    Scalar mu = sign > 0 ? small.mu : -small.mu;
    Vec v = A.zero();
    v[0] = Scalar(2) * mu * c;  // 2 mu c t_alpha - e^alpha
    v[A.codeword_index(alpha)] = Scalar(-1);
    if (A.multiply(e, v) != vec_scale(eigv, v)) eigvec_ok = false;
  }
  out["small"]["eigenvalue"] = eigv.str();
  out["small"]["eigenvector_check"] = eigvec_ok;

  // 2-dimensional subalgebra <t_1, e^alpha>: closed-form idempotents via the
  // quadratic formula, and the axial check at a = -1, c < 0
  int ia = A.codeword_index(alpha);
  std::vector<Element> idems;  // nonzero idempotents p t_1 + q e^alpha
  {
    Element t1 = A.basis_element(0);
    idems.push_back(t1);
    Scalar lam = (Scalar(2) * a).inv();
    Scalar q2 = (lam - lam * lam) / c;
    if (auto q = sqrt_in_field(q2, A.session_disc() != 1 ? A.session_disc()
                                                         : choose_discriminant(q2.rat()))) {
      for (int sign : {+1, -1}) {
        Element e = A.zero();
        e[0] = lam;
        e[ia] = sign > 0 ? *q : -*q;
        idems.push_back(e);
      }
    }
  }
  for (const auto& e : idems)
    if (A.multiply(e, e) != e) throw Error(errc::internal, "f2sq subalgebra idempotent check");
  out["subalgebra"] = json{{"idempotent_count", idems.size()}};

  // fusion laws inside the 2-dim subalgebra: t_1 has spectrum {1, a} with
  // a*a = {1}; e_pm are axes for the same law exactly when a = -1
  {
    bool axial = true;
    Scalar eta = (Scalar(1) - a) / (Scalar(2) * a);
    if (eta != a) axial = false;
    for (size_t s = 1; s < idems.size(); ++s) {
      const Element& e = idems[s];
      Scalar mu = e[ia];
      Vec v = A.zero();
      v[0] = Scalar(2) * mu * c;
      v[ia] = Scalar(-1);
      // v spans the eta-eigenspace inside the subalgebra; the law matches
      // t_1's iff v*v lands back in <e>
      Vec vv = A.multiply(v, v);
      Vec scaled_e = vec_scale(vv[0] / e[0], e);
      if (vv != scaled_e) axial = false;
    }
    out["subalgebra"]["axial"] = axial;
    out["subalgebra"]["three_idempotents"] = idems.size() == 3;
  }
  return out;
}

json run_even3(size_t orbit_bound) {
  json out;
  out["name"] = "even3";
  CodeAlgebra A = even3_algebra();
  out["summary"] = algebra_report(A);

  FusionLaw jordan_half = toral_law_pattern({Scalar(frac(1, 2))});

  // 6 small idempotents (1/2) t_alpha +- (1/2) e^alpha
  std::vector<Element> small_axes;
  json small;
  for (word alpha : A.cstar()) {
    auto s = small_idempotents(A, alpha);
    small["lambda"] = s.lambda.str();
    small["mu"] = s.mu.str();
    small_axes.push_back(s.plus);
    small_axes.push_back(s.minus);
    // closed-form spectrum agrees with the generic solver by construction
    small_idempotent_spectrum(A, alpha, s.plus);
  }
  small["count"] = small_axes.size();
  out["small_idempotents"] = small;

  // s(C, v) idempotents from the full code
  auto smaps = enumerate_smap(A, A.code());
  json sj;
  sj["distinct_both_roots"] = smaps.size();
  sj["lambda"] = smaps[0].spec.lambda.str();
  sj["mu"] = smaps[0].spec.mu.str();
  std::vector<Element> s_axes;
  for (const auto& r : smaps)
    if (r.spec.root == Root::Plus) s_axes.push_back(r.idem);
  sj["count_per_root"] = s_axes.size();
  out["smap_full"] = sj;

  // 13 axes: 3 toral + 6 small + 4 s-map
  std::vector<Element> axes13;
  for (int i = 0; i < 3; ++i) axes13.push_back(A.basis_element(i));
  for (const auto& x : small_axes) axes13.push_back(x);
  for (const auto& x : s_axes) axes13.push_back(x);
  auto analysis = analyze_axes(A, axes13, jordan_half);
  out["axes13"] = analysis.report;

  // the 9-axis subset (toral + small) is closed; all 13 grow past the bound
  std::vector<Element> axes9(axes13.begin(), axes13.begin() + 9);
  std::vector<Mat> taus9(analysis.involutions.begin(), analysis.involutions.begin() + 9);
  auto orbit9 = axis_orbit(A, axes9, orbit_bound, &taus9);
  out["orbit9"] = json{{"closed", orbit9.closed}, {"count", orbit9.count}};
  auto orbit13 = axis_orbit(A, axes13, orbit_bound, &analysis.involutions);
  out["orbit13"] =
      json{{"closed", orbit13.closed}, {"exceeded_bound", !orbit13.closed}, {"bound", orbit_bound}};

  // isomorphism onto 3x3 symmetric matrices under x o y = (xy + yx)/2:
  // t_i -> E_ii, e^alpha -> E_ij + E_ji for supp(alpha) = {i, j}
  {
    auto embed = [&](int idx) {
      Mat M(3, 3);
      if (idx < 3) {
        M(idx, idx) = Scalar(1);
      } else {
        word alpha = A.codeword_at(idx);
        std::vector<int> sup;
        for (int i = 0; i < 3; ++i)
          if (get_bit(alpha, i)) sup.push_back(i);
        M(sup[0], sup[1]) = Scalar(1);
        M(sup[1], sup[0]) = Scalar(1);
      }
      return M;
    };
    Scalar half(frac(1, 2));
    bool iso = true;
    for (int i = 0; i < A.dim() && iso; ++i)
      for (int j = 0; j < A.dim() && iso; ++j) {
        Mat lhs(3, 3);
        for (const auto& [k, s] : A.basis_product(i, j)) {
          Mat m = embed(k);
          for (int r = 0; r < 3; ++r)
            for (int cc = 0; cc < 3; ++cc) lhs(r, cc) += s * m(r, cc);
        }
        Mat prod = embed(i) * embed(j) + embed(j) * embed(i);
        for (int r = 0; r < 3; ++r)
          for (int cc = 0; cc < 3; ++cc) prod(r, cc) *= half;
        if (lhs != prod) iso = false;
      }
    out["symmetric_matrix_isomorphism"] = iso;
  }
  return out;
}

json run_hamming8(size_t orbit_bound) {
  json out;
  out["name"] = "hamming8";
  CodeAlgebra A = hamming8_algebra();
  out["summary"] = algebra_report(A);

  // code facts: self-dual, constant weight 4, RM(1,3)
  out["code"] = json();
  out["code"]["self_dual"] = dual_code(A.code()) == A.code();
  auto cw = is_constant_weight(A.code());
  out["code"]["constant_weight"] = cw.weight;
  auto cls = classify_constant_weight(A.code());
  out["code"]["classification"] =
      json{{"kind", cls.kind == ConstWeightClass::ReedMullerJuxtaposition ? "reed-muller"
                                                                          : "simplex"},
           {"m", cls.m},
           {"r", cls.r}};
  out["code"]["projective"] = is_projective(A.code());

  // the VOA preset with lambda = 1/2 gives exactly these parameters
  out["voa_preset_matches"] =
      StructureParams::voa(A.code(), Scalar(frac(1, 2))).a_map() == A.params().a_map();

  // 16 s(C, v) idempotents, split into two tori by the parity of v
  auto reps = coset_reps(A.code());
  std::vector<Element> odd_torus, even_torus, s_axes;
  Scalar lam, mu;
  for (word v : reps) {
    auto r = smap_idempotent(A, A.code(), v, Root::Plus);
    lam = r.spec.lambda;
    mu = r.spec.mu;
    (weight(v) % 2 ? odd_torus : even_torus).push_back(r.idem);
    s_axes.push_back(r.idem);
  }
  json sj;
  sj["count"] = s_axes.size();
  sj["lambda"] = lam.str();
  sj["mu"] = mu.str();
  sj["odd_torus"] = odd_torus.size();
  sj["even_torus"] = even_torus.size();
  sj["odd_torus_orthogonal"] = mutually_orthogonal(A, odd_torus);
  sj["even_torus_orthogonal"] = mutually_orthogonal(A, even_torus);
  out["smap"] = sj;

  // 24 axes: the standard torus plus both s-map tori
  std::vector<Element> axes;
  for (int i = 0; i < A.n(); ++i) axes.push_back(A.basis_element(i));
  for (const auto& x : s_axes) axes.push_back(x);
  FusionLaw jordan_quarter = toral_law_pattern({Scalar(frac(1, 4))});
  auto analysis = analyze_axes(A, axes, jordan_quarter);
  out["axes"] = analysis.report;

  EigenDecomposition t1 = toral_peirce(A, 0);
  out["toral_peirce_dims"] = json::array();
  for (const auto& p : t1.pairs) out["toral_peirce_dims"].push_back(p.dim());

  auto orbit = axis_orbit(A, axes, orbit_bound, &analysis.involutions);
  out["orbit"] = json{{"closed", orbit.closed}, {"count", orbit.count}};

  // how many axis involutions are signed monomial maps (the torus-permuting
  // symmetries beyond M:Aut(C) observed in this example)
  {
    int monomial = 0;
    for (const Mat& tau : analysis.involutions) {
      bool mono = true;
      for (int j = 0; j < tau.cols() && mono; ++j) {
        int nnz = 0;
        for (int i = 0; i < tau.rows(); ++i)
          if (!tau(i, j).is_zero()) ++nnz;
        if (nnz != 1) mono = false;
      }
      if (mono) ++monomial;
    }
    out["signed_monomial_involutions"] = monomial;
  }
  return out;
}

}  // namespace

json run_example(const std::string& name, size_t orbit_bound) {
  if (name == "f2sq") return run_f2sq();
  if (name == "even3") return run_even3(orbit_bound);
  if (name == "hamming8") return run_hamming8(orbit_bound);
  throw Error(errc::parse_error, "unknown example '" + name + "' (try f2sq, even3, hamming8)");
}

std::vector<std::string> diff(const json& expected, const json& actual) {
  std::vector<std::string> out;
  std::function<void(const json&, const json&, const std::string&)> walk =
      [&](const json& e, const json& a, const std::string& path) {
        if (e.type() != a.type()) {
          out.push_back(path + ": expected " + e.dump() + ", got " + a.dump());
          return;
        }
        if (e.is_object()) {
          for (auto it = e.begin(); it != e.end(); ++it) {
            if (!a.contains(it.key()))
              out.push_back(path + "/" + it.key() + ": missing");
            else
              walk(it.value(), a[it.key()], path + "/" + it.key());
          }
          for (auto it = a.begin(); it != a.end(); ++it)
            if (!e.contains(it.key())) out.push_back(path + "/" + it.key() + ": unexpected");
        } else if (e.is_array()) {
          if (e.size() != a.size()) {
            out.push_back(path + ": size " + std::to_string(e.size()) + " vs " +
                          std::to_string(a.size()));
            return;
          }
          for (size_t i = 0; i < e.size(); ++i)
            walk(e[i], a[i], path + "/" + std::to_string(i));
        } else if (e != a) {
          out.push_back(path + ": expected " + e.dump() + ", got " + a.dump());
        }
      };
  walk(expected, actual, "");
  return out;
}

#include "fixtures_golden.inc"

std::string golden(const std::string& name) {
  if (name == "f2sq") return kGoldenF2sq;
  if (name == "even3") return kGoldenEven3;
  if (name == "hamming8") return kGoldenHamming8;
  return "";
}

}  // namespace fixtures
}  // namespace codealg
