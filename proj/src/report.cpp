#include "codealg/report.hpp"

#include <sstream>

namespace codealg {

json scalar_list_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json element_json(const Element& x) {
  json out = json::array();
  for (const auto& s : x) out.push_back(s.str());
  return out;
}

json spectrum_json(const EigenDecomposition& dec) {
  json out;
  out["eigenvalues"] = json::array();
  out["dims"] = json::array();
  for (const auto& p : dec.pairs) {
    out["eigenvalues"].push_back(p.value.str());
    out["dims"].push_back(p.dim());
  }
  out["semisimple"] = dec.semisimple;
  if (!dec.semisimple) out["residual_dim"] = dec.residual_dim;
  return out;
}

json fusion_law_json(const FusionLaw& law) {
  json out;
  out["labels"] = scalar_list_json(law.labels);
  json table = json::array();
  for (size_t i = 0; i < law.labels.size(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < law.labels.size(); ++j) {
      json cell = json::array();
      for (int k : law.table[i][j]) cell.push_back(law.labels[k].str());
      row.push_back(cell);
    }
    table.push_back(row);
  }
  out["table"] = table;
  return out;
}

json algebra_report(const CodeAlgebra& A) {
  json out;
  out["n"] = A.n();
  out["k"] = A.code().dim();
  out["code_size"] = A.code().size();
  out["cstar_count"] = A.cstar().size();
  out["dim"] = A.dim();
  if (A.session_disc() != 1) out["field"] = "Q(sqrt(" + std::to_string(A.session_disc()) + "))";

  auto nd = is_nondegenerate(A);
  out["nondegenerate"] = nd.ok;
  if (!nd.ok) out["nondegenerate_failures"] = nd.reasons;

  auto id = identity_element(A);
  out["unital"] = id.identity.has_value();

  if (nd.ok) {
    auto simp = is_simple(A);
    out["simple"] = simp.simple;
    if (!simp.simple) {
      json ideals = json::array();
      for (const auto& I : simp.ideals) {
        json ij;
        ij["dim"] = I.dim;
        json rows = json::array();
        for (int r = 0; r < I.basis.rows(); ++r) rows.push_back(element_json(I.basis.row(r)));
        ij["basis"] = rows;
        ideals.push_back(ij);
      }
      out["ideals"] = ideals;
    }

    auto frob = frobenius_form(A);
    json fj;
    fj["exists"] = frob.ok();
    if (frob.ok()) {
      fj["toral_diag"] = scalar_list_json(frob.form->lambda_toral);
      std::vector<Scalar> diag;
      for (word alpha : A.cstar()) diag.push_back(frob.form->lambda_codeword.at(alpha));
      fj["codeword_diag"] = scalar_list_json(diag);
      if (frob.exceptional_case) fj["exceptional_case"] = true;
      try {
        fj["positive_definite"] = positive_definite(A, *frob.form);
      } catch (const Error&) {
        fj["positive_definite"] = nullptr;  // unordered field
      }
    } else {
      fj["failure"] = (frob.status == FrobeniusOutcome::Status::ConditionOneFails
                           ? "condition 1: "
                           : "condition 2: ") +
                      frob.witness;
    }
    out["frobenius"] = fj;

    try {
      auto M = miyamoto_group(A);
      json gj;
      gj["miyamoto_order"] = M.order;
      gj["kernel_dim"] = M.kernel.dim();
      if (A.n() <= 12) {
        auto G = full_group(A);
        gj["aut_order"] = G.code_autos.size();
        gj["order"] = G.order;
      }
      out["group"] = gj;
    } catch (const Error& e) {
      out["group"] = json{{"error", e.what()}};
    }
  } else {
    out["simple"] = nullptr;
    out["frobenius"] = json{{"skipped", "degenerate algebra"}};
  }
  return out;
}

json element_report(const CodeAlgebra& A, const Element& x, const std::vector<Scalar>& hints) {
  json out;
  out["element"] = element_json(x);
  out["idempotent"] = A.multiply(x, x) == x;
  EigenDecomposition dec = eigen_decompose(A, x, hints);
  out["spectrum"] = spectrum_json(dec);
  if (dec.semisimple) {
    FusionLaw law = fusion_law(A, x, dec);
    out["fusion_law"] = fusion_law_json(law);
    try {
      out["seress"] = seress_check(law);
    } catch (const Error&) {
      out["seress"] = nullptr;  // labels 1 or 0 missing
    }
    auto verdict = is_axis(A, x, law);
    out["axis"] = verdict.kind == AxisVerdict::PrimitiveAxis ? "primitive-axis"
                  : verdict.kind == AxisVerdict::Axis        ? "axis"
                                                             : "not-axis: " + verdict.witness;
    auto grading = z2_grading(law);
    if (grading && !grading->minus.empty()) {
      std::vector<Scalar> minus;
      for (int i : grading->minus) minus.push_back(law.labels[i]);
      out["z2_minus_part"] = scalar_list_json(minus);
    } else {
      out["z2_minus_part"] = json::array();
    }
  }
  return out;
}

namespace {

void render(const json& j, int indent, std::ostringstream& os) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value()[0].is_object() || it.value()[0].is_array()))) {
        os << pad << it.key() << ":\n";
        render(it.value(), indent + 2, os);
      } else {
        os << pad << it.key() << ": " << (it.value().is_string()
                                              ? it.value().get<std::string>()
                                              : it.value().dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render(v, indent + 2, os);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& j, int indent) {
  std::ostringstream os;
  render(j, indent, os);
  return os.str();
}

}  // namespace codealg
