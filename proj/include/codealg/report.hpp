#pragma once

#include <json.hpp>

#include "codealg/form.hpp"
#include "codealg/group.hpp"
#include "codealg/smap.hpp"
#include "codealg/structure.hpp"

namespace codealg {

using json = nlohmann::json;

json scalar_list_json(const std::vector<Scalar>& v);
json element_json(const Element& x);
json spectrum_json(const EigenDecomposition& dec);
json fusion_law_json(const FusionLaw& law);

// Summary used by `report`: dimensions, non-degeneracy, identity, simplicity,
// Frobenius existence, group orders.
json algebra_report(const CodeAlgebra& A);

// Spectrum/fusion/axis analysis of one element, used by `spectrum`.
json element_report(const CodeAlgebra& A, const Element& x,
                    const std::vector<Scalar>& hints = {});

// Plain-text rendering of a report tree (fusion laws as grids).
std::string render_text(const json& j, int indent = 0);

}  // namespace codealg
