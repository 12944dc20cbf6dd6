#pragma once

#include <string>

#include "cellkit/laurent.hpp"
#include "cellkit/perm.hpp"
#include "cellkit/tableau.hpp"
#include "cellkit/tl.hpp"

#include "json.hpp"

namespace cellkit {

// Accepts compact digits ("426153"), the comma form ("10,2,3,..."), and the
// reduced-word form "w:1,2,1" (rank from n_hint, or max letter + 1).
Permutation parse_perm(const std::string& text, int n_hint = -1);

std::string laurent_str(const Laurent& p, const std::string& var = "v");
nlohmann::json laurent_json(const Laurent& p);  // [[exp, coeff], ...], ascending
Laurent laurent_from_json(const nlohmann::json& j);

std::string tableau_ascii(const StandardTableau& t);
nlohmann::json tableau_json(const StandardTableau& t);
StandardTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json tl_json(const TLDiagram& d);

}  // namespace cellkit
