#pragma once

// Textual and JSON forms of the domain types, shared by the CLI and tests.

#include <string>
#include <string_view>

#include "json.hpp"
#include "kschur/affine.hpp"
#include "kschur/core.hpp"
#include "kschur/cylindric.hpp"
#include "kschur/polytope.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tableau.hpp"

namespace kschur {

// Comma-separated residues, e.g. "2,1,0,2"; empty string is the empty word.
std::vector<int> parse_word(std::string_view text);

// "n,m:[a,b,...]"
CylindricShape parse_cylindric(std::string_view text);

// Inclusive integer range "a..b" or a single value "a".
std::pair<int, int> parse_range(std::string_view text);

// Tableau rows bottom-to-top: "[[1,1,1,2],[2,2,3,3],...]".
std::string rows_to_string(const std::vector<std::vector<int>>& rows);

nlohmann::json to_json(const MonExpansion& f);
nlohmann::json to_json(const BasisCoeffs& bc);
nlohmann::json to_json(const CoreConstruction& cc);
nlohmann::json to_json(const KTableau& t);
nlohmann::json to_json(const Support& s);

}  // namespace kschur
