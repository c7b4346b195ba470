#pragma once

#include <string>

#include <json.hpp>

#include "bent/bent_check.hpp"
#include "bent/char_table.hpp"
#include "bent/class_function.hpp"
#include "bent/criteria.hpp"
#include "bent/search.hpp"

namespace bent {

using Json = nlohmann::json;

// Complex numbers are always [re, im].
Json to_json(Complex z);
Json to_json(const ComplexVector& v);
// Throws InvalidInput on anything that is not a list of [re, im] pairs.
ComplexVector complex_vector_from_json(const Json& j);

// {"name", "order", "cayley": [[...]], "identity"}.
Json group_to_json(const Group& g);
// Conjugacy classes are recomputed. When the name is a known label and the
// table matches that group exactly, the known group (with its labels and
// character ordering) is returned.
Group group_from_json(const Json& j);

Json char_table_to_json(const CharacterTable& ct);
// Header: character, then per class "<label>", "<label>.re", "<label>.im".
// The first cell of each class is a readable rendering (integers or
// e^{2πi·k/m}), the other two are numeric.
std::string char_table_to_csv(const CharacterTable& ct);
std::string render_character_value(Complex v, int root_order);

// {"group", "basis": "coefficients", "data", "values", "sync_residual"}.
Json class_function_to_json(const ClassFunction& f);
// Accepts "basis": "coefficients" or "pointwise"; "data" holds the values in
// that basis.
ClassFunction class_function_from_json(const Json& j);

Json bent_report_to_json(const BentReport& r);
Json criterion_to_json(const CriterionOutcome& c);
Json s3_certificate_to_json(const S3Certificate& c);
Json search_config_to_json(const SearchConfig& c);
Json search_result_to_json(const SearchResult& r);

}  // namespace bent
