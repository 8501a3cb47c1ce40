#pragma once

#include <string>

#include <json.hpp>

#include "posalg/mat.hpp"

namespace posalg {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers; everything else "p/q".
Json rat_to_json(const Rat& value);
Rat rat_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
Json matrix_to_json(const Mat& m);
/// Throws InputError on anything malformed: missing fields, floats, NaN-like
/// tokens, ragged or wrongly sized rows.
Mat matrix_from_json(const Json& j);

Mat load_matrix(const std::string& path);
void save_matrix(const Mat& m, const std::string& path);

}  // namespace posalg
