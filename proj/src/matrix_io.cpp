#include "posalg/matrix_io.hpp"

#include <fstream>
#include <limits>

#include "posalg/errors.hpp"

namespace posalg {

Json rat_to_json(const Rat& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p()) return Json(value.get_num().get_si());
  return Json(to_string(value));
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rat(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rat(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    if (auto r = parse_rat(j.get<std::string>())) return *r;
    throw InputError("entry '" + j.get<std::string>() + "' is not an integer or p/q rational");
  }
  throw InputError("entry " + j.dump() + " is not an integer or p/q rational string");
}

Json matrix_to_json(const Mat& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

namespace {

std::size_t read_count(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

Mat matrix_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("matrix must be a JSON object");
  const std::size_t rows = read_count(j, "rows");
  const std::size_t cols = read_count(j, "cols");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw InputError("missing array field 'entries'");
  const Json& entries = j.at("entries");
  if (entries.size() != rows)
    throw InputError("expected " + std::to_string(rows) + " rows, found " + std::to_string(entries.size()));
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      throw InputError("row " + std::to_string(i + 1) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      try {
        m(i, c) = rat_from_json(row[c]);
      } catch (const InputError& e) {
        throw InputError("row " + std::to_string(i + 1) + ", column " + std::to_string(c + 1) + ": " + e.what());
      }
    }
  }
  return m;
}

Mat load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return matrix_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_matrix(const Mat& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << matrix_to_json(m).dump() << '\n';
}

}  // namespace posalg
