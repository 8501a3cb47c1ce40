#pragma once

#include <optional>
#include <string>

#include "posalg/matrix_io.hpp"

namespace posalg {

/// Outcome of a checkable computation. `pass` is the verdict, `witness`
/// names a violation when there is one, `details` carries check-specific data.
struct Report {
  std::string check;
  bool pass = false;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> radical_dim;
  std::string witness;
  Json details = Json::object();
};

Json to_json(const Report& r);

}  // namespace posalg
