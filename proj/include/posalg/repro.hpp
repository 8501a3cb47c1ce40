#pragma once

#include <string>
#include <vector>

#include "posalg/matrix_io.hpp"
#include "posalg/supercone.hpp"

namespace posalg {

struct ReproRow {
  std::string claim_id;
  Rat expected;
  Rat computed;
  bool pass = false;  // expected == computed exactly
  std::string source;
};

Json to_json(const ReproRow& row);

/// Fixed suite reproducing every explicit example: the 7x7 and 6x6 pairs,
/// the even/odd families, super left-commutant spans of diag(n..1) and ee^T,
/// non-triangularizability of ee^T, and band-split self-checks.
std::vector<ReproRow> repro_all(Exec exec = Exec::parallel);

}  // namespace posalg
