#include "posalg/report.hpp"

namespace posalg {

Json to_json(const Report& r) {
  Json j;
  j["check"] = r.check;
  j["pass"] = r.pass;
  j["dim"] = r.dim ? Json(*r.dim) : Json(nullptr);
  j["radical_dim"] = r.radical_dim ? Json(*r.radical_dim) : Json(nullptr);
  j["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
  for (const auto& [key, value] : r.details.items()) j[key] = value;
  return j;
}

}  // namespace posalg
