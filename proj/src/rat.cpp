#include "posalg/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace posalg {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rat> parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) return std::nullopt;
  }
  if (!all_digits(num)) return std::nullopt;

  mpz_class n(std::string(num), 10);
  mpz_class d = 1;
  if (!den.empty()) d = mpz_class(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

}  // namespace posalg
