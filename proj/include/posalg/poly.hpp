#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posalg/mat.hpp"
#include "posalg/rat.hpp"

namespace posalg {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly x();  // the monomial x
  static Poly from_ints(std::initializer_list<long> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Rat eval(const Rat& at) const;
  /// p(M) by Horner's scheme.
  Mat eval(const Mat& m) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& c, const Poly& p);

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

std::string to_string(const Poly& p);

/// det(xI - A) by Berkowitz's division-free recurrence.
Poly char_poly(const Mat& a);

/// True iff char_poly(A) is squarefree, i.e. gcd(p, p') is constant.
bool has_distinct_eigenvalues(const Mat& a);

/// Monic minimal polynomial from the first linear dependence among I, A, A^2, ...
Poly minimal_poly(const Mat& a);

}  // namespace posalg
