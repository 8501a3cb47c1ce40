#include "posalg/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "posalg/errors.hpp"
#include "posalg/linalg.hpp"

namespace posalg {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  const Rat lead = leading();
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Rat Poly::eval(const Rat& at) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Mat Poly::eval(const Mat& m) const {
  require_square(m, "polynomial evaluation");
  const std::size_t n = m.rows();
  Mat acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& c, const Poly& p) { return Poly::constant(c) * p; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rat> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rat q = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quot[static_cast<std::size_t>(k)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat c = p.coeff(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (!unit || k == 0) os << to_string(mag);
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Poly char_poly(const Mat& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  if (n == 0) return Poly::constant(1);

  // Coefficients highest degree first while iterating.
  std::vector<Rat> c{Rat(1), Rat(-a(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // Leading (r+1)x(r+1) block: M = a[0..r), row R = a[r][0..r), column S = a[0..r)[r].
    std::vector<Rat> t(r + 2);
    t[0] = 1;
    t[1] = -a(r, r);
    std::vector<Rat> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Rat s = 0;
      for (std::size_t i = 0; i < r; ++i) s += a(r, i) * w[i];
      t[k] = -s;
      if (k == r + 1) break;
      std::vector<Rat> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * w[j];
      w = std::move(next);
    }
    std::vector<Rat> nc(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < c.size(); ++j) nc[i] += t[i - j] * c[j];
    c = std::move(nc);
  }
  return Poly(std::vector<Rat>(c.rbegin(), c.rend()));
}

bool has_distinct_eigenvalues(const Mat& a) {
  const Poly p = char_poly(a);
  return gcd(p, p.derivative()).degree() <= 0;
}

Poly minimal_poly(const Mat& a) {
  require_square(a, "minimal_poly");
  const std::size_t n = a.rows();
  SpanBuilder powers(n * n);
  Mat p = Mat::identity(n);
  for (std::size_t k = 0;; ++k) {
    const Vec v = vectorize(p);
    if (auto coords = powers.coordinates(v)) {
      std::vector<Rat> c(k + 1);
      c[k] = 1;
      for (std::size_t i = 0; i < coords->size(); ++i) c[i] = -(*coords)[i];
      return Poly(std::move(c));
    }
    powers.insert(v);
    p = p * a;
  }
}

}  // namespace posalg
