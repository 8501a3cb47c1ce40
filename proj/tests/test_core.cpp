#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "posalg/errors.hpp"
#include "posalg/generators.hpp"
#include "posalg/matrix_io.hpp"
#include "posalg/poly.hpp"
#include "posalg/rng.hpp"

using namespace posalg;

namespace {

// Oracle: determinant by cofactor expansion along the first row, entries are
// polynomials in x. Exponential, fine for n <= 5.
Poly cofactor_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const Poly term = m[0][c] * cofactor_det(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Poly cofactor_char_poly(const Mat& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Poly::constant(-a(i, j)) + (i == j ? Poly::x() : Poly());
  return cofactor_det(m);
}

// Oracle: determinant over Q by Gaussian elimination on a plain vector.
Rat gauss_det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Resultant of p and q through the Sylvester matrix.
Rat resultant(const Poly& p, const Poly& q) {
  const auto dp = static_cast<std::size_t>(p.degree());
  const auto dq = static_cast<std::size_t>(q.degree());
  const std::size_t size = dp + dq;
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t k = 0; k <= dp; ++k) s[r][r + k] = p.coeff(dp - k);
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t k = 0; k <= dq; ++k) s[dq + r][r + k] = q.coeff(dq - k);
  return gauss_det(std::move(s));
}

}  // namespace

TEST_CASE("parse_rat accepts integers and fractions only") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK(parse_rat("123456789012345678901234567890/3").has_value());
  CHECK_FALSE(parse_rat("1/0"));
  CHECK_FALSE(parse_rat("1.5"));
  CHECK_FALSE(parse_rat(" 2"));
  CHECK_FALSE(parse_rat("--1"));
  CHECK_FALSE(parse_rat(""));
  CHECK(to_string(make_rat(4, -6)) == "-2/3");
}

TEST_CASE("Mat arithmetic and shape errors") {
  const Mat a = Mat::from_ints({{1, 2}, {3, 4}});
  const Mat b = Mat::from_ints({{0, 1}, {1, 0}});
  CHECK(a * b == Mat::from_ints({{2, 1}, {4, 3}}));
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(a.trace() == 5);
  CHECK(a.transpose() == Mat::from_ints({{1, 3}, {2, 4}}));
  CHECK(a.power(0) == Mat::identity(2));
  CHECK(a.power(3) == a * a * a);
  CHECK_THROWS_AS(a * Mat::zero(3, 3), ShapeError);
  CHECK_THROWS_AS(require_square(Mat::zero(2, 3), "m"), ShapeError);
  CHECK_THROWS_AS(require_nonnegative(Mat::from_ints({{1, -1}}), "m"), DomainError);
  CHECK(Mat::jordan(3) == Mat::from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(entrywise_ge(Mat::ones(2), Mat::identity(2)));
  CHECK_FALSE(entrywise_ge(Mat::identity(2), Mat::ones(2)));
}

TEST_CASE("permuted is P^T M P with perm[new] = old") {
  const Mat m = Mat::from_ints({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const std::vector<std::size_t> perm{2, 0, 1};
  const Mat p = m.permuted(perm);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(p(i, j) == m(perm[i], perm[j]));
}

TEST_CASE("char_poly matches cofactor expansion") {
  SplitMix64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    Mat a = gen::random_nonnegative(rng, n, n, 5, 60);
    if (t % 3 == 0) a = a - Rat(2) * Mat::identity(n);
    const Poly p = char_poly(a);
    CHECK(p == cofactor_char_poly(a));
    CHECK(p.eval(a).is_zero());  // Cayley-Hamilton
  }
  CHECK(char_poly(Mat::from_ints({{1, 2}, {3, 4}})) == Poly::from_ints({-2, -5, 1}));
}

TEST_CASE("distinct eigenvalues iff resultant of p and p' is nonzero") {
  SplitMix64 rng(5);
  int distinct = 0, repeated = 0;
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 4));
    Mat a = gen::random_nonnegative(rng, n, n, 2, 40);
    const Poly p = char_poly(a);
    const bool oracle = resultant(p, p.derivative()) != 0;
    CHECK(has_distinct_eigenvalues(a) == oracle);
    (oracle ? distinct : repeated)++;
  }
  CHECK(distinct > 10);
  CHECK(repeated > 10);
}

TEST_CASE("minimal_poly annihilates and divides char_poly") {
  CHECK(minimal_poly(Mat::identity(3)) == Poly::from_ints({-1, 1}));
  CHECK(minimal_poly(Mat::jordan(3)) == Poly::from_ints({0, 0, 0, 1}));
  const Mat e = Mat::from_ints({{1, 1}, {0, 0}});
  CHECK(minimal_poly(e) == Poly::from_ints({0, -1, 1}));
  SplitMix64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const Mat a = gen::random_nonnegative(rng, n, n, 3, 50);
    const Poly m = minimal_poly(a);
    CHECK(m.eval(a).is_zero());
    CHECK(divmod(char_poly(a), m).second.is_zero());
    // minimality: I, A, ..., A^(deg-1) are independent
    std::vector<Vec> powers;
    for (int d = 0; d < m.degree(); ++d) powers.push_back(vectorize(a.power(static_cast<unsigned>(d))));
    CHECK(oracle::rank(powers, n * n) == powers.size());
  }
}

TEST_CASE("poly gcd and printing") {
  const Poly p = Poly::from_ints({2, -3, 1});  // (x-1)(x-2)
  const Poly q = Poly::from_ints({-1, 1});
  CHECK(gcd(p, q) == q);
  CHECK(gcd(Poly(), Poly()).is_zero());
  CHECK(to_string(p) == "x^2 - 3x + 2");
}

TEST_CASE("matrix JSON round trip and diagnostics") {
  const Mat m = Mat::from_ints({{1, 0}, {0, 2}}) * make_rat(1, 3);
  const Json j = matrix_to_json(m);
  CHECK(j["entries"][0][0] == "1/3");
  CHECK(j["entries"][0][1] == 0);
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":2,"cols":2,"entries":[[1,2]]})")), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":[["x"]]})")), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":[[1.5]]})")), InputError);
  try {
    matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[[1,"2/0"]]})"));
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("row 1, column 2") != std::string::npos);
  }
}

TEST_CASE("SplitMix64 stream matches the documented update") {
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xE220A8397B1DCDAFULL);
  CHECK(zero.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(zero.next() == 0x06C45D188009454FULL);
  SplitMix64 seven(7);
  CHECK(seven.next() == 7191089600892374487ULL);
  SplitMix64 rng(3);
  auto p = rng.permutation(9);
  std::sort(p.begin(), p.end());
  std::vector<std::size_t> id(9);
  std::iota(id.begin(), id.end(), 0);
  CHECK(p == id);
}
