#include <doctest.h>

#include <array>
#include <set>

#include "posalg/generators.hpp"
#include "posalg/lattice.hpp"
#include "posalg/poly.hpp"

using namespace posalg;

TEST_CASE("idempotent families are nonnegative idempotents") {
  SplitMix64 rng(71);
  using gen::IdempotentFamily;
  for (auto family : {IdempotentFamily::rank_one, IdempotentFamily::column_selection, IdempotentFamily::block_form}) {
    for (int t = 0; t < 30; ++t) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
      const Mat e = gen::idempotent(rng, n, family);
      CHECK(e.is_nonnegative());
      CHECK(e * e == e);
      CHECK_FALSE(e.is_zero());
    }
  }
}

TEST_CASE("block_form honours forced zero columns") {
  SplitMix64 rng(73);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 7));
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i + 1 < n; ++i) mask[i] = rng.chance(1, 3);
    const Mat e = gen::block_form(rng, n, mask);
    CHECK(e * e == e);
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) CHECK(e.col_is_zero(i));
  }
}

TEST_CASE("generators are deterministic in the seed") {
  SplitMix64 a(99), b(99);
  for (int t = 0; t < 10; ++t) {
    const auto pa = gen::comparable_pair(a, 5, 500);
    const auto pb = gen::comparable_pair(b, 5, 500);
    REQUIRE(pa);
    REQUIRE(pb);
    CHECK(pa->e == pb->e);
    CHECK(pa->f == pb->f);
  }
}

TEST_CASE("comparable pairs cover a range of algebra dimensions") {
  SplitMix64 rng(79);
  std::set<std::size_t> dims;
  for (int t = 0; t < 120; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 8));
    const auto pair = gen::comparable_pair(rng, n, 2000);
    REQUIRE(pair);
    CHECK(pair->e * pair->e == pair->e);
    CHECK(pair->f * pair->f == pair->f);
    CHECK(entrywise_ge(pair->e * pair->f, pair->f * pair->e));
    const std::array<Mat, 2> gens{pair->e, pair->f};
    dims.insert(algebra_closure(gens, true).dim());
  }
  CHECK(dims.count(9) == 1);
  CHECK(dims.count(7) == 1);
  CHECK(dims.size() >= 5);
}

TEST_CASE("positive commutator pairs and distinct-eigenvalue matrices") {
  SplitMix64 rng(83);
  int noncommuting = 0;
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto inst = gen::positive_commutator_pair(rng, n, 2000);
    REQUIRE(inst);
    const auto& [a, b] = *inst;
    CHECK(a.is_nonnegative());
    CHECK(b.is_nonnegative());
    const Mat c = commutator(a, b);
    CHECK(c.is_nonnegative());
    if (!c.is_zero()) ++noncommuting;
  }
  CHECK(noncommuting > 15);
  for (int t = 0; t < 20; ++t) {
    const auto a = gen::distinct_eigenvalue_matrix(rng, static_cast<std::size_t>(rng.uniform(1, 5)), 2000);
    REQUIRE(a);
    CHECK(a->is_nonnegative());
    CHECK(has_distinct_eigenvalues(*a));
  }
}

TEST_CASE("key instances satisfy the order hypothesis") {
  SplitMix64 rng(89);
  for (int t = 0; t < 40; ++t) {
    const auto inst = gen::key_instance(rng, static_cast<std::size_t>(rng.uniform(2, 6)), 2000);
    REQUIRE(inst);
    const auto& [e, a] = *inst;
    CHECK(e * e == e);
    CHECK(a.is_nonnegative());
    CHECK((entrywise_ge(a * e, e * a) || entrywise_ge(e * a, a * e)));
  }
}
