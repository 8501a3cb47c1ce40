#include <doctest.h>

#include "posalg/errors.hpp"
#include "posalg/random_check.hpp"

using namespace posalg;

TEST_CASE("theorem names round trip") {
  for (auto t : {Theorem::thm_one, Theorem::thm_finitely, Theorem::thm_main, Theorem::thm_key,
                 Theorem::lemma_zero_fd, Theorem::band_split}) {
    CHECK(parse_theorem(to_string(t)) == t);
  }
  CHECK_FALSE(parse_theorem("thm_two"));
}

TEST_CASE("default suite: no failures, serial equals parallel") {
  for (auto t : {Theorem::thm_one, Theorem::thm_finitely, Theorem::thm_main, Theorem::thm_key,
                 Theorem::lemma_zero_fd, Theorem::band_split}) {
    CAPTURE(to_string(t));
    CheckConfig cfg;
    cfg.theorem = t;
    cfg.trials = 30;
    cfg.seed = 7;
    const Report par = random_check(cfg, Exec::parallel);
    const Report ser = random_check(cfg, Exec::serial);
    CHECK(par.pass);
    CHECK(par.details["failed"] == 0);
    CHECK(par.details["exhausted"] == 0);
    CHECK(par.details["passed"] == 30);
    CHECK(to_json(par).dump() == to_json(ser).dump());
  }
}

TEST_CASE("thm_one: 50 trials, seed 7") {
  CheckConfig cfg;
  cfg.theorem = Theorem::thm_one;
  cfg.trials = 50;
  cfg.seed = 7;
  const Report r = random_check(cfg);
  CHECK(r.pass);
  CHECK(r.details["passed"] == 50);
  CHECK(r.details["n_range"] == Json::parse("[1,4]"));
}

TEST_CASE("single trial is reproducible") {
  CheckConfig cfg;
  cfg.theorem = Theorem::thm_main;
  cfg.trials = 1;
  cfg.seed = 123456789;
  CHECK(to_json(random_check(cfg)).dump() == to_json(random_check(cfg)).dump());
}

TEST_CASE("a tiny budget reports exhaustion, not failure") {
  CheckConfig cfg;
  cfg.theorem = Theorem::lemma_zero_fd;
  cfg.trials = 20;
  cfg.seed = 1;
  cfg.n_min = cfg.n_max = 6;
  cfg.budget = 1;
  const Report r = random_check(cfg);
  CHECK(r.pass);
  CHECK(r.details["failed"] == 0);
  CHECK(r.details["exhausted"].get<int>() > 0);
}

TEST_CASE("invalid configurations") {
  CheckConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS_AS(random_check(cfg), DomainError);
  cfg.trials = 1;
  cfg.n_min = 5;
  cfg.n_max = 3;
  CHECK_THROWS_AS(random_check(cfg), DomainError);
  cfg.theorem = Theorem::thm_finitely;
  cfg.n_min = 2;
  cfg.n_max = 9;
  CHECK_THROWS_AS(random_check(cfg), DomainError);
}
