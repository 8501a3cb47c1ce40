#include "posalg/random_check.hpp"

#include <exception>
#include <vector>

#include "posalg/errors.hpp"
#include "posalg/generators.hpp"
#include "posalg/idempot.hpp"
#include "posalg/lattice.hpp"
#include "posalg/poly.hpp"
#include "posalg/rng.hpp"
#include "posalg/spanalg.hpp"

namespace posalg {

namespace {

constexpr std::pair<Theorem, const char*> kNames[] = {
    {Theorem::thm_one, "thm_one"},         {Theorem::thm_finitely, "thm_finitely"},
    {Theorem::thm_main, "thm_main"},       {Theorem::thm_key, "thm_key"},
    {Theorem::lemma_zero_fd, "lemma_zero_fd"}, {Theorem::band_split, "band_split"},
};

enum class Status { passed, failed, exhausted };

struct Outcome {
  Status status = Status::exhausted;
  std::size_t n = 0;
  Json counterexample;
};

Outcome fail(std::size_t n, std::string witness, Json data) {
  Outcome o{Status::failed, n, Json::object()};
  o.counterexample["witness"] = std::move(witness);
  o.counterexample["data"] = std::move(data);
  return o;
}

Outcome pass(std::size_t n) { return Outcome{Status::passed, n, nullptr}; }
Outcome exhausted(std::size_t n) { return Outcome{Status::exhausted, n, nullptr}; }

std::size_t triangular_bound(std::size_t n) { return n * (n + 1) / 2; }

Outcome check_algebra(std::size_t n, std::span<const Mat> gens, Json data) {
  const AlgebraBasis alg = algebra_closure(gens, true, n);
  const Report tri = triangularizable_report(alg);
  if (!tri.pass) return fail(n, "not triangularizable: " + tri.witness, std::move(data));
  if (alg.dim() > triangular_bound(n)) {
    return fail(n, "dim " + std::to_string(alg.dim()) + " > " + std::to_string(triangular_bound(n)), std::move(data));
  }
  return pass(n);
}

Outcome trial_one(SplitMix64& rng, std::size_t n, std::size_t budget) {
  const auto inst = gen::positive_commutator_pair(rng, n, budget);
  if (!inst) return exhausted(n);
  const auto& [a, b] = *inst;
  const std::vector<Mat> gens{a, b};
  return check_algebra(n, gens, Json{{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)}});
}

// Off-diagonal entries in [0, 2], diagonal in [3n, 6n].
std::optional<Mat> dominant_distinct(SplitMix64& rng, std::size_t n, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Mat a = gen::random_nonnegative(rng, n, n, 2, 50);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, i) = Rat(static_cast<long>(rng.uniform(3 * static_cast<long>(n), 6 * static_cast<long>(n))));
    }
    if (has_distinct_eigenvalues(a)) return a;
  }
  return std::nullopt;
}

Outcome trial_finitely(SplitMix64& rng, std::size_t n, std::size_t budget) {
  const auto a = dominant_distinct(rng, n, budget);
  if (!a) return exhausted(n);
  const ConeSpec spec = supercomm_spec(*a, Side::left);
  const ConeSpan span = cone_span(spec, Exec::serial);
  const auto k = static_cast<std::size_t>(rng.uniform(1, 3));
  std::vector<Mat> gens{*a};
  Json bs = Json::array();
  for (std::size_t i = 0; i < k; ++i) {
    Mat b = Mat::zero(n, n);
    for (const Mat& w : span.witnesses) {
      const auto c = rng.uniform(0, 2);
      if (c != 0) b += Rat(static_cast<long>(c)) * w;
    }
    bs.push_back(matrix_to_json(b));
    if (!spec.contains(b)) {
      return fail(n, "recombination left the cone", Json{{"A", matrix_to_json(*a)}, {"B", bs}});
    }
    gens.push_back(std::move(b));
  }
  return check_algebra(n, gens, Json{{"A", matrix_to_json(*a)}, {"B", std::move(bs)}});
}

Outcome trial_main(SplitMix64& rng, std::size_t n, std::size_t budget) {
  const auto pair = gen::comparable_pair(rng, n, budget);
  if (!pair) return exhausted(n);
  const Report r = nine_word_span(*pair);
  if (r.pass) return pass(n);
  return fail(n, r.witness, Json{{"E", matrix_to_json(pair->e)}, {"F", matrix_to_json(pair->f)}});
}

Outcome trial_key(SplitMix64& rng, std::size_t n, std::size_t budget) {
  const auto inst = gen::key_instance(rng, n, budget);
  if (!inst) return exhausted(n);
  const auto& [e, a] = *inst;
  const Report r = check_key_identity(e, a);
  if (r.pass) return pass(n);
  return fail(n, r.witness, Json{{"E", matrix_to_json(e)}, {"A", matrix_to_json(a)}});
}

// No zero rows in A and B >= 0 with BA = 0 force B = 0. Each trial draws a
// nonzero B, partly supported on indices that may be zero rows of a candidate
// A, so the search also exercises the boundary where the hypothesis fails.
Outcome trial_zero(SplitMix64& rng, std::size_t n, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    const Mat a = gen::random_nonnegative(rng, n, n, 3, 40);
    if (!disjoint_complement(range_ideal(a)).empty()) continue;
    Mat b = gen::random_nonnegative(rng, n, n, 3, 40);
    if (b.is_zero()) b(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1)), 0) = 1;
    if ((b * a).is_zero()) return fail(n, "BA = 0 with B != 0", Json{{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)}});
    return pass(n);
  }
  return exhausted(n);
}

Outcome trial_band(SplitMix64& rng, std::size_t n) {
  const Mat e = gen::idempotent(rng, n);
  const BandSplit split = band_split(e);
  const auto violations = band_identity_violations(e, split);
  if (violations.empty()) return pass(n);
  return fail(n, violations.front(), Json{{"E", matrix_to_json(e)}});
}

Outcome run_trial(const CheckConfig& cfg, std::size_t lo, std::size_t hi, std::uint64_t trial_seed) {
  SplitMix64 rng(trial_seed);
  const auto n = static_cast<std::size_t>(rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
  try {
    switch (cfg.theorem) {
      case Theorem::thm_one: return trial_one(rng, n, cfg.budget);
      case Theorem::thm_finitely: return trial_finitely(rng, n, cfg.budget);
      case Theorem::thm_main: return trial_main(rng, n, cfg.budget);
      case Theorem::thm_key: return trial_key(rng, n, cfg.budget);
      case Theorem::lemma_zero_fd: return trial_zero(rng, n, cfg.budget);
      case Theorem::band_split: return trial_band(rng, n);
    }
  } catch (const std::exception& ex) {
    return fail(n, std::string("exception: ") + ex.what(), nullptr);
  }
  return fail(n, "unknown theorem", nullptr);
}

}  // namespace

std::string to_string(Theorem t) {
  for (const auto& [id, name] : kNames)
    if (id == t) return name;
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view name) {
  for (const auto& [id, text] : kNames)
    if (name == text) return id;
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> default_range(Theorem t) {
  switch (t) {
    case Theorem::thm_one: return {1, 4};
    case Theorem::thm_finitely: return {2, 4};
    case Theorem::thm_main: return {2, 6};
    case Theorem::thm_key: return {2, 6};
    case Theorem::lemma_zero_fd: return {1, 6};
    case Theorem::band_split: return {1, 8};
  }
  return {1, 4};
}

std::size_t max_size(Theorem t) { return t == Theorem::thm_finitely ? 8 : 12; }

Report random_check(const CheckConfig& cfg, Exec exec) {
  if (cfg.trials == 0) throw DomainError("random_check: trials must be >= 1");
  if (cfg.budget == 0) throw DomainError("random_check: budget must be >= 1");
  auto [lo, hi] = default_range(cfg.theorem);
  if (cfg.n_min != 0) lo = cfg.n_min;
  if (cfg.n_max != 0) hi = cfg.n_max;
  if (lo == 0 || lo > hi) throw DomainError("random_check: empty size range");
  if (hi > max_size(cfg.theorem)) {
    throw DomainError("random_check: n = " + std::to_string(hi) + " exceeds the cap " +
                      std::to_string(max_size(cfg.theorem)) + " for " + to_string(cfg.theorem));
  }

  std::vector<std::uint64_t> seeds(cfg.trials);
  SplitMix64 master(cfg.seed);
  for (auto& s : seeds) s = master.next();

  std::vector<Outcome> outcomes(cfg.trials);
  const auto count = static_cast<long>(cfg.trials);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < count; ++t) outcomes[t] = run_trial(cfg, lo, hi, seeds[t]);
  } else {
    for (long t = 0; t < count; ++t) outcomes[t] = run_trial(cfg, lo, hi, seeds[t]);
  }

  std::size_t passed = 0, failed = 0, exhausted_count = 0;
  Json first = nullptr;
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const Outcome& o = outcomes[t];
    switch (o.status) {
      case Status::passed: ++passed; break;
      case Status::exhausted: ++exhausted_count; break;
      case Status::failed:
        ++failed;
        if (first.is_null()) {
          first = Json{{"trial", t}, {"n", o.n}, {"trial_seed", std::to_string(seeds[t])}};
          first.update(o.counterexample);
        }
        break;
    }
  }

  Report rep;
  rep.check = "random_check";
  rep.pass = failed == 0;
  if (failed != 0) rep.witness = first["witness"].get<std::string>();
  rep.details["theorem"] = to_string(cfg.theorem);
  rep.details["seed"] = std::to_string(cfg.seed);
  rep.details["trials"] = cfg.trials;
  rep.details["passed"] = passed;
  rep.details["failed"] = failed;
  rep.details["exhausted"] = exhausted_count;
  rep.details["n_range"] = Json::array({lo, hi});
  rep.details["counterexample"] = std::move(first);
  return rep;
}

}  // namespace posalg
