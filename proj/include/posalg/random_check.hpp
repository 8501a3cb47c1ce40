#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "posalg/report.hpp"
#include "posalg/supercone.hpp"

namespace posalg {

enum class Theorem { thm_one, thm_finitely, thm_main, thm_key, lemma_zero_fd, band_split };

std::string to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view name);

inline constexpr std::size_t default_trial_budget = 2000;

struct CheckConfig {
  Theorem theorem = Theorem::thm_one;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::size_t n_min = 0;  // 0 = per-theorem default
  std::size_t n_max = 0;
  std::size_t budget = default_trial_budget;  // rejection-sampling attempts per trial
};

/// Per-theorem default size range and the hard cap on n.
std::pair<std::size_t, std::size_t> default_range(Theorem t);
std::size_t max_size(Theorem t);

/// Draws `trials` instances satisfying the theorem's hypotheses and checks
/// its conclusion exactly on each. Trial t uses the t-th output of
/// SplitMix64(seed) as its own seed, so the report does not depend on
/// scheduling. Instances that cannot be generated within the budget count as
/// exhausted, not failed.
Report random_check(const CheckConfig& cfg, Exec exec = Exec::parallel);

}  // namespace posalg
