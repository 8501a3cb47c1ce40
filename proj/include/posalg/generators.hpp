#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "posalg/idempot.hpp"
#include "posalg/mat.hpp"
#include "posalg/rng.hpp"

namespace posalg::gen {

/// Structured families of nonnegative idempotents.
enum class IdempotentFamily { rank_one, column_selection, block_form };

/// Nonnegative integer matrix; each entry is nonzero with probability
/// density/100 and then uniform in [1, max_entry].
Mat random_nonnegative(SplitMix64& rng, std::size_t rows, std::size_t cols, long max_entry, unsigned density);

/// u v^T / (v^T u) with small nonnegative integer u, v sharing a pivot.
Mat rank_one(SplitMix64& rng, std::size_t n);
/// 0/1 idempotent sum_q a_q b_q^T with b_p^T a_q = delta_pq.
Mat column_selection(SplitMix64& rng, std::size_t n);
/// Four-band block form (0; X; I; 0) G (0 0 I Y) with G a direct sum of
/// strictly positive rank-one idempotents. Indices flagged in `force_null`
/// land in L1 or L2, i.e. become zero columns.
Mat block_form(SplitMix64& rng, std::size_t n, const std::vector<bool>& force_null = {});

Mat idempotent(SplitMix64& rng, std::size_t n, IdempotentFamily family);
/// Family drawn from rng, followed by a random positive diagonal similarity
/// with probability 1/2.
Mat idempotent(SplitMix64& rng, std::size_t n);

/// D^-1 M D for a random diagonal D with entries in [1, 3].
Mat diagonal_similarity(SplitMix64& rng, const Mat& m);

/// A pair of nonnegative idempotents with EF >= FE (normalized by swapping),
/// or nullopt after `budget` rejected attempts.
std::optional<IdempotentPair> comparable_pair(SplitMix64& rng, std::size_t n, std::size_t budget);

/// Nonnegative A, B with [A,B] >= 0.
std::optional<std::pair<Mat, Mat>> positive_commutator_pair(SplitMix64& rng, std::size_t n, std::size_t budget);

/// Nonnegative A with distinct eigenvalues.
std::optional<Mat> distinct_eigenvalue_matrix(SplitMix64& rng, std::size_t n, std::size_t budget);

/// A positive idempotent E and a nonnegative A with AE >= EA or AE <= EA.
std::optional<std::pair<Mat, Mat>> key_instance(SplitMix64& rng, std::size_t n, std::size_t budget);

}  // namespace posalg::gen
