#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posalg/mat.hpp"
#include "posalg/report.hpp"
#include "posalg/spanalg.hpp"

namespace posalg {

/// Entrywise relation between EF and FE.
enum class Order { ef_ge_fe, ef_le_fe, equal, incomparable };

std::string to_string(Order order);
Order classify_order(const Mat& e, const Mat& f);

/// Two nonnegative idempotents of equal size with their order relation.
struct IdempotentPair {
  Mat e;
  Mat f;
  Order order = Order::incomparable;

  bool comparable() const { return order != Order::incomparable; }
};

/// Throws DomainError naming the violating entry if either matrix is not a
/// nonnegative idempotent.
IdempotentPair validate_pair(const Mat& e, const Mat& f);
void require_positive_idempotent(const Mat& e, const char* what);

/// Generator names used for words over an idempotent pair.
std::span<const std::string> pair_names();
/// I, E, F, EF, FE, EFE, FEF, (EF)^2, (FE)^2
std::vector<Word> nine_words();
/// E, F, EF, FE, EFE, FEF
std::vector<Word> six_words();

/// Conclusions for E a positive idempotent and A with AE >= EA or AE <= EA:
/// (a) no zero column: AE = EAE and (AE-EA)^2 = 0; (b) no zero row:
/// EA = EAE and (AE-EA)^2 = 0; (c) both: AE = EA.
Report check_one_idem(const Mat& e, const Mat& a);

/// For a comparable pair: if E has no zero column or no zero row the unital
/// algebra is span{I,E,F,EF,FE,FEF}; if both, span{I,E,F,EF}.
Report check_two_idem(const IdempotentPair& pair);

/// (AE-EA)^2 E = E (AE-EA)^2 = 0 and (EA)^2 E = E A^2 E for positive A
/// comparable with E. The band split of E is attached.
Report check_key_identity(const Mat& e, const Mat& a);

/// The nine words span the unital algebra, dim <= 9, (EF)^2 E = EFE and
/// (FE)^2 F = FEF. Refuses incomparable pairs.
Report nine_word_span(const IdempotentPair& pair);

/// Enumerates the multiplicative semigroup of {E, F}. When every element is
/// idempotent it must equal {E,F,EF,FE,EFE,FEF} as a set and the unital
/// algebra must have dim <= 7.
Report band_semigroup(const IdempotentPair& pair);

std::pair<Mat, Mat> ks7_pair();
/// ks7 with the last row and column removed.
std::pair<Mat, Mat> ks6_pair();
/// [[1,1],[0,0]] and [[1,0],[1,0]]
std::pair<Mat, Mat> n2_pair();
/// n = 2k. k = 1 is n2_pair(); k >= 2 uses [[I,2I],[0,0]] and [[I,0],[P,0]]
/// with P the k x k full-cycle permutation.
std::pair<Mat, Mat> even_pair(std::size_t k);
/// n = 2k + 1: diag(1, E) and diag(0, F) for the even(k) pair.
std::pair<Mat, Mat> odd_pair(std::size_t k);
/// The full-cycle permutation matrix: ones at (1,k) and (i+1,i).
Mat cycle_permutation(std::size_t k);
/// u v^T / (v^T u); requires nonnegative u, v with v^T u > 0.
Mat rank_one_idempotent(std::span<const Rat> u, std::span<const Rat> v);

struct ExamplePair {
  Mat e;
  std::optional<Mat> f;  // absent for rank_one
};

/// Names: ks7, ks6, n2, even(k), odd(k), rank_one(u1,..;v1,..).
/// "even:k" and "odd:k" are accepted too. Throws DomainError/InputError.
ExamplePair build_example(std::string_view name);

/// Unital algebra of two matrices with minimal polynomials of degree <= 2
/// against 2n (n even) or 2n-1 (n odd).
Report quadratic_bound_check(const Mat& e, const Mat& f);

/// For the even(k) pair and C = E - F: the 4k matrices C^{2j}, C^{2j+1},
/// C^{2j}E, C^{2j+1}E (j = 1..k) are linearly independent, and each matches
/// its block closed form in terms of (-2P)^j.
Report independence_system_check(std::size_t k);

}  // namespace posalg
