#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posalg/linalg.hpp"
#include "posalg/mat.hpp"
#include "posalg/report.hpp"

namespace posalg {

/// A product of generators, read left to right. The empty word is the identity.
struct Word {
  std::vector<std::size_t> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Default generator names: "A", "B", "C", ...
std::vector<std::string> default_names(std::size_t count);

/// "EFFE" style; the identity word is "1". Names must be single characters.
std::string to_string(const Word& w, std::span<const std::string> names);
Word parse_word(std::string_view text, std::span<const std::string> names);

/// Evaluates the word; n is the matrix size (needed for the identity word).
Mat evaluate(const Word& w, std::span<const Mat> generators, std::size_t n);

/// Basis of the (unital) algebra generated by a family, with one generating
/// word per basis element.
struct AlgebraBasis {
  std::size_t n = 0;
  std::vector<Mat> generators;
  bool unital = true;
  std::vector<Mat> basis;
  std::vector<Word> words;
  SpanBuilder span;  // echelon form of `basis`, for membership queries

  std::size_t dim() const { return basis.size(); }
};

/// Breadth-first word closure: seeds with I (when unital) and the generators,
/// then multiplies basis elements on the right by each generator in input
/// order, keeping products that enlarge the span. `size` fixes n when the
/// generator list is empty.
AlgebraBasis algebra_closure(std::span<const Mat> generators, bool unital, std::size_t size = 0);

/// Coordinates of m with respect to alg.basis, or nullopt if m is outside the span.
std::optional<Vec> membership(const Mat& m, const AlgebraBasis& alg);

/// Radical of the algebra as the null space of the trace form
/// G_ij = tr(b_i b_j), mapped back into matrices.
std::vector<Mat> trace_radical(const AlgebraBasis& alg);

/// Triangularizable over the algebraic closure iff every commutator of basis
/// elements lies in the radical.
Report is_triangularizable(std::span<const Mat> generators, std::size_t size = 0);

/// Same verdict, reusing an already computed closure.
Report triangularizable_report(const AlgebraBasis& alg);

/// Passes iff the evaluated words span the whole unital algebra of the generators.
Report spanning_word_check(std::span<const Mat> generators, std::span<const Word> words,
                           std::span<const std::string> names = {});

}  // namespace posalg
