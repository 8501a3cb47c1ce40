#pragma once

#include <vector>

#include "posalg/linalg.hpp"
#include "posalg/lp.hpp"
#include "posalg/mat.hpp"
#include "posalg/report.hpp"

namespace posalg {

enum class Side { left, right };
/// Execution policy for the kernels that have an OpenMP path. `serial` is the
/// reference implementation; both produce identical results.
enum class Exec { serial, parallel };

/// Homogeneous inequality system over row-major vectorized n x n matrices.
/// Left side: B >= 0 and [A,B] >= 0. Right side: B >= 0 and [A,B] <= 0.
/// The first n^2 constraints are entry nonnegativity, the next n^2 the
/// commutator entries, both in row-major order.
struct ConeSpec {
  std::size_t n = 0;
  Side side = Side::left;
  std::vector<Vec> constraints;

  bool contains(const Mat& b) const;
};

ConeSpec supercomm_spec(const Mat& a, Side side);

Rat lp_max(std::span<const Rat> objective, const ConeSpec& spec, const Rat& cap);

struct ConeSpan {
  std::vector<std::size_t> implicit_equalities;
  std::vector<Mat> span_basis;
  std::size_t dim = 0;
  Mat interior_point;
  std::vector<Mat> witnesses;  // one maximizer per constraint, all in the cone
};

/// One capped LP per constraint decides which constraints are implicit
/// equalities; the span is their common kernel and the relative-interior
/// point is the sum of all maximizers.
ConeSpan cone_span(const ConeSpec& spec, Exec exec = Exec::parallel);

/// Passes iff the span is closed under multiplication; the witness names the
/// first basis pair whose product leaves it.
Report verify_lin_eq_alg(const ConeSpan& span);

/// Dimension of the span of the super left-commutant against n(n+1)/2,
/// with the eigenvalue hypothesis and the triangularizability verdict.
Report supercomm_dimension_table(const Mat& a, Exec exec = Exec::parallel);
/// Same, for an already computed span of the left cone of A.
Report supercomm_dimension_table(const Mat& a, const ConeSpan& span);

Json to_json(const ConeSpan& span);

}  // namespace posalg
