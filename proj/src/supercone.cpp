#include "posalg/supercone.hpp"

#include <exception>

#ifdef POSALG_HAVE_OPENMP
#include <omp.h>
#endif

#include "posalg/errors.hpp"
#include "posalg/poly.hpp"
#include "posalg/spanalg.hpp"

namespace posalg {

bool ConeSpec::contains(const Mat& b) const {
  if (b.rows() != n || b.cols() != n) throw ShapeError("cone membership: size mismatch");
  for (const auto& c : constraints) {
    if (sgn(dot(c, b.entries())) < 0) return false;
  }
  return true;
}

namespace {

ConeSpec left_spec(const Mat& a) {
  const std::size_t n = a.rows();
  ConeSpec spec;
  spec.n = n;
  spec.side = Side::left;
  for (std::size_t k = 0; k < n * n; ++k) {
    Vec e(n * n);
    e[k] = 1;
    spec.constraints.push_back(std::move(e));
  }
  // [A,B]_ij = sum_p A_ip B_pj - sum_q B_iq A_qj
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec f(n * n);
      for (std::size_t p = 0; p < n; ++p) f[p * n + j] += a(i, p);
      for (std::size_t q = 0; q < n; ++q) f[i * n + q] -= a(q, j);
      spec.constraints.push_back(std::move(f));
    }
  }
  return spec;
}

}  // namespace

ConeSpec supercomm_spec(const Mat& a, Side side) {
  require_square(a, "supercomm_spec");
  require_nonnegative(a, "supercomm_spec");
  if (side == Side::left) return left_spec(a);

  // B in [A> iff B^T in <A^T]: rewrite each functional of B^T as one of B.
  ConeSpec t = left_spec(a.transpose());
  const std::size_t n = t.n;
  ConeSpec spec;
  spec.n = n;
  spec.side = Side::right;
  // Constraint (i,j) of each half is constraint (j,i) of the transposed system.
  for (std::size_t half = 0; half < 2; ++half)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec& f = t.constraints[half * n * n + j * n + i];
        Vec g(n * n);
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) g[p * n + q] = f[q * n + p];
        spec.constraints.push_back(std::move(g));
      }
  return spec;
}

Rat lp_max(std::span<const Rat> objective, const ConeSpec& spec, const Rat& cap) {
  return lp_max_capped(spec.constraints, objective, cap).value;
}

ConeSpan cone_span(const ConeSpec& spec, Exec exec) {
  const std::size_t m = spec.constraints.size();
  const std::size_t dim = spec.n * spec.n;
  std::vector<LpResult> results(m);

  if (exec == Exec::serial) {
    for (std::size_t k = 0; k < m; ++k) results[k] = lp_max_capped(spec.constraints, spec.constraints[k], Rat(1));
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < m; ++k) {
      try {
        results[k] = lp_max_capped(spec.constraints, spec.constraints[k], Rat(1));
      } catch (...) {
#pragma omp critical(posalg_cone_span_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Assembly is in constraint order, independent of completion order.
  ConeSpan span;
  std::vector<Vec> equalities;
  Vec interior(dim);
  for (std::size_t k = 0; k < m; ++k) {
    if (sgn(results[k].value) == 0) {
      span.implicit_equalities.push_back(k);
      equalities.push_back(spec.constraints[k]);
    }
    for (std::size_t i = 0; i < dim; ++i) interior[i] += results[k].point[i];
    span.witnesses.push_back(unvectorize(results[k].point, spec.n, spec.n));
  }
  for (const auto& v : null_space(equalities, dim)) span.span_basis.push_back(unvectorize(v, spec.n, spec.n));
  span.dim = span.span_basis.size();
  span.interior_point = unvectorize(interior, spec.n, spec.n);
  return span;
}

Report verify_lin_eq_alg(const ConeSpan& span) {
  Report rep;
  rep.check = "lin_eq_alg";
  rep.dim = span.span_basis.size();
  rep.pass = true;
  if (span.span_basis.empty()) return rep;
  const std::size_t n = span.span_basis.front().rows();
  SpanBuilder lin(n * n);
  for (const auto& b : span.span_basis) lin.insert(b.entries());
  for (std::size_t i = 0; i < span.span_basis.size(); ++i) {
    for (std::size_t j = 0; j < span.span_basis.size(); ++j) {
      if (!lin.contains((span.span_basis[i] * span.span_basis[j]).entries())) {
        rep.pass = false;
        rep.witness = "basis[" + std::to_string(i) + "]*basis[" + std::to_string(j) + "] outside the span";
        return rep;
      }
    }
  }
  return rep;
}

Report supercomm_dimension_table(const Mat& a, Exec exec) {
  return supercomm_dimension_table(a, cone_span(supercomm_spec(a, Side::left), exec));
}

Report supercomm_dimension_table(const Mat& a, const ConeSpan& span) {
  const std::size_t n = a.rows();
  const std::size_t bound = n * (n + 1) / 2;
  const bool distinct = has_distinct_eigenvalues(a);
  const Report tri = is_triangularizable(span.span_basis, n);

  Report rep;
  rep.check = "supercomm_dimension";
  rep.dim = span.dim;
  rep.radical_dim = tri.radical_dim;
  rep.witness = tri.witness;
  rep.details["n"] = n;
  rep.details["bound"] = bound;
  rep.details["distinct_eigenvalues"] = distinct;
  rep.details["triangularizable"] = tri.pass;
  if (!distinct) {
    rep.details["bound_check"] = "hypothesis not met";
    rep.pass = true;
  } else {
    const bool holds = tri.pass && span.dim <= bound;
    rep.details["bound_check"] = holds ? "holds" : "violated";
    rep.pass = holds;
  }
  return rep;
}

Json to_json(const ConeSpan& span) {
  Json j;
  j["dim"] = span.dim;
  Json eq = Json::array();
  for (auto k : span.implicit_equalities) eq.push_back(k + 1);
  j["implicit_equalities"] = std::move(eq);
  Json basis = Json::array();
  for (const auto& b : span.span_basis) basis.push_back(matrix_to_json(b));
  j["basis"] = std::move(basis);
  j["interior_point"] = matrix_to_json(span.interior_point);
  return j;
}

}  // namespace posalg
