#include "posalg/lp.hpp"

#include "posalg/errors.hpp"

namespace posalg {
namespace {

struct Column {
  std::size_t var;
  bool negated;
};

// Index of the variable a constraint bounds below, if it is c * e_i with c > 0.
std::optional<std::size_t> unit_bound(const Vec& c) {
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (idx || sgn(c[i]) < 0) return std::nullopt;
    idx = i;
  }
  return idx;
}

}  // namespace

LpResult lp_max_capped(std::span<const Vec> constraints, std::span<const Rat> objective, const Rat& cap) {
  const std::size_t nvars = objective.size();
  if (sgn(cap) <= 0) throw DomainError("lp_max: cap must be positive");

  std::vector<bool> bounded(nvars, false);
  std::vector<const Vec*> rows_in;
  for (const auto& c : constraints) {
    if (c.size() != nvars) throw ShapeError("lp_max: constraint length mismatch");
    if (auto i = unit_bound(c)) {
      bounded[*i] = true;
    } else {
      rows_in.push_back(&c);
    }
  }

  std::vector<Column> columns;
  for (std::size_t v = 0; v < nvars; ++v) {
    columns.push_back({v, false});
    if (!bounded[v]) columns.push_back({v, true});
  }
  const std::size_t nstruct = columns.size();
  const std::size_t m = rows_in.size() + 1;  // + cap row
  const std::size_t ncols = nstruct + m;

  // Rows: -c.x + s = 0 for each constraint, objective.x + s = cap.
  std::vector<Vec> tab(m, Vec(ncols));
  Vec rhs(m);
  auto coeff = [&](const std::span<const Rat> f, const Column& col) {
    return col.negated ? Rat(-f[col.var]) : Rat(f[col.var]);
  };
  for (std::size_t r = 0; r < rows_in.size(); ++r) {
    for (std::size_t j = 0; j < nstruct; ++j) tab[r][j] = -coeff(*rows_in[r], columns[j]);
    tab[r][nstruct + r] = 1;
  }
  for (std::size_t j = 0; j < nstruct; ++j) tab[m - 1][j] = coeff(objective, columns[j]);
  tab[m - 1][nstruct + m - 1] = 1;
  rhs[m - 1] = cap;

  Vec reduced(ncols);  // objective coefficients minus c_B B^-1 A
  for (std::size_t j = 0; j < nstruct; ++j) reduced[j] = coeff(objective, columns[j]);
  Rat value = 0;

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = nstruct + r;

  LpResult result;
  std::vector<std::size_t> nz;
  Rat t;
  for (;;) {
    // Bland: lowest-index improving column.
    std::size_t enter = ncols;
    for (std::size_t j = 0; j < ncols; ++j) {
      if (sgn(reduced[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == ncols) break;

    // Ratio test; ties go to the lowest basic variable index.
    std::size_t leave = m;
    Rat best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(tab[r][enter]) <= 0) continue;
      Rat ratio = rhs[r] / tab[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (leave == m) throw InternalError("lp_max: unbounded direction in a capped cone");

    const Rat piv = tab[leave][enter];
    for (auto& x : tab[leave]) {
      if (sgn(x) != 0) x /= piv;
    }
    rhs[leave] /= piv;
    nz.clear();
    for (std::size_t j = 0; j < ncols; ++j) {
      if (sgn(tab[leave][j]) != 0) nz.push_back(j);
    }
    auto eliminate = [&](Vec& row, Rat& row_rhs) {
      const Rat f = row[enter];
      if (sgn(f) == 0) return;
      for (auto j : nz) {
        t = f * tab[leave][j];
        row[j] -= t;
      }
      if (sgn(rhs[leave]) != 0) {
        t = f * rhs[leave];
        row_rhs -= t;
      }
    };
    for (std::size_t r = 0; r < m; ++r) {
      if (r != leave) eliminate(tab[r], rhs[r]);
    }
    Rat neg_value = -value;
    eliminate(reduced, neg_value);
    value = -neg_value;
    basis[leave] = enter;
    ++result.pivots;
  }

  result.value = value;
  result.point.assign(nvars, Rat(0));
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] >= nstruct) continue;
    const Column& col = columns[basis[r]];
    if (col.negated) {
      result.point[col.var] -= rhs[r];
    } else {
      result.point[col.var] += rhs[r];
    }
  }
  return result;
}

}  // namespace posalg
