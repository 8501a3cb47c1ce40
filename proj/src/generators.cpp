#include "posalg/generators.hpp"

#include "posalg/lattice.hpp"
#include "posalg/poly.hpp"
#include "posalg/supercone.hpp"

namespace posalg::gen {
namespace {

Mat with_diagonal(const Mat& m, const std::vector<Rat>& d) {
  Mat out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) out(i, j) = m(i, j) * d[j] / d[i];
    }
  return out;
}

std::vector<Rat> random_diagonal(SplitMix64& rng, std::size_t n) {
  std::vector<Rat> d;
  for (std::size_t i = 0; i < n; ++i) d.emplace_back(rng.uniform(1, 3));
  return d;
}

std::vector<Rat> positive_vector(SplitMix64& rng, std::size_t n) {
  std::vector<Rat> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(rng.uniform(1, 3));
  return v;
}

// Places `inner` at the top-left of an n x n matrix and `tail` after it.
Mat direct_sum(const Mat& inner, const Mat& tail) {
  const std::size_t a = inner.rows();
  const std::size_t n = a + tail.rows();
  Mat m(n, n);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) m(i, j) = inner(i, j);
  for (std::size_t i = 0; i < tail.rows(); ++i)
    for (std::size_t j = 0; j < tail.rows(); ++j) m(a + i, a + j) = tail(i, j);
  return m;
}

Mat random_permutation_matrix(SplitMix64& rng, std::size_t n) {
  const auto p = rng.permutation(n);
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, p[i]) = 1;
  return m;
}

Mat upper_triangular(SplitMix64& rng, std::size_t n, long max_entry, unsigned density) {
  Mat m = random_nonnegative(rng, n, n, max_entry, density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = 0;
  return m;
}

// Direct sum of strictly positive rank-one idempotents over a random
// partition of {0..k-1}; no zero rows or columns. Also returns the blocks
// as separate k x k idempotents.
std::pair<Mat, std::vector<Mat>> positive_blocks(SplitMix64& rng, std::size_t k) {
  const auto groups = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(k)));
  std::vector<std::vector<std::size_t>> parts(groups);
  for (std::size_t t = 0; t < k; ++t) parts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(groups) - 1))].push_back(t);
  Mat g(k, k);
  std::vector<Mat> pieces;
  for (const auto& part : parts) {
    if (part.empty()) continue;
    const auto u = positive_vector(rng, part.size());
    const auto v = positive_vector(rng, part.size());
    const Mat r = rank_one_idempotent(u, v);
    Mat piece(k, k);
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = 0; b < part.size(); ++b) piece(part[a], part[b]) = r(a, b);
    g += piece;
    pieces.push_back(std::move(piece));
  }
  return {std::move(g), std::move(pieces)};
}

}  // namespace

Mat random_nonnegative(SplitMix64& rng, std::size_t rows, std::size_t cols, long max_entry, unsigned density) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng.chance(density, 100)) m(i, j) = rng.uniform(1, max_entry);
    }
  return m;
}

Mat diagonal_similarity(SplitMix64& rng, const Mat& m) { return with_diagonal(m, random_diagonal(rng, m.rows())); }

Mat rank_one(SplitMix64& rng, std::size_t n) {
  std::vector<Rat> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(60, 100)) u[i] = rng.uniform(1, 3);
    if (rng.chance(60, 100)) v[i] = rng.uniform(1, 3);
  }
  const auto pivot = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
  if (sgn(u[pivot]) == 0) u[pivot] = 1;
  if (sgn(v[pivot]) == 0) v[pivot] = 1;
  return rank_one_idempotent(u, v);
}

Mat column_selection(SplitMix64& rng, std::size_t n) {
  const auto order = rng.permutation(n);
  const auto groups = static_cast<std::size_t>(rng.uniform(1, std::max<std::int64_t>(1, static_cast<std::int64_t>(n) / 2)));
  // a_q = pivot_q + row members, b_q = pivot_q + column members.
  std::vector<std::vector<std::size_t>> a(groups), b(groups);
  for (std::size_t q = 0; q < groups; ++q) {
    a[q].push_back(order[q]);
    b[q].push_back(order[q]);
  }
  for (std::size_t t = groups; t < n; ++t) {
    const auto q = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(groups) - 1));
    switch (rng.uniform(0, 2)) {
      case 0: a[q].push_back(order[t]); break;
      case 1: b[q].push_back(order[t]); break;
      default: break;
    }
  }
  Mat e(n, n);
  for (std::size_t q = 0; q < groups; ++q)
    for (auto i : a[q])
      for (auto j : b[q]) e(i, j) = 1;
  return e;
}

Mat block_form(SplitMix64& rng, std::size_t n, const std::vector<bool>& force_null) {
  std::vector<int> label(n);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    const bool forced = !force_null.empty() && force_null[i];
    label[i] = forced ? static_cast<int>(rng.uniform(1, 2)) : static_cast<int>(rng.uniform(1, 4));
    if (!forced) free.push_back(i);
  }
  std::vector<std::size_t> l2, l3, l4;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] == 3) l3.push_back(i);
  }
  if (l3.empty()) {
    if (free.empty()) return Mat(n, n);
    const std::size_t pick = free[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(free.size()) - 1))];
    label[pick] = 3;
    l3.push_back(pick);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] == 2) l2.push_back(i);
    if (label[i] == 4) l4.push_back(i);
  }

  const std::size_t k = l3.size();
  const Mat g = positive_blocks(rng, k).first;
  const Mat x = random_nonnegative(rng, l2.size(), k, 2, 50) * g;
  const Mat y = g * random_nonnegative(rng, k, l4.size(), 2, 50);
  const Mat z = x * y;

  Mat e(n, n);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) e(l3[a], l3[b]) = g(a, b);
    for (std::size_t b = 0; b < l4.size(); ++b) e(l3[a], l4[b]) = y(a, b);
  }
  for (std::size_t a = 0; a < l2.size(); ++a) {
    for (std::size_t b = 0; b < k; ++b) e(l2[a], l3[b]) = x(a, b);
    for (std::size_t b = 0; b < l4.size(); ++b) e(l2[a], l4[b]) = z(a, b);
  }
  return e;
}

Mat idempotent(SplitMix64& rng, std::size_t n, IdempotentFamily family) {
  switch (family) {
    case IdempotentFamily::rank_one: return rank_one(rng, n);
    case IdempotentFamily::column_selection: return column_selection(rng, n);
    case IdempotentFamily::block_form: return block_form(rng, n);
  }
  return Mat(n, n);
}

Mat idempotent(SplitMix64& rng, std::size_t n) {
  const auto family = static_cast<IdempotentFamily>(rng.uniform(0, 2));
  Mat e = idempotent(rng, n, family);
  if (rng.chance(1, 2)) e = diagonal_similarity(rng, e);
  return e;
}

std::optional<IdempotentPair> comparable_pair(SplitMix64& rng, std::size_t n, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Mat e, f;
    switch (rng.uniform(0, 4)) {
      case 0:
        e = idempotent(rng, n);
        f = idempotent(rng, n);
        break;
      case 4: {
        // E without zero rows or columns; F a sum of some of its blocks or unrelated.
        auto [g, pieces] = positive_blocks(rng, n);
        e = std::move(g);
        if (rng.chance(1, 2)) {
          f = Mat(n, n);
          for (const auto& piece : pieces)
            if (rng.chance(1, 2)) f += piece;
        } else {
          f = idempotent(rng, n);
        }
        break;
      }
      case 1: {
        // FE = 0 whenever the range of E sits inside the null ideal of F.
        e = idempotent(rng, n);
        const CoordSet range = range_ideal(e);
        std::vector<bool> mask(n, false);
        for (auto i : range.members()) mask[i] = true;
        f = block_form(rng, n, mask);
        break;
      }
      case 2:
        if (n >= 6) {
          const bool seven = n >= 7 && rng.chance(1, 2);
          auto [ke, kf] = seven ? ks7_pair() : ks6_pair();
          const std::size_t rest = n - ke.rows();
          const Mat tail = rest > 0 ? idempotent(rng, rest) : Mat();
          e = rest > 0 ? direct_sum(ke, tail) : ke;
          f = rest > 0 ? direct_sum(kf, tail) : kf;
          break;
        }
        [[fallthrough]];
      default:
        e = rank_one(rng, n);
        f = rank_one(rng, n);
        break;
    }
    const auto perm = rng.permutation(n);
    e = e.permuted(perm);
    f = f.permuted(perm);
    if (rng.chance(1, 2)) {
      const auto d = random_diagonal(rng, n);
      e = with_diagonal(e, d);
      f = with_diagonal(f, d);
    }
    switch (classify_order(e, f)) {
      case Order::ef_ge_fe:
      case Order::equal: return IdempotentPair{e, f, classify_order(e, f)};
      case Order::ef_le_fe: return IdempotentPair{f, e, Order::ef_ge_fe};
      case Order::incomparable: break;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Mat, Mat>> positive_commutator_pair(SplitMix64& rng, std::size_t n, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Mat a, b;
    switch (rng.uniform(0, 7)) {
      case 0:
        a = upper_triangular(rng, n, 3, 60);
        b = upper_triangular(rng, n, 3, 60);
        break;
      case 4:
      case 5: {
        // strictly decreasing diagonal: [A,B]_ij = (a_i - a_j) b_ij for upper triangular B
        std::vector<Rat> d;
        std::int64_t top = 1;
        for (std::size_t i = 0; i < n; ++i) top += rng.uniform(1, 3);
        for (std::size_t i = 0; i < n; ++i) {
          d.emplace_back(top);
          top -= rng.uniform(1, 2);
        }
        a = Mat::diagonal(d);
        b = upper_triangular(rng, n, 3, 70);
        break;
      }
      case 6:
      case 7: {
        // B drawn from the cone itself: a nonnegative combination of LP witnesses.
        a = random_nonnegative(rng, n, n, 2, 45);
        const ConeSpan span = cone_span(supercomm_spec(a, Side::left), Exec::serial);
        b = Mat(n, n);
        for (const auto& w : span.witnesses)
          if (rng.chance(1, 3)) b += Rat(rng.uniform(1, 2)) * w;
        break;
      }
      case 1: {
        a = random_nonnegative(rng, n, n, 2, 40);
        const Mat a2 = a * a;
        b = Rat(rng.uniform(0, 2)) * Mat::identity(n) + Rat(rng.uniform(0, 2)) * a + Rat(rng.uniform(0, 2)) * a2;
        break;
      }
      case 2: {
        a = Rat(rng.uniform(1, 3)) * Mat::ones(n) + Rat(rng.uniform(0, 2)) * Mat::identity(n);
        b = Mat(n, n);
        const auto terms = rng.uniform(1, 3);
        for (std::int64_t t = 0; t < terms; ++t) b += Rat(rng.uniform(1, 2)) * random_permutation_matrix(rng, n);
        break;
      }
      default:
        a = random_nonnegative(rng, n, n, 2, 30);
        b = random_nonnegative(rng, n, n, 2, 30);
        break;
    }
    if (!commutator(a, b).is_nonnegative()) continue;
    const auto perm = rng.permutation(n);
    const auto d = random_diagonal(rng, n);
    return std::pair{with_diagonal(a.permuted(perm), d), with_diagonal(b.permuted(perm), d)};
  }
  return std::nullopt;
}

std::optional<Mat> distinct_eigenvalue_matrix(SplitMix64& rng, std::size_t n, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    Mat a;
    if (rng.chance(1, 2)) {
      a = upper_triangular(rng, n, 2, 40);
      for (std::size_t i = 0; i < n; ++i) a(i, i) = rng.uniform(0, 3 * static_cast<std::int64_t>(n));
      a = a.permuted(rng.permutation(n));
    } else {
      a = random_nonnegative(rng, n, n, 2, 40);
      for (std::size_t i = 0; i < n; ++i) a(i, i) += rng.uniform(0, 3 * static_cast<std::int64_t>(n));
    }
    if (has_distinct_eigenvalues(a)) return a;
  }
  return std::nullopt;
}

std::optional<std::pair<Mat, Mat>> key_instance(SplitMix64& rng, std::size_t n, std::size_t budget) {
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    switch (rng.uniform(0, 2)) {
      case 0: {
        auto pair = comparable_pair(rng, n, 1);
        if (!pair) continue;
        if (rng.chance(1, 2)) return std::pair{pair->e, pair->f};
        return std::pair{pair->f, pair->e};
      }
      case 1: {
        Mat e = idempotent(rng, n);
        Mat a = random_nonnegative(rng, n, n, 2, 30);
        const Mat ae = a * e;
        const Mat ea = e * a;
        if (entrywise_ge(ae, ea) || entrywise_ge(ea, ae)) return std::pair{std::move(e), std::move(a)};
        break;
      }
      default: {
        // A = sE + tI + N with EN = NE = 0 commutes with E.
        Mat e = idempotent(rng, n);
        const CoordSet null = null_ideal(e);
        const CoordSet zero_rows = disjoint_complement(range_ideal(e));
        Mat nmat(n, n);
        for (auto i : null.members())
          for (auto j : zero_rows.members()) {
            if (rng.chance(1, 2)) nmat(i, j) = rng.uniform(1, 2);
          }
        Mat a = Rat(rng.uniform(0, 2)) * e + Rat(rng.uniform(0, 2)) * Mat::identity(n) + nmat;
        return std::pair{std::move(e), std::move(a)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace posalg::gen
