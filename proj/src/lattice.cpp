#include "posalg/lattice.hpp"

#include <algorithm>
#include <queue>

#include "posalg/errors.hpp"

namespace posalg {

CoordSet::CoordSet(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= n_) throw DomainError("coordinate index out of range");
}

CoordSet CoordSet::all(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return CoordSet(n, std::move(m));
}

bool CoordSet::contains(std::size_t i) const { return std::binary_search(members_.begin(), members_.end(), i); }

CoordSet CoordSet::intersect(const CoordSet& other) const {
  std::vector<std::size_t> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return CoordSet(n_, std::move(out));
}

CoordSet CoordSet::unite(const CoordSet& other) const {
  std::vector<std::size_t> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::back_inserter(out));
  return CoordSet(n_, std::move(out));
}

Json to_json(const CoordSet& s) {
  Json j = Json::array();
  for (auto i : s.members()) j.push_back(i + 1);
  return j;
}

Json permutation_to_json(std::span<const std::size_t> perm) {
  Json j = Json::array();
  for (auto i : perm) j.push_back(i + 1);
  return j;
}

CoordSet null_ideal(const Mat& a) {
  require_nonnegative(a, "null_ideal");
  std::vector<std::size_t> m;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (a.col_is_zero(j)) m.push_back(j);
  }
  return CoordSet(a.cols(), std::move(m));
}

CoordSet range_ideal(const Mat& a) {
  require_nonnegative(a, "range_ideal");
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a.row_is_zero(i)) m.push_back(i);
  }
  return CoordSet(a.rows(), std::move(m));
}

CoordSet disjoint_complement(const CoordSet& s) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (!s.contains(i)) m.push_back(i);
  }
  return CoordSet(s.n(), std::move(m));
}

std::vector<std::string> band_identity_violations(const Mat& e, const BandSplit& s) {
  std::vector<std::string> bad;
  for (const auto* zero_rows : {&s.l1, &s.l4}) {
    for (auto i : zero_rows->members()) {
      if (!e.row_is_zero(i)) bad.push_back("row " + std::to_string(i + 1) + " should be zero");
    }
  }
  for (const auto* zero_cols : {&s.l1, &s.l2}) {
    for (auto j : zero_cols->members()) {
      if (!e.col_is_zero(j)) bad.push_back("column " + std::to_string(j + 1) + " should be zero");
    }
  }
  if (s.g * s.g != s.g) bad.push_back("G^2 != G");
  for (std::size_t j = 0; j < s.g.cols(); ++j) {
    if (s.g.col_is_zero(j)) bad.push_back("N(G) is nonzero");
  }
  for (std::size_t i = 0; i < s.g.rows(); ++i) {
    if (s.g.row_is_zero(i)) bad.push_back("R(G) is not all of L3");
  }
  if (s.x * s.g != s.x) bad.push_back("XG != X");
  if (s.g * s.y != s.y) bad.push_back("GY != Y");
  if (s.x * s.y != s.z) bad.push_back("Z != XY");
  return bad;
}

BandSplit band_split(const Mat& e) {
  require_square(e, "band_split");
  require_nonnegative(e, "band_split");
  if (e * e != e) throw DomainError("band_split: matrix is not idempotent");

  const CoordSet null = null_ideal(e);
  const CoordSet range = range_ideal(e);
  const CoordSet null_d = disjoint_complement(null);
  const CoordSet range_d = disjoint_complement(range);

  BandSplit s;
  s.l1 = null.intersect(range_d);
  s.l2 = null.intersect(range);
  s.l3 = null_d.intersect(range);
  s.l4 = null_d.intersect(range_d);
  s.g = e.block(s.l3.members(), s.l3.members());
  s.x = e.block(s.l2.members(), s.l3.members());
  s.y = e.block(s.l3.members(), s.l4.members());
  s.z = e.block(s.l2.members(), s.l4.members());

  if (auto bad = band_identity_violations(e, s); !bad.empty())
    throw InternalError("band_split self-check failed: " + bad.front());
  return s;
}

Json to_json(const BandSplit& s) {
  Json j;
  j["L1"] = to_json(s.l1);
  j["L2"] = to_json(s.l2);
  j["L3"] = to_json(s.l3);
  j["L4"] = to_json(s.l4);
  j["G"] = matrix_to_json(s.g);
  j["X"] = matrix_to_json(s.x);
  j["Y"] = matrix_to_json(s.y);
  j["Z"] = matrix_to_json(s.z);
  return j;
}

namespace {

using Graph = std::vector<std::vector<std::size_t>>;

Graph support_graph(const Mat& s) {
  Graph g(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      if (i != j && sgn(s(i, j)) > 0) g[i].push_back(j);
    }
  return g;
}

// Iterative Tarjan; returns component id per vertex.
std::vector<std::size_t> strong_components(const Graph& g, std::size_t& count) {
  const std::size_t n = g.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n), comp(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t counter = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < g[v].size()) {
        const std::size_t w = g[v][edge++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != v);
        ++count;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

// Components in topological order of the condensation, smallest-index tie break.
std::vector<std::vector<std::size_t>> ordered_components(const Mat& s) {
  const Graph g = support_graph(s);
  std::size_t count = 0;
  const auto comp = strong_components(g, count);

  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t v = 0; v < g.size(); ++v) members[comp[v]].push_back(v);  // ascending

  std::vector<std::vector<std::size_t>> succ(count);
  std::vector<std::size_t> indegree(count, 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (auto w : g[v]) {
      if (comp[v] == comp[w]) continue;
      succ[comp[v]].push_back(comp[w]);
      ++indegree[comp[w]];
    }
  }
  using Key = std::pair<std::size_t, std::size_t>;  // (smallest member, component)
  std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
  for (std::size_t c = 0; c < count; ++c) {
    if (indegree[c] == 0) ready.emplace(members[c].front(), c);
  }
  std::vector<std::vector<std::size_t>> out;
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    out.push_back(members[c]);
    for (auto d : succ[c]) {
      if (--indegree[d] == 0) ready.emplace(members[d].front(), d);
    }
  }
  return out;
}

Mat union_support(std::span<const Mat> family, const char* what) {
  if (family.empty()) throw ShapeError(std::string(what) + ": empty family");
  const std::size_t n = family.front().rows();
  Mat sum(n, n);
  for (const auto& m : family) {
    require_square(m, what);
    if (m.rows() != n) throw ShapeError(std::string(what) + ": family members differ in size");
    require_nonnegative(m, what);
    sum += m;
  }
  return sum;
}

}  // namespace

FrobeniusForm frobenius_form(const Mat& s) {
  require_square(s, "frobenius_form");
  require_nonnegative(s, "frobenius_form");
  FrobeniusForm f;
  for (const auto& comp : ordered_components(s)) {
    f.block_sizes.push_back(comp.size());
    f.blocks.push_back(s.block(comp, comp));
    f.permutation.insert(f.permutation.end(), comp.begin(), comp.end());
  }
  f.permuted = s.permuted(f.permutation);
  return f;
}

std::optional<CoordSet> is_ideal_reducible(std::span<const Mat> family) {
  const Mat s = union_support(family, "is_ideal_reducible");
  const auto comps = ordered_components(s);
  if (comps.size() < 2) return std::nullopt;
  // The first component in topological order receives no edges from outside.
  return CoordSet(s.rows(), comps.front());
}

std::optional<std::vector<std::size_t>> ideal_triangularizable(std::span<const Mat> family) {
  const Mat s = union_support(family, "ideal_triangularizable");
  const auto comps = ordered_components(s);
  std::vector<std::size_t> perm;
  for (const auto& c : comps) {
    if (c.size() != 1) return std::nullopt;
    perm.push_back(c.front());
  }
  return perm;
}

}  // namespace posalg
