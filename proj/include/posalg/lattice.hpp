#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posalg/mat.hpp"
#include "posalg/matrix_io.hpp"

namespace posalg {

/// A coordinate ideal of R^n: the span of the standard basis vectors whose
/// (0-based) indices are members. In R^n every ideal is a band of this form.
class CoordSet {
 public:
  CoordSet() = default;
  CoordSet(std::size_t n, std::vector<std::size_t> members);
  static CoordSet all(std::size_t n);
  static CoordSet none(std::size_t n) { return CoordSet(n, {}); }

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool full() const { return members_.size() == n_; }
  bool contains(std::size_t i) const;

  CoordSet intersect(const CoordSet& other) const;
  CoordSet unite(const CoordSet& other) const;

  friend bool operator==(const CoordSet&, const CoordSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> members_;  // sorted, unique
};

/// Sorted 1-based integer list.
Json to_json(const CoordSet& s);
/// One-line 1-based array.
Json permutation_to_json(std::span<const std::size_t> perm);

/// Indices of zero columns: they generate N(A) for nonnegative A.
CoordSet null_ideal(const Mat& a);
/// Indices of nonzero rows: R(A) for nonnegative A.
CoordSet range_ideal(const Mat& a);
/// Complementary coordinate band.
CoordSet disjoint_complement(const CoordSet& s);

/// The four bands of a positive idempotent E and its blocks
///   G = E[L3,L3], X = E[L2,L3], Y = E[L3,L4], Z = E[L2,L4].
struct BandSplit {
  CoordSet l1, l2, l3, l4;
  Mat g, x, y, z;
};

/// Throws DomainError unless E is a nonnegative idempotent; the block
/// identities are self-checked and an InternalError signals a violation.
BandSplit band_split(const Mat& e);

/// Block-form violations for a given split of E (empty list when all hold):
/// zero rows on L1 u L4, zero columns on L1 u L2, G^2 = G, N(G) = {},
/// R(G) = L3, XG = X, GY = Y, Z = XY.
std::vector<std::string> band_identity_violations(const Mat& e, const BandSplit& split);

Json to_json(const BandSplit& split);

/// Permutation (perm[new] = old) putting S in block upper triangular form
/// with strongly connected diagonal blocks.
struct FrobeniusForm {
  std::vector<std::size_t> permutation;
  std::vector<std::size_t> block_sizes;
  std::vector<Mat> blocks;
  Mat permuted;  // P^T S P
};

/// Support digraph: edge i -> j iff S_ij > 0. Components are listed in a
/// topological order of the condensation; ties go to the component with the
/// smallest original index, and indices within a component ascend.
FrobeniusForm frobenius_form(const Mat& s);

/// A nontrivial coordinate set invariant under every member (A_ij > 0 and
/// j in S imply i in S), or nullopt when the family is ideal-irreducible.
std::optional<CoordSet> is_ideal_reducible(std::span<const Mat> family);

/// A permutation making every member upper triangular, or nullopt. Exists iff
/// every strongly connected component of the union support digraph is a singleton.
std::optional<std::vector<std::size_t>> ideal_triangularizable(std::span<const Mat> family);

}  // namespace posalg
