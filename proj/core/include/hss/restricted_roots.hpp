#pragma once

#include "hss/root_system.hpp"

#include <cstddef>
#include <vector>

namespace hss {

/// Coefficients of the orthogonal projection of a root onto span(Pi),
/// expressed in the basis Pi of strongly orthogonal roots; each entry lies
/// in {0, +-1/2, +-1}.
struct RestrictedRoot {
  RatVec coeff;

  friend bool operator==(const RestrictedRoot& a, const RestrictedRoot& b) = default;

  bool is_zero() const;
  // c = (1/2)(e_l + e_j) with l <= j (l = j encodes the coefficient-1 case);
  // returns true and sets l, j (1-based).
  bool is_half_pair(std::size_t& l, std::size_t& j) const;
  // c = +-(1/2) e_l; returns true and sets l (1-based).
  bool is_half_single(std::size_t& l) const;
};

struct TubeReport {
  bool is_tube = false;
  // Positive noncompact roots restricting to (1/2) alpha_l, with l.
  std::vector<std::pair<Root, std::size_t>> violations;
};

// Greedy maximal chain of pairwise strongly orthogonal noncompact positive
// roots: alpha_1 = highest root, alpha_j = highest remaining strongly
// orthogonal root. The height maximum is unique at each step (asserted).
std::vector<Root> strongly_orthogonal_chain(const MarkedDatum& d);

// True iff alpha and beta are orthogonal and neither sum nor difference is
// a root.
bool strongly_orthogonal(const RootDatum& datum, const RatVec& a, const RatVec& b);

// Projection of beta onto span(Pi) in the Pi basis; throws std::logic_error
// if any coefficient falls outside {0, +-1/2, +-1} or the signed pattern is
// not one of the classified shapes (must never fire).
RestrictedRoot restrict_root(const RatVec& beta, const std::vector<Root>& chain);

TubeReport classify_tube(const MarkedDatum& d);

// dim N_k: number of beta in the noncompact positive roots such that exactly
// one alpha_s, s <= k, has alpha_s - beta a root.
std::size_t infinity_locus_dim(const MarkedDatum& d, std::size_t k);

// Number of noncompact positive beta restricting to (1/2)(alpha_l + alpha_j)
// with 1 <= l <= j <= k.
std::size_t balanced_dim(const MarkedDatum& d, std::size_t k);

// Number of noncompact positive beta restricting to (1/2)(alpha_l + alpha_j)
// or (1/2) alpha_l with l, j >= k+1. Accepts 0 <= k <= r (k = r gives 0).
std::size_t char_dim(const MarkedDatum& d, std::size_t k);

// True iff the noncompact positive roots split disjointly and exhaustively
// into the three restriction classes {l,j >= r-k+2}, {l,j <= r-k+1} and
// {l <= r-k+1 < j}.
bool transversal_partition(const MarkedDatum& d, std::size_t k);

struct BBRow {
  std::size_t i = 0;
  std::size_t dim_N = 0;
  std::size_t plus_fiber = 0;
  std::size_t minus_fiber = 0;
};

// Rows i = 1..r with dim N_i, the plus-cell fiber char_dim(d, i) and the
// minus-cell fiber balanced_dim(d, i); every row must close to
// dim N_i + plus + minus = |noncompact| (throws std::logic_error otherwise).
std::vector<BBRow> bb_dimension_table(const MarkedDatum& d);

}  // namespace hss
