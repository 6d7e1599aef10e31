#pragma once

#include "hss/family.hpp"
#include "hss/jordan.hpp"
#include "hss/matrix.hpp"
#include "hss/octonion.hpp"
#include "hss/prng.hpp"

#include <cstdint>
#include <utility>
#include <variant>

namespace hss {

using OctPair = std::pair<Oct, Oct>;

/// Tangent vector at the base point, in the family's linear model:
/// p x q matrix | antisymmetric n x n | symmetric n x n | length-n vector |
/// octonion pair | Jordan element.
struct TangentVec {
  HSSFamily family;
  std::variant<RatMatrix, RatVec, OctPair, JordanElem> payload;

  bool is_zero() const;
};

// Shape/constraint validation; throws std::invalid_argument on mismatch.
void validate_tangent(const TangentVec& v);

TangentVec zero_tangent(const HSSFamily& f);

// Fixed linear coordinates of the tangent space (length model_info(f).n):
// row-major entries (Grassmann), strict upper triangle (OrthGrassmann),
// upper triangle with diagonal (LagGrassmann), the vector itself (Quadric),
// oct_coords(u) | oct_coords(w) (CayleyPlane), jordan_coords (Freudenthal).
RatVec flatten_tangent(const TangentVec& v);
TangentVec unflatten_tangent(const HSSFamily& f, const RatVec& coords);

// The value of the quadratic form on a quadric tangent vector.
Rat quadric_form(const HSSFamily& f, const RatVec& v);

// Rank: matrix rank / half matrix rank / quadric 0-1-2 / F_1 vanishing /
// Jordan rank, per family.
std::size_t tangent_rank(const TangentVec& v);

// Evaluation of the degree-(k+1) generator list F_k of the k-th secant
// ideal at v, in the canonical order. 1 <= k <= r-1.
RatVec secant_generators(const TangentVec& v, std::size_t k);

// For tube families: the single degree-r form whose nonvanishing marks full
// rank (det / Pfaffian / quadratic form / Jordan determinant).
Rat top_degree_form(const TangentVec& v);

// LagGrassmann only: the principal (k+1)-minors, the paper's alternate
// vanishing predicate for the k-th secant locus.
RatVec lag_principal_minors(const TangentVec& v, std::size_t k);

// Reproducible exact-rank-k sample: normal form swept by random unimodular
// integer transformations (matrix families), a split-form isotropic solve
// (quadric) or sums of k random rank-1 chart elements with verify-and-retry
// (exceptional families). Throws std::runtime_error if the rank is
// unreachable (quadric rank 1 under the sum-of-squares form, or retry
// exhaustion).
TangentVec random_tangent_of_rank(const HSSFamily& f, std::size_t k, SplitMix64& rng);

enum class EmbedCorner {
  Leading,   // balanced subspace: leading principal block
  Trailing,  // characteristic subspace: trailing principal block
};

// Places v_sub (same-tag matrix family with parameters <= f's) in the
// designated corner block of a zero tangent vector of f. Other subspace
// pairs are shape-incompatible and rejected with std::invalid_argument.
TangentVec submodel_embed(const HSSFamily& f, const TangentVec& v_sub,
                          EmbedCorner corner = EmbedCorner::Leading);

}  // namespace hss
