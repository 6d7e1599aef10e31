#pragma once

#include "hss/proj_point.hpp"
#include "hss/tangent.hpp"

#include <cstddef>
#include <vector>

namespace hss {

// The birational map P^n -> P^N with graded blocks
//   (x0^r; x0^{r-1} x; x0^{r-2} F_1(x); ...; F_{r-1}(x)),
// where x = (x1..xn) is read as a tangent vector. Throws std::domain_error
// (naming the stratum: x0 = 0 and the tangent rank) when every block
// vanishes, i.e. on the indeterminacy locus.
ProjPoint phi(const HSSFamily& f, const ProjPoint& x);

// Convenience: phi at the affine point [1 : flatten(v)].
ProjPoint phi_affine(const HSSFamily& f, const TangentVec& v);

// Projection to the first two blocks (P_0 + P_1). Throws std::domain_error
// if they both vanish (the indeterminacy of the projection).
ProjPoint psi(const HSSFamily& f, const ProjPoint& z);

// The C*-flow limit of [1 : t v] as t -> infinity: the single-block point
// with block k = F_{k-1}(v) (block 1 = v when k = 1), k = tangent_rank(v).
// Consistency (F_j(v) = 0 for j >= k, F_{k-1}(v) != 0) is asserted; a
// violation throws std::logic_error. v = 0 throws std::invalid_argument.
ProjPoint phi_limit_at_infinity(const TangentVec& v);

// For tube families at full rank: the block-(r-1) value reassembled into
// the tangent shape; proportional to the inverse (adjugate / Pfaffian
// adjugate / Jordan adjugate; the quadric reassembly is the vector itself).
TangentVec infinity_inverse(const TangentVec& v);

// Source action [x0 : t x1 : ... : t xn]; t = 0 throws std::invalid_argument.
ProjPoint cstar_act_source(const Rat& t, const ProjPoint& x);

// Target action scaling block j by t^j; requires block structure.
ProjPoint cstar_act_target(const Rat& t, const ProjPoint& z);

// Plucker coordinates of the graph of A / x0: all q x q minors of the
// (p+q) x q stack [x0 I_q; A], lexicographic row-set order.
ProjPoint plucker_graph_oracle(std::size_t p, std::size_t q, const Rat& x0,
                               const RatMatrix& A);

/// Signed coordinate permutation aligning phi's output with the Plucker
/// oracle: oracle coordinate i equals sign[i] * phi coordinate perm[i].
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> sign;
};

// Computed once per (p,q) by evaluating both maps on indicator matrices
// whose minor vectors have a single nonzero slot.
SignedPermutation plucker_alignment(std::size_t p, std::size_t q);

}  // namespace hss
