#pragma once

#include "hss/family.hpp"
#include "hss/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hss {

/// A root, held both in orthonormal ambient coordinates and as the
/// (nonnegative, integral for positive roots) coefficient vector over the
/// simple roots.
struct Root {
  RatVec ambient;       // coordinates in the orthonormal ambient basis
  RatVec simple_coeff;  // coefficients over the simple roots
  long height = 0;      // sum of simple coefficients

  friend bool operator==(const Root& a, const Root& b) { return a.ambient == b.ambient; }
};

/// Root system of type A/B/C/D/E6/E7, realized in the standard orthonormal
/// ambient coordinates and closed up from the simple roots by root strings.
struct RootDatum {
  std::string label;         // "A5", "D4", "E7", ...
  std::size_t rank = 0;      // number of simple roots
  std::size_t ambient_dim = 0;
  std::vector<RatVec> simple_roots;
  std::vector<Root> positive_roots;  // sorted by (height, simple_coeff lex)

  bool is_root(const RatVec& v) const;        // membership in +-positive_roots
  bool is_positive_root(const RatVec& v) const;
};

RootDatum build_root_system_A(std::size_t m);  // ambient dim m+1
RootDatum build_root_system_B(std::size_t m);
RootDatum build_root_system_C(std::size_t m);
RootDatum build_root_system_D(std::size_t m);
RootDatum build_root_system_E6();              // Bourbaki, ambient dim 8
RootDatum build_root_system_E7();

/// Root datum plus the cominuscule marked node (1-based index into
/// simple_roots) defining X = G/P; noncompact positive roots are those
/// with coefficient exactly 1 on the marked node.
struct MarkedDatum {
  RootDatum datum;
  std::size_t marked_node = 0;        // 1-based
  std::vector<Root> noncompact;       // positive roots with marked coefficient 1
};

// A_{p+q-1} node p for G(p,q); D_n node n for G^II; C_n node n for G^III;
// B_{(n+1)/2} or D_{n/2+1} node 1 for Q^n; E6 node 1 for OP^2; E7 node 7.
// Throws std::logic_error if any positive root carries a marked coefficient
// greater than 1 (the node would not be cominuscule).
MarkedDatum build_marked_datum(const HSSFamily& f);

}  // namespace hss
