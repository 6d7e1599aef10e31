#pragma once

#include "hss/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hss {

enum class FamilyTag {
  Grassmann,       // G(p,q), p >= q >= 2
  OrthGrassmann,   // G^II(n,n), n >= 4
  LagGrassmann,    // G^III(n,n), n >= 2
  Quadric,         // Q^n, n >= 3
  CayleyPlane,     // OP^2
  Freudenthal,     // E7/P7
};

enum class QuadricForm {
  Split,       // x1 x2 + x3 x4 + ... (+ xn^2 if n odd); rational isotropic vectors exist
  SumSquares,  // x1^2 + ... + xn^2, the form of the worked quadric example
};

struct HSSFamily {
  FamilyTag tag = FamilyTag::Grassmann;
  std::size_t p = 0;  // Grassmann only
  std::size_t q = 0;  // Grassmann only
  std::size_t n = 0;  // OrthGrassmann / LagGrassmann / Quadric
  QuadricForm form = QuadricForm::Split;

  static HSSFamily grassmann(std::size_t p, std::size_t q);
  static HSSFamily orth_grassmann(std::size_t n);
  static HSSFamily lag_grassmann(std::size_t n);
  static HSSFamily quadric(std::size_t n, QuadricForm form = QuadricForm::Split);
  static HSSFamily cayley_plane();
  static HSSFamily freudenthal();

  std::string name() const;  // e.g. "grassmann(3,2)", "quadric(5)"
  bool is_tube() const;

  friend bool operator==(const HSSFamily& a, const HSSFamily& b) {
    return a.tag == b.tag && a.p == b.p && a.q == b.q && a.n == b.n;
  }
};

struct ModelInfo {
  std::size_t n = 0;  // dim X = dim of the tangent space
  std::size_t r = 0;  // rank
  std::size_t N = 0;  // ambient projective dimension of the image
  std::vector<std::size_t> block_sizes;  // p_0 .. p_r, sums to N + 1
};

// Dimensions and graded block sizes of P^N = P(P_0 + ... + P_r).
// Throws std::invalid_argument on out-of-range parameters.
ModelInfo model_info(const HSSFamily& f);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace hss
