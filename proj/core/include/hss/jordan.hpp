#pragma once

#include "hss/octonion.hpp"

#include <array>

namespace hss {

/// Element of the 27-dimensional Jordan algebra J3(O) of Hermitian 3x3
/// matrices over the (split) octonions:
///   [[c1,      x,       y ],
///    [conj(x), c2,      z ],
///    [conj(y), conj(z), c3]]
struct JordanElem {
  std::array<Rat, 3> c{Rat(0), Rat(0), Rat(0)};
  Oct x, y, z;

  JordanElem() = default;
  JordanElem(std::array<Rat, 3> c_, Oct x_, Oct y_, Oct z_)
      : c(std::move(c_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static JordanElem diag(const Rat& a, const Rat& b, const Rat& d) {
    return JordanElem({a, b, d}, Oct{}, Oct{}, Oct{});
  }
  static JordanElem identity() { return diag(1, 1, 1); }

  bool is_zero() const;

  friend bool operator==(const JordanElem& a, const JordanElem& b) = default;
  friend JordanElem operator+(const JordanElem& a, const JordanElem& b);
  friend JordanElem operator*(const Rat& s, const JordanElem& m);
};

// Cubic norm: det m = c1 c2 c3 - c1 N(z) - c2 N(y) - c3 N(x) + B(xz, y).
Rat jordan_det(const JordanElem& m);

// Freudenthal adjugate m#: adj(adj(m)) = det(m) * m; rank <= 1 iff m# = 0.
JordanElem jordan_adj(const JordanElem& m);

// 0 iff m = 0; <=1 iff adj(m) = 0; <=2 iff det(m) = 0; else 3.
int jordan_rank(const JordanElem& m);

// Rank <= 1 completion of the off-diagonal pair (u, w):
//   c1 = 1, x = u, y = w, c2 = N(u), c3 = N(w), z = conj(u) w.
// Throws std::logic_error if the adjugate fails to vanish (cannot happen).
JordanElem op2_chart(const Oct& u, const Oct& w);

// Jordan product (a b + b a) / 2 of the Hermitian matrices; the result is
// again Hermitian with scalar diagonal (asserted). Satisfies
// jordan_mul(m, jordan_adj(m)) = jordan_det(m) * identity.
JordanElem jordan_mul(const JordanElem& a, const JordanElem& b);

// Order-3 automorphism cycling the diagonal: (c1,c2,c3,x,y,z) ->
// (c2,c3,c1, z, conj(x), conj(y)). Preserves det and adjugate-rank; used to
// diversify rank-1 sampling.
JordanElem jordan_cycle(const JordanElem& m);

// Fixed 27-coordinate order (c1, c2, c3, x[8], y[8], z[8]) with octonions
// flattened by oct_coords.
RatVec jordan_coords(const JordanElem& m);
JordanElem jordan_from_coords(const RatVec& c);

}  // namespace hss
