#pragma once

#include "hss/rational.hpp"

#include <array>

namespace hss {

/// Split octonion in Zorn vector-matrix form [[a, u], [v, b]] with scalars
/// a, b and 3-vectors u, v. Every polynomial identity checked downstream
/// holds over C iff it holds on this split rational form.
struct Oct {
  Rat a{0}, b{0};
  std::array<Rat, 3> u{Rat(0), Rat(0), Rat(0)};
  std::array<Rat, 3> v{Rat(0), Rat(0), Rat(0)};

  Oct() = default;
  Oct(Rat a_, Rat b_, std::array<Rat, 3> u_, std::array<Rat, 3> v_)
      : a(std::move(a_)), b(std::move(b_)), u(std::move(u_)), v(std::move(v_)) {}
  // Scalar embedding (a = b = s).
  explicit Oct(const Rat& s) : a(s), b(s) {}

  static Oct unit() { return Oct(Rat(1)); }

  bool is_zero() const;

  friend bool operator==(const Oct& x, const Oct& y) = default;
  friend Oct operator+(const Oct& x, const Oct& y);
  friend Oct operator-(const Oct& x, const Oct& y);
  friend Oct operator*(const Rat& c, const Oct& x);
};

// Zorn product:
//   (a1,u1,v1,b1)(a2,u2,v2,b2) =
//     (a1a2 + u1.v2, a1u2 + b2u1 - v1xv2, a2v1 + b1v2 + u1xu2, b1b2 + v1.u2)
Oct oct_mul(const Oct& x, const Oct& y);

// Conjugate: swaps the scalars, negates the vectors.
Oct oct_conj(const Oct& x);

// Multiplicative norm N(x) = ab - u.v; x * conj(x) = N(x) * 1.
Rat oct_norm(const Oct& x);

// Polar form B(x,y) = N(x+y) - N(x) - N(y).
Rat oct_bilinear(const Oct& x, const Oct& y);

// Real part coefficient: x + conj(x) = oct_trace(x) * 1.
Rat oct_trace(const Oct& x);

// Fixed coordinate order (a, b, u0, u1, u2, v0, v1, v2) used everywhere an
// octonion is flattened to 8 rationals.
RatVec oct_coords(const Oct& x);
Oct oct_from_coords(const RatVec& c);

}  // namespace hss
