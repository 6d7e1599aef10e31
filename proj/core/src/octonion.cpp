#include "hss/octonion.hpp"

#include <stdexcept>

namespace hss {

namespace {

using Vec3 = std::array<Rat, 3>;

Rat dot3(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross3(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Vec3 add3(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }

Vec3 sub3(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }

Vec3 scale3(const Rat& c, const Vec3& x) { return {c * x[0], c * x[1], c * x[2]}; }

Vec3 neg3(const Vec3& x) { return {-x[0], -x[1], -x[2]}; }

}  // namespace

bool Oct::is_zero() const {
  return a == 0 && b == 0 && u[0] == 0 && u[1] == 0 && u[2] == 0 && v[0] == 0 &&
         v[1] == 0 && v[2] == 0;
}

Oct operator+(const Oct& x, const Oct& y) {
  return Oct(x.a + y.a, x.b + y.b, add3(x.u, y.u), add3(x.v, y.v));
}

Oct operator-(const Oct& x, const Oct& y) {
  return Oct(x.a - y.a, x.b - y.b, sub3(x.u, y.u), sub3(x.v, y.v));
}

Oct operator*(const Rat& c, const Oct& x) {
  return Oct(c * x.a, c * x.b, scale3(c, x.u), scale3(c, x.v));
}

Oct oct_mul(const Oct& x, const Oct& y) {
  Oct z;
  z.a = x.a * y.a + dot3(x.u, y.v);
  z.u = sub3(add3(scale3(x.a, y.u), scale3(y.b, x.u)), cross3(x.v, y.v));
  z.v = add3(add3(scale3(y.a, x.v), scale3(x.b, y.v)), cross3(x.u, y.u));
  z.b = x.b * y.b + dot3(x.v, y.u);
  return z;
}

Oct oct_conj(const Oct& x) { return Oct(x.b, x.a, neg3(x.u), neg3(x.v)); }

Rat oct_norm(const Oct& x) { return x.a * x.b - dot3(x.u, x.v); }

Rat oct_bilinear(const Oct& x, const Oct& y) {
  return x.a * y.b + x.b * y.a - dot3(x.u, y.v) - dot3(y.u, x.v);
}

Rat oct_trace(const Oct& x) { return x.a + x.b; }

RatVec oct_coords(const Oct& x) {
  return {x.a, x.b, x.u[0], x.u[1], x.u[2], x.v[0], x.v[1], x.v[2]};
}

Oct oct_from_coords(const RatVec& c) {
  if (c.size() != 8) throw std::invalid_argument("oct_from_coords: need 8 coordinates");
  return Oct(c[0], c[1], {c[2], c[3], c[4]}, {c[5], c[6], c[7]});
}

}  // namespace hss
