#include "hss/jordan.hpp"

#include <stdexcept>

namespace hss {

bool JordanElem::is_zero() const {
  return c[0] == 0 && c[1] == 0 && c[2] == 0 && x.is_zero() && y.is_zero() && z.is_zero();
}

JordanElem operator+(const JordanElem& a, const JordanElem& b) {
  return JordanElem({a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}, a.x + b.x,
                    a.y + b.y, a.z + b.z);
}

JordanElem operator*(const Rat& s, const JordanElem& m) {
  return JordanElem({s * m.c[0], s * m.c[1], s * m.c[2]}, s * m.x, s * m.y, s * m.z);
}

Rat jordan_det(const JordanElem& m) {
  return m.c[0] * m.c[1] * m.c[2] - m.c[0] * oct_norm(m.z) - m.c[1] * oct_norm(m.y) -
         m.c[2] * oct_norm(m.x) + oct_bilinear(oct_mul(m.x, m.z), m.y);
}

JordanElem jordan_adj(const JordanElem& m) {
  JordanElem a;
  a.c[0] = m.c[1] * m.c[2] - oct_norm(m.z);
  a.c[1] = m.c[0] * m.c[2] - oct_norm(m.y);
  a.c[2] = m.c[0] * m.c[1] - oct_norm(m.x);
  a.x = oct_mul(m.y, oct_conj(m.z)) - m.c[2] * m.x;
  a.y = oct_mul(m.x, m.z) - m.c[1] * m.y;
  a.z = oct_mul(oct_conj(m.x), m.y) - m.c[0] * m.z;
  return a;
}

int jordan_rank(const JordanElem& m) {
  if (m.is_zero()) return 0;
  if (jordan_adj(m).is_zero()) return 1;
  if (jordan_det(m) == 0) return 2;
  return 3;
}

JordanElem op2_chart(const Oct& u, const Oct& w) {
  JordanElem m({Rat(1), oct_norm(u), oct_norm(w)}, u, w, oct_mul(oct_conj(u), w));
  if (!jordan_adj(m).is_zero())
    throw std::logic_error("op2_chart: adjugate failed to vanish");
  return m;
}

namespace {

using OctMat3 = std::array<std::array<Oct, 3>, 3>;

OctMat3 hermitian_matrix(const JordanElem& m) {
  OctMat3 h;
  h[0][0] = Oct(m.c[0]);
  h[1][1] = Oct(m.c[1]);
  h[2][2] = Oct(m.c[2]);
  h[0][1] = m.x;
  h[1][0] = oct_conj(m.x);
  h[0][2] = m.y;
  h[2][0] = oct_conj(m.y);
  h[1][2] = m.z;
  h[2][1] = oct_conj(m.z);
  return h;
}

OctMat3 mat_mul3(const OctMat3& a, const OctMat3& b) {
  OctMat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Oct s;
      for (int k = 0; k < 3; ++k) s = s + oct_mul(a[i][k], b[k][j]);
      c[i][j] = s;
    }
  return c;
}

}  // namespace

JordanElem jordan_mul(const JordanElem& a, const JordanElem& b) {
  const OctMat3 ma = hermitian_matrix(a);
  const OctMat3 mb = hermitian_matrix(b);
  const OctMat3 ab = mat_mul3(ma, mb);
  const OctMat3 ba = mat_mul3(mb, ma);
  const Rat half(1, 2);
  OctMat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s[i][j] = half * (ab[i][j] + ba[i][j]);
  // the symmetrized product is Hermitian with scalar diagonal
  for (int i = 0; i < 3; ++i) {
    if (s[i][i].a != s[i][i].b || s[i][i].u != std::array<Rat, 3>{Rat(0), Rat(0), Rat(0)} ||
        s[i][i].v != std::array<Rat, 3>{Rat(0), Rat(0), Rat(0)})
      throw std::logic_error("jordan_mul: non-scalar diagonal");
    for (int j = i + 1; j < 3; ++j)
      if (!(s[j][i] == oct_conj(s[i][j])))
        throw std::logic_error("jordan_mul: result not Hermitian");
  }
  return JordanElem({s[0][0].a, s[1][1].a, s[2][2].a}, s[0][1], s[0][2], s[1][2]);
}

JordanElem jordan_cycle(const JordanElem& m) {
  return JordanElem({m.c[1], m.c[2], m.c[0]}, m.z, oct_conj(m.x), oct_conj(m.y));
}

RatVec jordan_coords(const JordanElem& m) {
  RatVec out = {m.c[0], m.c[1], m.c[2]};
  for (const Oct* o : {&m.x, &m.y, &m.z}) {
    RatVec oc = oct_coords(*o);
    out.insert(out.end(), oc.begin(), oc.end());
  }
  return out;
}

JordanElem jordan_from_coords(const RatVec& c) {
  if (c.size() != 27) throw std::invalid_argument("jordan_from_coords: need 27 coordinates");
  auto slice = [&](std::size_t off) { return RatVec(c.begin() + off, c.begin() + off + 8); };
  return JordanElem({c[0], c[1], c[2]}, oct_from_coords(slice(3)), oct_from_coords(slice(11)),
                    oct_from_coords(slice(19)));
}

}  // namespace hss
