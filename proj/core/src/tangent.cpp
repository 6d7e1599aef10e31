#include "hss/tangent.hpp"

#include <stdexcept>

namespace hss {

namespace {

const RatMatrix& as_matrix(const TangentVec& v) {
  if (const auto* m = std::get_if<RatMatrix>(&v.payload)) return *m;
  throw std::invalid_argument("tangent payload: expected matrix");
}

const RatVec& as_vector(const TangentVec& v) {
  if (const auto* w = std::get_if<RatVec>(&v.payload)) return *w;
  throw std::invalid_argument("tangent payload: expected vector");
}

const OctPair& as_oct_pair(const TangentVec& v) {
  if (const auto* o = std::get_if<OctPair>(&v.payload)) return *o;
  throw std::invalid_argument("tangent payload: expected octonion pair");
}

const JordanElem& as_jordan(const TangentVec& v) {
  if (const auto* j = std::get_if<JordanElem>(&v.payload)) return *j;
  throw std::invalid_argument("tangent payload: expected Jordan element");
}

RatVec cayley_f1(const OctPair& o) {
  RatVec out = {oct_norm(o.first), oct_norm(o.second)};
  const RatVec z = oct_coords(oct_mul(oct_conj(o.first), o.second));
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

bool all_zero(const RatVec& v) {
  for (const Rat& c : v)
    if (c != 0) return false;
  return true;
}

// Minors of a symmetric matrix for all (row set, col set) pairs with
// row set <= col set lexicographically.
RatVec symmetric_minors(const RatMatrix& m, std::size_t k) {
  RatVec out;
  const auto sets = combinations(m.rows(), k);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a; b < sets.size(); ++b)
      out.push_back(det(m.submatrix(sets[a], sets[b])));
  return out;
}

}  // namespace

bool TangentVec::is_zero() const {
  return std::visit(
      [](const auto& payload) -> bool {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, RatMatrix>) return payload.is_zero();
        if constexpr (std::is_same_v<T, RatVec>) return all_zero(payload);
        if constexpr (std::is_same_v<T, OctPair>)
          return payload.first.is_zero() && payload.second.is_zero();
        if constexpr (std::is_same_v<T, JordanElem>) return payload.is_zero();
      },
      payload);
}

void validate_tangent(const TangentVec& v) {
  switch (v.family.tag) {
    case FamilyTag::Grassmann: {
      const RatMatrix& m = as_matrix(v);
      if (m.rows() != v.family.p || m.cols() != v.family.q)
        throw std::invalid_argument("grassmann tangent: wrong shape");
      break;
    }
    case FamilyTag::OrthGrassmann: {
      const RatMatrix& m = as_matrix(v);
      if (m.rows() != v.family.n || !m.is_antisymmetric())
        throw std::invalid_argument("orth-grassmann tangent: not antisymmetric n x n");
      break;
    }
    case FamilyTag::LagGrassmann: {
      const RatMatrix& m = as_matrix(v);
      if (m.rows() != v.family.n || !m.is_symmetric())
        throw std::invalid_argument("lag-grassmann tangent: not symmetric n x n");
      break;
    }
    case FamilyTag::Quadric:
      if (as_vector(v).size() != v.family.n)
        throw std::invalid_argument("quadric tangent: wrong length");
      break;
    case FamilyTag::CayleyPlane:
      as_oct_pair(v);
      break;
    case FamilyTag::Freudenthal:
      as_jordan(v);
      break;
  }
}

TangentVec zero_tangent(const HSSFamily& f) {
  switch (f.tag) {
    case FamilyTag::Grassmann:
      return {f, RatMatrix(f.p, f.q)};
    case FamilyTag::OrthGrassmann:
    case FamilyTag::LagGrassmann:
      return {f, RatMatrix(f.n, f.n)};
    case FamilyTag::Quadric:
      return {f, RatVec(f.n, Rat(0))};
    case FamilyTag::CayleyPlane:
      return {f, OctPair{}};
    case FamilyTag::Freudenthal:
      return {f, JordanElem{}};
  }
  throw std::invalid_argument("zero_tangent: bad family");
}

RatVec flatten_tangent(const TangentVec& v) {
  validate_tangent(v);
  switch (v.family.tag) {
    case FamilyTag::Grassmann:
      return as_matrix(v).entries();
    case FamilyTag::OrthGrassmann: {
      const RatMatrix& m = as_matrix(v);
      RatVec out;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) out.push_back(m.at(i, j));
      return out;
    }
    case FamilyTag::LagGrassmann: {
      const RatMatrix& m = as_matrix(v);
      RatVec out;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) out.push_back(m.at(i, j));
      return out;
    }
    case FamilyTag::Quadric:
      return as_vector(v);
    case FamilyTag::CayleyPlane: {
      const OctPair& o = as_oct_pair(v);
      RatVec out = oct_coords(o.first);
      const RatVec w = oct_coords(o.second);
      out.insert(out.end(), w.begin(), w.end());
      return out;
    }
    case FamilyTag::Freudenthal:
      return jordan_coords(as_jordan(v));
  }
  throw std::invalid_argument("flatten_tangent: bad family");
}

TangentVec unflatten_tangent(const HSSFamily& f, const RatVec& coords) {
  const ModelInfo info = model_info(f);
  if (coords.size() != info.n)
    throw std::invalid_argument("unflatten_tangent: expected " + std::to_string(info.n) +
                                " coordinates");
  switch (f.tag) {
    case FamilyTag::Grassmann:
      return {f, RatMatrix(f.p, f.q, coords)};
    case FamilyTag::OrthGrassmann: {
      RatMatrix m(f.n, f.n);
      std::size_t t = 0;
      for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = i + 1; j < f.n; ++j) {
          m.at(i, j) = coords[t];
          m.at(j, i) = -coords[t];
          ++t;
        }
      return {f, std::move(m)};
    }
    case FamilyTag::LagGrassmann: {
      RatMatrix m(f.n, f.n);
      std::size_t t = 0;
      for (std::size_t i = 0; i < f.n; ++i)
        for (std::size_t j = i; j < f.n; ++j) {
          m.at(i, j) = coords[t];
          m.at(j, i) = coords[t];
          ++t;
        }
      return {f, std::move(m)};
    }
    case FamilyTag::Quadric:
      return {f, coords};
    case FamilyTag::CayleyPlane:
      return {f, OctPair{oct_from_coords(RatVec(coords.begin(), coords.begin() + 8)),
                         oct_from_coords(RatVec(coords.begin() + 8, coords.end()))}};
    case FamilyTag::Freudenthal:
      return {f, jordan_from_coords(coords)};
  }
  throw std::invalid_argument("unflatten_tangent: bad family");
}

Rat quadric_form(const HSSFamily& f, const RatVec& v) {
  if (f.tag != FamilyTag::Quadric) throw std::invalid_argument("quadric_form: wrong family");
  if (v.size() != f.n) throw std::invalid_argument("quadric_form: wrong length");
  Rat s = 0;
  if (f.form == QuadricForm::SumSquares) {
    for (const Rat& c : v) s += c * c;
  } else {
    std::size_t i = 0;
    for (; i + 1 < f.n; i += 2) s += v[i] * v[i + 1];
    if (i < f.n) s += v[i] * v[i];
  }
  return s;
}

std::size_t tangent_rank(const TangentVec& v) {
  validate_tangent(v);
  switch (v.family.tag) {
    case FamilyTag::Grassmann:
    case FamilyTag::LagGrassmann:
      return mat_rank(as_matrix(v));
    case FamilyTag::OrthGrassmann:
      return mat_rank(as_matrix(v)) / 2;
    case FamilyTag::Quadric: {
      const RatVec& w = as_vector(v);
      if (all_zero(w)) return 0;
      return quadric_form(v.family, w) == 0 ? 1 : 2;
    }
    case FamilyTag::CayleyPlane: {
      if (v.is_zero()) return 0;
      return all_zero(cayley_f1(as_oct_pair(v))) ? 1 : 2;
    }
    case FamilyTag::Freudenthal:
      return static_cast<std::size_t>(jordan_rank(as_jordan(v)));
  }
  throw std::invalid_argument("tangent_rank: bad family");
}

RatVec secant_generators(const TangentVec& v, std::size_t k) {
  validate_tangent(v);
  const ModelInfo info = model_info(v.family);
  if (k < 1 || k + 1 > info.r) throw std::invalid_argument("secant_generators: k out of range");
  switch (v.family.tag) {
    case FamilyTag::Grassmann:
      return minors(as_matrix(v), k + 1);
    case FamilyTag::OrthGrassmann:
      return sub_pfaffians(as_matrix(v), 2 * k + 2);
    case FamilyTag::LagGrassmann:
      return symmetric_minors(as_matrix(v), k + 1);
    case FamilyTag::Quadric:
      return {quadric_form(v.family, as_vector(v))};
    case FamilyTag::CayleyPlane:
      return cayley_f1(as_oct_pair(v));
    case FamilyTag::Freudenthal:
      if (k == 1) return jordan_coords(jordan_adj(as_jordan(v)));
      return {jordan_det(as_jordan(v))};
  }
  throw std::invalid_argument("secant_generators: bad family");
}

Rat top_degree_form(const TangentVec& v) {
  validate_tangent(v);
  if (!v.family.is_tube())
    throw std::invalid_argument("top_degree_form: " + v.family.name() + " is not tube type");
  switch (v.family.tag) {
    case FamilyTag::Grassmann:
    case FamilyTag::LagGrassmann:
      return det(as_matrix(v));
    case FamilyTag::OrthGrassmann:
      return pfaffian(as_matrix(v));
    case FamilyTag::Quadric:
      return quadric_form(v.family, as_vector(v));
    case FamilyTag::Freudenthal:
      return jordan_det(as_jordan(v));
    default:
      throw std::invalid_argument("top_degree_form: bad family");
  }
}

RatVec lag_principal_minors(const TangentVec& v, std::size_t k) {
  if (v.family.tag != FamilyTag::LagGrassmann)
    throw std::invalid_argument("lag_principal_minors: wrong family");
  const RatMatrix& m = as_matrix(v);
  RatVec out;
  for (const auto& s : combinations(m.rows(), k + 1)) out.push_back(det(m.submatrix(s, s)));
  return out;
}

namespace {

// Random integer row/column mixing that preserves rank exactly.
void mix_rectangular(RatMatrix& m, SplitMix64& rng, std::size_t ops) {
  for (std::size_t t = 0; t < ops; ++t) {
    const Rat c = rng.nonzero_int(2);
    if (rng.next() & 1) {
      std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(m.rows()) - 1));
      std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(m.rows()) - 1));
      if (i == j) continue;
      for (std::size_t col = 0; col < m.cols(); ++col) m.at(j, col) += c * m.at(i, col);
    } else {
      std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(m.cols()) - 1));
      std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(m.cols()) - 1));
      if (i == j) continue;
      for (std::size_t row = 0; row < m.rows(); ++row) m.at(row, j) += c * m.at(row, i);
    }
  }
}

// Congruence mixing A <- E A E^T preserving (anti)symmetry and rank.
void mix_congruence(RatMatrix& m, SplitMix64& rng, std::size_t ops) {
  const std::size_t n = m.rows();
  for (std::size_t t = 0; t < ops; ++t) {
    std::size_t i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n) - 1));
    if (i == j) continue;
    const Rat c = rng.nonzero_int(2);
    for (std::size_t col = 0; col < n; ++col) m.at(j, col) += c * m.at(i, col);
    for (std::size_t row = 0; row < n; ++row) m.at(row, j) += c * m.at(row, i);
  }
}

Oct random_oct(SplitMix64& rng) {
  RatVec c(8);
  for (auto& x : c) x = rng.small_int(2);
  return oct_from_coords(c);
}

// Nonzero null octonion: pick a != 0 and set b = u.v / a so N = 0.
Oct random_null_oct(SplitMix64& rng) {
  Oct o = random_oct(rng);
  o.a = rng.nonzero_int(2);
  o.b = (o.u[0] * o.v[0] + o.u[1] * o.v[1] + o.u[2] * o.v[2]) / o.a;
  return o;
}

JordanElem random_rank1_jordan(SplitMix64& rng) {
  JordanElem m = op2_chart(random_oct(rng), random_oct(rng));
  const std::size_t cycles = static_cast<std::size_t>(rng.range(0, 2));
  for (std::size_t t = 0; t < cycles; ++t) m = jordan_cycle(m);
  return rng.nonzero_int(2) * m;
}

}  // namespace

TangentVec random_tangent_of_rank(const HSSFamily& f, std::size_t k, SplitMix64& rng) {
  const ModelInfo info = model_info(f);
  if (k > info.r) throw std::invalid_argument("random_tangent_of_rank: k > rank");
  if (k == 0) return zero_tangent(f);
  switch (f.tag) {
    case FamilyTag::Grassmann: {
      RatMatrix m(f.p, f.q);
      for (std::size_t i = 0; i < k; ++i) m.at(i, i) = rng.nonzero_int(2);
      mix_rectangular(m, rng, 2 * (f.p + f.q));
      return {f, std::move(m)};
    }
    case FamilyTag::OrthGrassmann: {
      RatMatrix m(f.n, f.n);
      for (std::size_t i = 0; i < k; ++i) {
        const Rat c = rng.nonzero_int(2);
        m.at(2 * i, 2 * i + 1) = c;
        m.at(2 * i + 1, 2 * i) = -c;
      }
      mix_congruence(m, rng, 2 * f.n);
      return {f, std::move(m)};
    }
    case FamilyTag::LagGrassmann: {
      RatMatrix m(f.n, f.n);
      for (std::size_t i = 0; i < k; ++i) m.at(i, i) = rng.nonzero_int(2);
      mix_congruence(m, rng, 2 * f.n);
      return {f, std::move(m)};
    }
    case FamilyTag::Quadric: {
      if (k == 1 && f.form == QuadricForm::SumSquares)
        throw std::runtime_error(
            "random_tangent_of_rank: no rational isotropic vector for the "
            "sum-of-squares form");
      for (int attempt = 0; attempt < 256; ++attempt) {
        RatVec v(f.n);
        for (auto& c : v) c = rng.small_int(3);
        if (k == 1 && f.form == QuadricForm::Split) {
          // solve x1 x2 + rest = 0 with x2 forced nonzero
          v[1] = rng.nonzero_int(3);
          v[0] = 0;
          Rat rest = quadric_form(f, v);
          v[0] = -rest / v[1];
        }
        TangentVec t{f, v};
        if (tangent_rank(t) == k) return t;
      }
      throw std::runtime_error("random_tangent_of_rank: quadric sampling exhausted");
    }
    case FamilyTag::CayleyPlane: {
      for (int attempt = 0; attempt < 256; ++attempt) {
        if (k == 1) {
          const Oct u = random_null_oct(rng);
          const Oct w = oct_mul(u, random_oct(rng));
          TangentVec t{f, OctPair{u, w}};
          if (tangent_rank(t) == 1) return t;
        } else {
          TangentVec t{f, OctPair{random_oct(rng), random_oct(rng)}};
          if (tangent_rank(t) == 2) return t;
        }
      }
      throw std::runtime_error("random_tangent_of_rank: cayley sampling exhausted");
    }
    case FamilyTag::Freudenthal: {
      for (int attempt = 0; attempt < 256; ++attempt) {
        JordanElem m = random_rank1_jordan(rng);
        for (std::size_t t = 1; t < k; ++t) m = m + random_rank1_jordan(rng);
        TangentVec t{f, m};
        if (tangent_rank(t) == k) return t;
      }
      throw std::runtime_error("random_tangent_of_rank: jordan sampling exhausted");
    }
  }
  throw std::invalid_argument("random_tangent_of_rank: bad family");
}

TangentVec submodel_embed(const HSSFamily& f, const TangentVec& v_sub, EmbedCorner corner) {
  validate_tangent(v_sub);
  const HSSFamily& sub = v_sub.family;
  if (sub.tag != f.tag)
    throw std::invalid_argument("submodel_embed: unsupported pair " + sub.name() + " -> " +
                                f.name());
  std::size_t sub_rows, sub_cols, rows, cols;
  switch (f.tag) {
    case FamilyTag::Grassmann:
      sub_rows = sub.p;
      sub_cols = sub.q;
      rows = f.p;
      cols = f.q;
      break;
    case FamilyTag::OrthGrassmann:
    case FamilyTag::LagGrassmann:
      sub_rows = sub_cols = sub.n;
      rows = cols = f.n;
      break;
    default:
      throw std::invalid_argument("submodel_embed: unsupported pair " + sub.name() + " -> " +
                                  f.name());
  }
  if (sub_rows > rows || sub_cols > cols)
    throw std::invalid_argument("submodel_embed: subspace parameters exceed ambient");
  const RatMatrix& s = std::get<RatMatrix>(v_sub.payload);
  RatMatrix m(rows, cols);
  const std::size_t row_off = corner == EmbedCorner::Leading ? 0 : rows - sub_rows;
  const std::size_t col_off = corner == EmbedCorner::Leading ? 0 : cols - sub_cols;
  for (std::size_t i = 0; i < sub_rows; ++i)
    for (std::size_t j = 0; j < sub_cols; ++j) m.at(row_off + i, col_off + j) = s.at(i, j);
  return {f, std::move(m)};
}

}  // namespace hss
