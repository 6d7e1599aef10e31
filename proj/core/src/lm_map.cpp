#include "hss/lm_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hss {

namespace {

Rat rat_pow(const Rat& x, std::size_t e) {
  Rat out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= x;
  return out;
}

bool all_zero(const RatVec& v) {
  for (const Rat& c : v)
    if (c != 0) return false;
  return true;
}

std::vector<std::size_t> block_sizes_of(const HSSFamily& f) {
  return model_info(f).block_sizes;
}

// Raw (unnormalized) graded coordinates of phi.
RatVec phi_raw(const HSSFamily& f, const RatVec& coords) {
  const ModelInfo info = model_info(f);
  if (coords.size() != info.n + 1)
    throw std::invalid_argument("phi: expected " + std::to_string(info.n + 1) +
                                " homogeneous coordinates");
  const Rat& x0 = coords[0];
  const TangentVec v = unflatten_tangent(f, RatVec(coords.begin() + 1, coords.end()));
  RatVec out;
  out.reserve(info.N + 1);
  out.push_back(rat_pow(x0, info.r));
  const Rat w1 = rat_pow(x0, info.r - 1);
  for (std::size_t i = 1; i < coords.size(); ++i) out.push_back(w1 * coords[i]);
  for (std::size_t j = 2; j <= info.r; ++j) {
    const Rat wj = rat_pow(x0, info.r - j);
    for (const Rat& g : secant_generators(v, j - 1)) out.push_back(wj * g);
  }
  return out;
}

}  // namespace

ProjPoint phi(const HSSFamily& f, const ProjPoint& x) {
  RatVec out = phi_raw(f, x.coords());
  if (all_zero(out)) {
    const TangentVec v =
        unflatten_tangent(f, RatVec(x.coords().begin() + 1, x.coords().end()));
    throw std::domain_error("phi: point lies on the indeterminacy locus (x0 = 0, tangent rank " +
                            std::to_string(tangent_rank(v)) + " < " +
                            std::to_string(model_info(f).r) + ")");
  }
  return proj_point(std::move(out), block_sizes_of(f));
}

ProjPoint phi_affine(const HSSFamily& f, const TangentVec& v) {
  RatVec coords = {Rat(1)};
  const RatVec flat = flatten_tangent(v);
  coords.insert(coords.end(), flat.begin(), flat.end());
  return phi(f, proj_point(std::move(coords)));
}

ProjPoint psi(const HSSFamily& f, const ProjPoint& z) {
  const ModelInfo info = model_info(f);
  if (z.coords().size() != info.N + 1)
    throw std::invalid_argument("psi: expected " + std::to_string(info.N + 1) +
                                " homogeneous coordinates");
  RatVec head(z.coords().begin(), z.coords().begin() + info.n + 1);
  if (all_zero(head))
    throw std::domain_error("psi: blocks 0..1 vanish (projection center P_{I_{r-1}})");
  return proj_point(std::move(head));
}

ProjPoint phi_limit_at_infinity(const TangentVec& v) {
  const ModelInfo info = model_info(v.family);
  const std::size_t k = tangent_rank(v);
  if (k == 0) throw std::invalid_argument("phi_limit_at_infinity: zero tangent vector");
  for (std::size_t j = k; j + 1 <= info.r; ++j)
    if (j >= 1 && j <= info.r - 1 && !all_zero(secant_generators(v, j)))
      throw std::logic_error("phi_limit_at_infinity: F_j nonzero at rank " + std::to_string(k));
  const RatVec content = k == 1 ? flatten_tangent(v) : secant_generators(v, k - 1);
  if (all_zero(content))
    throw std::logic_error("phi_limit_at_infinity: F_{k-1} vanished at rank " +
                           std::to_string(k));
  const auto blocks = info.block_sizes;
  RatVec out(info.N + 1, Rat(0));
  std::size_t off = 0;
  for (std::size_t j = 0; j < k; ++j) off += blocks[j];
  for (std::size_t t = 0; t < content.size(); ++t) out[off + t] = content[t];
  return proj_point(std::move(out), blocks);
}

TangentVec infinity_inverse(const TangentVec& v) {
  const HSSFamily& f = v.family;
  if (!f.is_tube())
    throw std::invalid_argument("infinity_inverse: " + f.name() + " is not tube type");
  const ModelInfo info = model_info(f);
  if (tangent_rank(v) != info.r)
    throw std::invalid_argument("infinity_inverse: tangent rank below " +
                                std::to_string(info.r));
  switch (f.tag) {
    case FamilyTag::Grassmann:
    case FamilyTag::LagGrassmann:
      return {f, adjugate(std::get<RatMatrix>(v.payload))};
    case FamilyTag::OrthGrassmann:
      return {f, pf_adjugate(std::get<RatMatrix>(v.payload))};
    case FamilyTag::Quadric:
      return v;  // block r-1 = block 1 holds the coordinates themselves
    case FamilyTag::Freudenthal:
      return {f, jordan_adj(std::get<JordanElem>(v.payload))};
    default:
      throw std::invalid_argument("infinity_inverse: bad family");
  }
}

ProjPoint cstar_act_source(const Rat& t, const ProjPoint& x) {
  if (t == 0) throw std::invalid_argument("cstar_act_source: t = 0");
  RatVec out = x.coords();
  for (std::size_t i = 1; i < out.size(); ++i) out[i] *= t;
  return proj_point(std::move(out));
}

ProjPoint cstar_act_target(const Rat& t, const ProjPoint& z) {
  if (t == 0) throw std::invalid_argument("cstar_act_target: t = 0");
  if (!z.has_blocks()) throw std::invalid_argument("cstar_act_target: no block structure");
  RatVec out = z.coords();
  const auto& blocks = *z.blocks();
  std::size_t off = 0;
  Rat weight = 1;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (std::size_t i = 0; i < blocks[j]; ++i) out[off + i] *= weight;
    off += blocks[j];
    weight *= t;
  }
  return proj_point(std::move(out), std::vector<std::size_t>(blocks));
}

ProjPoint plucker_graph_oracle(std::size_t p, std::size_t q, const Rat& x0,
                               const RatMatrix& A) {
  if (A.rows() != p || A.cols() != q)
    throw std::invalid_argument("plucker_graph_oracle: matrix shape");
  RatMatrix stack(p + q, q);
  for (std::size_t i = 0; i < q; ++i) stack.at(i, i) = x0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) stack.at(q + i, j) = A.at(i, j);
  std::vector<std::size_t> all_cols(q);
  for (std::size_t j = 0; j < q; ++j) all_cols[j] = j;
  RatVec out;
  for (const auto& rows : combinations(p + q, q))
    out.push_back(det(stack.submatrix(rows, all_cols)));
  return proj_point(std::move(out));
}

SignedPermutation plucker_alignment(std::size_t p, std::size_t q) {
  const auto oracle_sets = combinations(p + q, q);
  std::map<std::vector<std::size_t>, std::size_t> oracle_index;
  for (std::size_t i = 0; i < oracle_sets.size(); ++i) oracle_index.emplace(oracle_sets[i], i);

  SignedPermutation sp;
  sp.perm.assign(oracle_sets.size(), 0);
  sp.sign.assign(oracle_sets.size(), 0);

  std::vector<std::size_t> all_cols(q);
  for (std::size_t j = 0; j < q; ++j) all_cols[j] = j;

  // phi slot 0 (block 0, x0^r) matches the oracle set {0..q-1} with sign +1.
  std::vector<std::size_t> base(q);
  for (std::size_t j = 0; j < q; ++j) base[j] = j;
  sp.perm[oracle_index.at(base)] = 0;
  sp.sign[oracle_index.at(base)] = 1;

  std::size_t phi_idx = 1;
  for (std::size_t j = 1; j <= q; ++j) {
    for (const auto& R : combinations(p, j)) {
      for (const auto& C : combinations(q, j)) {
        // oracle row set: untouched top rows plus the bottom rows R
        std::vector<std::size_t> S;
        for (std::size_t c = 0; c < q; ++c) {
          bool in_C = false;
          for (std::size_t t : C)
            if (t == c) in_C = true;
          if (!in_C) S.push_back(c);
        }
        for (std::size_t r : R) S.push_back(q + r);
        std::sort(S.begin(), S.end());

        // sign: evaluate the oracle minor on the indicator matrix pairing
        // sorted R with sorted C (the phi slot value there is exactly 1)
        RatMatrix stack(p + q, q);
        for (std::size_t t = 0; t < q; ++t) stack.at(t, t) = 1;
        for (std::size_t t = 0; t < j; ++t) stack.at(q + R[t], C[t]) = 1;
        const Rat s = det(stack.submatrix(S, all_cols));
        if (s != 1 && s != -1)
          throw std::logic_error("plucker_alignment: indicator minor not a unit");

        const std::size_t oi = oracle_index.at(S);
        sp.perm[oi] = phi_idx;
        sp.sign[oi] = s == 1 ? 1 : -1;
        ++phi_idx;
      }
    }
  }
  return sp;
}

}  // namespace hss
