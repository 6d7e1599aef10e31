#include "hss/suites.hpp"

#include "hss/lm_map.hpp"
#include "hss/restricted_roots.hpp"
#include "hss/root_system.hpp"
#include "hss/serialization.hpp"
#include "hss/strata.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hss {

namespace {

using nlohmann::json;

bool all_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

// Stable per-(suite, family) seed derived from the config seed.
std::uint64_t derive_seed(std::uint64_t base, const std::string& suite,
                          const std::string& family) {
  std::uint64_t h = 1469598103934665603ULL ^ base;
  for (char c : suite + "|" + family) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

void fail(SuiteResult& res, const std::string& family, std::uint64_t seed,
          const std::string& detail, json reproducer = {}) {
  res.failures.push_back({res.name, family, seed, detail, std::move(reproducer)});
}

// ---- closed forms ---------------------------------------------------------

std::size_t rank_of(const HSSFamily& f) { return model_info(f).r; }

}  // namespace

std::size_t closed_form_infinity_dim(const HSSFamily& f, std::size_t k) {
  switch (f.tag) {
    case FamilyTag::Grassmann:
      return k * (f.p - k) + k * (f.q - k);
    case FamilyTag::OrthGrassmann:
      return 2 * k * (f.n - 2 * k);
    case FamilyTag::LagGrassmann:
      return k * (f.n - k);
    case FamilyTag::Quadric:
      return k == 1 ? f.n - 2 : 0;
    case FamilyTag::CayleyPlane:
      return k == 1 ? 10 : 8;
    case FamilyTag::Freudenthal:
      return k <= 2 ? 16 : 0;
  }
  throw std::invalid_argument("closed_form_infinity_dim");
}

std::size_t closed_form_balanced_dim(const HSSFamily& f, std::size_t k) {
  switch (f.tag) {
    case FamilyTag::Grassmann:
      return k * k;
    case FamilyTag::OrthGrassmann:
      return k * (2 * k - 1);
    case FamilyTag::LagGrassmann:
      return k * (k + 1) / 2;
    case FamilyTag::Quadric:
      return k == 1 ? 1 : f.n;
    case FamilyTag::CayleyPlane:
      return k == 1 ? 1 : 8;
    case FamilyTag::Freudenthal:
      return k == 1 ? 1 : (k == 2 ? 10 : 27);
  }
  throw std::invalid_argument("closed_form_balanced_dim");
}

std::size_t closed_form_char_dim(const HSSFamily& f, std::size_t k) {
  switch (f.tag) {
    case FamilyTag::Grassmann:
      return (f.p - k) * (f.q - k);
    case FamilyTag::OrthGrassmann:
      return (f.n - 2 * k) * (f.n - 2 * k - 1) / 2;
    case FamilyTag::LagGrassmann:
      return (f.n - k) * (f.n - k + 1) / 2;
    case FamilyTag::Quadric:
      return k == 0 ? f.n : (k == 1 ? 1 : 0);
    case FamilyTag::CayleyPlane:
      return k == 0 ? 16 : (k == 1 ? 5 : 0);
    case FamilyTag::Freudenthal:
      return k == 0 ? 27 : (k == 1 ? 10 : (k == 2 ? 1 : 0));
  }
  throw std::invalid_argument("closed_form_char_dim");
}

std::vector<HSSFamily> sweep_families(const SuiteConfig& cfg) {
  std::vector<HSSFamily> out;
  const auto want = [&](const std::string& tag) {
    return cfg.family == "all" || cfg.family == tag;
  };
  if (want("grassmann")) {
    if (cfg.p && cfg.q) {
      out.push_back(HSSFamily::grassmann(*cfg.p, *cfg.q));
    } else {
      for (std::size_t q = 2; q <= 6; ++q)
        for (std::size_t p = q; p <= 6; ++p) out.push_back(HSSFamily::grassmann(p, q));
    }
  }
  if (want("orth-grassmann")) {
    if (cfg.n && cfg.family == "orth-grassmann") {
      out.push_back(HSSFamily::orth_grassmann(*cfg.n));
    } else {
      for (std::size_t n = 4; n <= 8; ++n) out.push_back(HSSFamily::orth_grassmann(n));
    }
  }
  if (want("lag-grassmann")) {
    if (cfg.n && cfg.family == "lag-grassmann") {
      out.push_back(HSSFamily::lag_grassmann(*cfg.n));
    } else {
      for (std::size_t n = 2; n <= 6; ++n) out.push_back(HSSFamily::lag_grassmann(n));
    }
  }
  if (want("quadric")) {
    if (cfg.n && cfg.family == "quadric") {
      out.push_back(HSSFamily::quadric(*cfg.n, cfg.form));
    } else {
      for (std::size_t n = 3; n <= 12; ++n) out.push_back(HSSFamily::quadric(n, cfg.form));
    }
  }
  if (want("cayley-plane")) out.push_back(HSSFamily::cayley_plane());
  if (want("freudenthal")) out.push_back(HSSFamily::freudenthal());
  if (out.empty()) throw std::invalid_argument("unknown family selector: " + cfg.family);
  return out;
}

namespace {

// ---- individual suites -----------------------------------------------------

void suite_roots(const HSSFamily& f, const SuiteConfig&, SuiteResult& res) {
  const MarkedDatum md = build_marked_datum(f);
  const auto chain = strongly_orthogonal_chain(md);
  const ModelInfo info = model_info(f);
  ++res.checks;
  if (chain.size() != info.r)
    fail(res, f.name(), 0, "chain length " + std::to_string(chain.size()) + " != rank");
  ++res.checks;
  if (md.noncompact.size() != info.n)
    fail(res, f.name(), 0, "noncompact count != model dimension");
  // every root (positive and negative) restricts into the classified set
  for (const Root& beta : md.datum.positive_roots) {
    ++res.checks;
    try {
      restrict_root(beta.ambient, chain);
      RatVec neg(beta.ambient.size());
      for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -beta.ambient[i];
      restrict_root(neg, chain);
    } catch (const std::logic_error& e) {
      fail(res, f.name(), 0, std::string("restriction outside classified set: ") + e.what());
    }
  }
  // noncompact positive restrictions are half-pairs, plus half-singles for
  // non-tube families only
  for (const Root& beta : md.noncompact) {
    ++res.checks;
    const RestrictedRoot rr = restrict_root(beta.ambient, chain);
    std::size_t l = 0, j = 0;
    const bool pair = rr.is_half_pair(l, j);
    const bool single = !pair && rr.is_half_single(l);
    if (!pair && !single)
      fail(res, f.name(), 0, "noncompact root with unclassified restriction");
    if (single && f.is_tube())
      fail(res, f.name(), 0, "tube family with half-single restriction");
  }
  ++res.checks;
  if (classify_tube(md).is_tube != f.is_tube())
    fail(res, f.name(), 0, "classify_tube disagrees with the expected tube column");
  // transversality partition for every k
  for (std::size_t k = 1; k <= info.r; ++k) {
    ++res.checks;
    if (!transversal_partition(md, k))
      fail(res, f.name(), 0, "transversal partition fails at k=" + std::to_string(k));
  }
}

void suite_dimensions(const HSSFamily& f, const SuiteConfig&, SuiteResult& res) {
  const MarkedDatum md = build_marked_datum(f);
  const std::size_t r = rank_of(f);
  for (std::size_t k = 1; k <= r; ++k) {
    ++res.checks;
    const std::size_t got = infinity_locus_dim(md, k);
    const std::size_t want = closed_form_infinity_dim(f, k);
    if (got != want)
      fail(res, f.name(), 0,
           "infinity dim k=" + std::to_string(k) + ": " + std::to_string(got) +
               " != " + std::to_string(want));
    ++res.checks;
    const std::size_t bal = balanced_dim(md, k);
    if (bal != closed_form_balanced_dim(f, k))
      fail(res, f.name(), 0, "balanced dim mismatch at k=" + std::to_string(k));
  }
  for (std::size_t k = 0; k <= r; ++k) {
    ++res.checks;
    if (char_dim(md, k) != closed_form_char_dim(f, k))
      fail(res, f.name(), 0, "characteristic dim mismatch at k=" + std::to_string(k));
  }
  if (f.is_tube()) {
    // N_k = N_{r-k} symmetry and N_r a point
    for (std::size_t k = 1; k + 1 <= r; ++k) {
      ++res.checks;
      if (infinity_locus_dim(md, k) != infinity_locus_dim(md, r - k))
        fail(res, f.name(), 0, "tube symmetry fails at k=" + std::to_string(k));
    }
    ++res.checks;
    if (infinity_locus_dim(md, r) != 0) fail(res, f.name(), 0, "N_r not a point");
    ++res.checks;
    if (balanced_dim(md, r) != md.noncompact.size())
      fail(res, f.name(), 0, "balanced_dim(r) != n for tube family");
  }
  ++res.checks;
  if (char_dim(md, 0) != md.noncompact.size()) fail(res, f.name(), 0, "char_dim(0) != n");
}

void suite_bb(const HSSFamily& f, const SuiteConfig& cfg, SuiteResult& res) {
  const std::uint64_t seed = derive_seed(cfg.seed, "bb", f.name());
  const BBReport report = bb_full_report(f, std::min<std::size_t>(cfg.trials, 5), seed);
  for (const auto& row : report.rows) {
    ++res.checks;
    if (!row.pass)
      fail(res, f.name(), seed,
           "BB row i=" + std::to_string(row.i) + " dimN=" + std::to_string(row.dim_N) +
               " plus=" + std::to_string(row.plus_fiber) +
               " minus=" + std::to_string(row.minus_fiber) + " n=" + std::to_string(report.n));
  }
}

void suite_secant(const HSSFamily& f, const SuiteConfig& cfg, SuiteResult& res) {
  const std::uint64_t seed = derive_seed(cfg.seed, "secant", f.name());
  SplitMix64 rng(seed);
  const std::size_t r = rank_of(f);
  for (std::size_t k = 1; k + 1 <= r; ++k) {
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::size_t target = t % (r + 1);
      const TangentVec v = random_tangent_of_rank(f, target, rng);
      ++res.checks;
      ++res.trials;
      const bool vanish = all_zero(secant_generators(v, k));
      if (vanish != (target <= k))
        fail(res, f.name(), seed,
             "F_" + std::to_string(k) + " vanishing disagrees with rank " +
                 std::to_string(target),
             tangent_to_json(v));
    }
  }
  if (f.is_tube()) {
    // degree-r hypersurface: top form nonzero iff full rank
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::size_t target = t % (r + 1);
      const TangentVec v = random_tangent_of_rank(f, target, rng);
      ++res.checks;
      if ((top_degree_form(v) != 0) != (target == r))
        fail(res, f.name(), seed, "top degree form disagrees with full rank",
             tangent_to_json(v));
    }
  }
  if (f.tag == FamilyTag::LagGrassmann) {
    // principal minors cut the same rank loci as the full generator list
    for (std::size_t k = 1; k + 1 <= r; ++k)
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::size_t target = t % (r + 1);
        const TangentVec v = random_tangent_of_rank(f, target, rng);
        ++res.checks;
        if (all_zero(lag_principal_minors(v, k)) != all_zero(secant_generators(v, k)))
          fail(res, f.name(), seed, "principal minors disagree with the full minor list",
               tangent_to_json(v));
      }
  }
  // rank subadditivity
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const TangentVec a = random_tangent_of_rank(f, t % (r + 1), rng);
    const TangentVec b = random_tangent_of_rank(f, (t / 2) % (r + 1), rng);
    const TangentVec sum = unflatten_tangent(f, [&] {
      RatVec fa = flatten_tangent(a), fb = flatten_tangent(b);
      for (std::size_t i = 0; i < fa.size(); ++i) fa[i] += fb[i];
      return fa;
    }());
    ++res.checks;
    if (tangent_rank(sum) > tangent_rank(a) + tangent_rank(b))
      fail(res, f.name(), seed, "rank subadditivity violated", tangent_to_json(sum));
  }
}

void suite_inverse(const HSSFamily& f, const SuiteConfig& cfg, SuiteResult& res) {
  const std::uint64_t seed = derive_seed(cfg.seed, "inverse", f.name());
  SplitMix64 rng(seed);
  const ModelInfo info = model_info(f);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    RatVec coords(info.n + 1);
    coords[0] = rng.nonzero_int(3);
    for (std::size_t i = 1; i < coords.size(); ++i) coords[i] = rng.small_rat(3, 2);
    const ProjPoint x = proj_point(coords);
    ++res.checks;
    ++res.trials;
    const ProjPoint back = psi(f, phi(f, x));
    if (!(back == x))
      fail(res, f.name(), seed, "psi(phi(x)) != x", json{{"point", vec_to_json(coords)}});
    // C*-equivariance at a random nonzero t
    const Rat tv = rng.nonzero_int(3);
    ++res.checks;
    if (!(phi(f, cstar_act_source(tv, x)) == cstar_act_target(tv, phi(f, x))))
      fail(res, f.name(), seed, "phi not C*-equivariant",
           json{{"point", vec_to_json(coords)}, {"t", rat_to_json(tv)}});
  }
}

void suite_plucker(const HSSFamily& f, const SuiteConfig& cfg, SuiteResult& res) {
  if (f.tag != FamilyTag::Grassmann) return;
  const std::uint64_t seed = derive_seed(cfg.seed, "plucker", f.name());
  SplitMix64 rng(seed);
  const SignedPermutation sp = plucker_alignment(f.p, f.q);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    RatMatrix A(f.p, f.q);
    for (std::size_t i = 0; i < f.p; ++i)
      for (std::size_t j = 0; j < f.q; ++j) A.at(i, j) = rng.small_int(3);
    const Rat x0 = rng.nonzero_int(3);
    RatVec coords = {x0};
    for (const Rat& e : A.entries()) coords.push_back(e);
    const ProjPoint lhs = phi(f, proj_point(coords));
    const ProjPoint oracle = plucker_graph_oracle(f.p, f.q, x0, A);
    RatVec permuted(oracle.coords().size());
    for (std::size_t i = 0; i < permuted.size(); ++i)
      permuted[i] = Rat(sp.sign[i]) * lhs.coords()[sp.perm[i]];
    ++res.checks;
    ++res.trials;
    if (!(proj_point(permuted) == oracle))
      fail(res, f.name(), seed, "phi disagrees with the Plucker graph oracle",
           json{{"x0", rat_to_json(x0)}, {"A", matrix_to_json(A)}});
  }
}

void suite_limit(const HSSFamily& f, const SuiteConfig& cfg, SuiteResult& res) {
  const std::uint64_t seed = derive_seed(cfg.seed, "limit", f.name());
  SplitMix64 rng(seed);
  const ModelInfo info = model_info(f);
  for (std::size_t k = 1; k <= info.r; ++k) {
    if (f.tag == FamilyTag::Quadric && f.form == QuadricForm::SumSquares && k == 1) continue;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const TangentVec v = random_tangent_of_rank(f, k, rng);
      const ProjPoint limit = phi_limit_at_infinity(v);
      ++res.checks;
      ++res.trials;
      if (block_support(limit) != std::set<std::size_t>{k}) {
        fail(res, f.name(), seed, "limit point support is not the single block k",
             tangent_to_json(v));
        continue;
      }
      const Stratum st = classify_stratum(f, limit);
      ++res.checks;
      if (!(st == Stratum{StratumKind::NFixed, k}))
        fail(res, f.name(), seed, "limit not classified N_fixed(k): " + st.to_string(),
             tangent_to_json(v));
      ++res.checks;
      if (!(cstar_act_target(Rat(2), limit) == limit))
        fail(res, f.name(), seed, "limit point not C*-fixed", tangent_to_json(v));
      // algebraic flow consistency: phi([1, t v]) = t-action on phi([1, v])
      const Rat tv = rng.nonzero_int(3);
      RatVec scaled = flatten_tangent(v);
      for (Rat& c : scaled) c *= tv;
      ++res.checks;
      if (!(phi_affine(f, unflatten_tangent(f, scaled)) ==
            cstar_act_target(tv, phi_affine(f, v))))
        fail(res, f.name(), seed, "flow grading violated", tangent_to_json(v));
      // linear sections: the limit lies in M_{r-k+1} but, when k < r, not in
      // the smaller section M_{r-k}; the affine image of v lies in V_k
      ++res.checks;
      if (!in_M(limit, info.r - k + 1) ||
          (k < info.r && in_M(limit, info.r - k)))
        fail(res, f.name(), seed, "limit violates the M_k block sections", tangent_to_json(v));
      ++res.checks;
      if (!in_V(phi_affine(f, v), k)) fail(res, f.name(), seed, "affine image outside V_k");
    }
  }
}

void suite_inversion(const HSSFamily& f, const SuiteConfig& cfg, SuiteResult& res) {
  if (!f.is_tube()) return;
  const std::uint64_t seed = derive_seed(cfg.seed, "inversion", f.name());
  SplitMix64 rng(seed);
  const ModelInfo info = model_info(f);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const TangentVec v = random_tangent_of_rank(f, info.r, rng);
    const TangentVec inv = infinity_inverse(v);
    ++res.checks;
    ++res.trials;
    switch (f.tag) {
      case FamilyTag::Grassmann:
      case FamilyTag::LagGrassmann: {
        const RatMatrix& m = std::get<RatMatrix>(v.payload);
        const RatMatrix& w = std::get<RatMatrix>(inv.payload);
        if (!(m * w == det(m) * RatMatrix::identity(m.rows())))
          fail(res, f.name(), seed, "v * inverse != det(v) I", tangent_to_json(v));
        break;
      }
      case FamilyTag::OrthGrassmann: {
        const RatMatrix& m = std::get<RatMatrix>(v.payload);
        const RatMatrix& w = std::get<RatMatrix>(inv.payload);
        if (!(m * w == pfaffian(m) * RatMatrix::identity(m.rows())))
          fail(res, f.name(), seed, "v * inverse != Pf(v) I", tangent_to_json(v));
        break;
      }
      case FamilyTag::Quadric: {
        if (!(flatten_tangent(inv) == flatten_tangent(v)))
          fail(res, f.name(), seed, "quadric inverse is not the identity reassembly");
        break;
      }
      case FamilyTag::Freudenthal: {
        const JordanElem& m = std::get<JordanElem>(v.payload);
        const JordanElem& w = std::get<JordanElem>(inv.payload);
        if (!(jordan_mul(m, w) == jordan_det(m) * JordanElem::identity()))
          fail(res, f.name(), seed, "m o adj(m) != det(m) identity", tangent_to_json(v));
        break;
      }
      default:
        break;
    }
    // involution up to scale
    const RatVec a = flatten_tangent(v);
    const RatVec b = flatten_tangent(infinity_inverse(inv));
    Rat ratio = 0;
    bool proportional = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0 && b[i] == 0) continue;
      if (a[i] == 0 || b[i] == 0) {
        proportional = false;
        break;
      }
      const Rat q = b[i] / a[i];
      if (ratio == 0)
        ratio = q;
      else if (q != ratio)
        proportional = false;
    }
    ++res.checks;
    if (!proportional || ratio == 0)
      fail(res, f.name(), seed, "double inverse not proportional to v", tangent_to_json(v));
  }
  if (f.tag == FamilyTag::Freudenthal) {
    // Freudenthal identity on arbitrary Jordan elements
    const std::size_t trials = std::max<std::size_t>(cfg.trials, 200);
    for (std::size_t t = 0; t < trials; ++t) {
      RatVec coords(27);
      for (Rat& c : coords) c = rng.small_int(3);
      const JordanElem m = jordan_from_coords(coords);
      ++res.checks;
      if (!(jordan_adj(jordan_adj(m)) == jordan_det(m) * m))
        fail(res, f.name(), seed, "adj(adj(m)) != det(m) m",
             jordan_to_json(m));
    }
  }
}

void suite_example(SuiteResult& res) {
  const HSSFamily f = HSSFamily::quadric(3, QuadricForm::SumSquares);
  const auto pt = [](std::initializer_list<int> v) {
    RatVec c;
    for (int x : v) c.push_back(Rat(x));
    return proj_point(c);
  };
  ++res.checks;
  if (!(phi(f, pt({1, 1, 0, 0})) == pt({1, 1, 0, 0, 1})))
    fail(res, f.name(), 0, "phi([1,1,0,0]) != [1,1,0,0,1]");
  ++res.checks;
  if (!(phi(f, pt({1, 0, 0, 0})) == pt({1, 0, 0, 0, 0})))
    fail(res, f.name(), 0, "phi(o) != o");
  ++res.checks;
  try {
    psi(f, pt({0, 0, 0, 0, 1}));
    fail(res, f.name(), 0, "psi([0,...,0,1]) did not report the indeterminacy point");
  } catch (const std::domain_error&) {
  }
  ++res.checks;
  {
    const TangentVec v{f, RatVec{Rat(1), Rat(0), Rat(0)}};
    if (!(phi_limit_at_infinity(v) == pt({0, 0, 0, 0, 1})))
      fail(res, f.name(), 0, "rank-2 limit != [0,...,0,1]");
  }
  ++res.checks;
  {
    // split form: a nonzero isotropic direction at x0 = 0 is the true
    // indeterminacy and must be reported as such
    const HSSFamily split = HSSFamily::quadric(4);
    try {
      phi(split, pt({0, 1, 0, 0, 0}));
      fail(res, f.name(), 0, "phi at an isotropic infinity point did not error");
    } catch (const std::domain_error&) {
    }
  }
}

void suite_subdiagram(const SuiteConfig& cfg, std::vector<SuiteResult>& out) {
  struct Pair {
    HSSFamily ambient, sub;
    EmbedCorner corner;
    const char* label;
  };
  const std::vector<Pair> pairs = {
      {HSSFamily::grassmann(3, 3), HSSFamily::grassmann(2, 2), EmbedCorner::Leading,
       "balanced grassmann(2,2) -> grassmann(3,3)"},
      {HSSFamily::grassmann(3, 3), HSSFamily::grassmann(2, 2), EmbedCorner::Trailing,
       "characteristic grassmann(2,2) -> grassmann(3,3)"},
      {HSSFamily::grassmann(4, 2), HSSFamily::grassmann(2, 2), EmbedCorner::Leading,
       "balanced grassmann(2,2) -> grassmann(4,2)"},
      {HSSFamily::grassmann(4, 3), HSSFamily::grassmann(3, 2), EmbedCorner::Trailing,
       "characteristic grassmann(3,2) -> grassmann(4,3)"},
      {HSSFamily::orth_grassmann(6), HSSFamily::orth_grassmann(4), EmbedCorner::Leading,
       "balanced orth-grassmann(4) -> orth-grassmann(6)"},
      {HSSFamily::orth_grassmann(6), HSSFamily::orth_grassmann(4), EmbedCorner::Trailing,
       "characteristic orth-grassmann(4) -> orth-grassmann(6)"},
      {HSSFamily::lag_grassmann(3), HSSFamily::lag_grassmann(2), EmbedCorner::Leading,
       "balanced lag-grassmann(2) -> lag-grassmann(3)"},
      {HSSFamily::lag_grassmann(3), HSSFamily::lag_grassmann(2), EmbedCorner::Trailing,
       "characteristic lag-grassmann(2) -> lag-grassmann(3)"},
  };
  for (const Pair& pair : pairs) {
    SuiteResult res;
    res.name = "subdiagram";
    res.family = pair.label;
    const std::uint64_t seed = derive_seed(cfg.seed, "subdiagram", pair.label);
    SplitMix64 rng(seed);
    const std::size_t r_sub = rank_of(pair.sub);
    const std::size_t r_amb = rank_of(pair.ambient);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const std::size_t target = t % (r_sub + 1);
      const TangentVec v_sub = random_tangent_of_rank(pair.sub, target, rng);
      const TangentVec v = submodel_embed(pair.ambient, v_sub, pair.corner);
      ++res.checks;
      ++res.trials;
      if (tangent_rank(v) != tangent_rank(v_sub))
        fail(res, pair.label, seed, "embedding changed the rank", tangent_to_json(v_sub));
      for (std::size_t k = 1; k + 1 <= r_amb; ++k) {
        ++res.checks;
        const bool amb_vanish = all_zero(secant_generators(v, k));
        const bool sub_vanish =
            k + 1 <= r_sub ? all_zero(secant_generators(v_sub, k)) : tangent_rank(v_sub) <= k;
        if (amb_vanish != sub_vanish)
          fail(res, pair.label, seed, "secant membership not preserved at k=" + std::to_string(k),
               tangent_to_json(v_sub));
      }
    }
    out.push_back(std::move(res));
  }
  // unsupported pairs are rejected
  SuiteResult res;
  res.name = "subdiagram";
  res.family = "unsupported pairs";
  ++res.checks;
  try {
    const TangentVec v = zero_tangent(HSSFamily::quadric(3));
    submodel_embed(HSSFamily::grassmann(3, 3), v);
    fail(res, res.family, 0, "shape-incompatible pair was accepted");
  } catch (const std::invalid_argument&) {
  }
  out.push_back(std::move(res));
}

using FamilySuiteFn = void (*)(const HSSFamily&, const SuiteConfig&, SuiteResult&);

}  // namespace

std::vector<std::string> known_suites() {
  return {"roots",   "dimensions", "bb",        "secant",     "inverse",
          "plucker", "limit",      "inversion", "example",    "subdiagram"};
}

bool Report::pass() const {
  for (const auto& r : results)
    if (!r.failures.empty()) return false;
  return true;
}

nlohmann::json Report::to_json(bool include_elapsed) const {
  json out;
  out["schema_version"] = 1;
  out["pass"] = pass();
  json suites = json::array();
  for (const auto& r : results) {
    json s;
    s["suite"] = r.name;
    s["family"] = r.family;
    s["trials"] = r.trials;
    s["checks"] = r.checks;
    if (include_elapsed) s["elapsed_ms"] = r.elapsed_ms;
    json fails = json::array();
    for (const auto& f : r.failures) {
      json e;
      e["suite"] = f.suite;
      e["family"] = f.family;
      e["seed"] = f.seed;
      e["detail"] = f.detail;
      if (!f.reproducer.is_null()) e["reproducer"] = f.reproducer;
      fails.push_back(std::move(e));
    }
    s["failures"] = std::move(fails);
    suites.push_back(std::move(s));
  }
  out["suites"] = std::move(suites);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.failures.empty() ? "PASS" : "FAIL") << "  " << r.name << "  " << r.family
       << "  (" << r.checks << " checks)";
    os << "\n";
    for (const auto& f : r.failures)
      os << "      failure: " << f.detail << " [seed " << f.seed << "]\n";
  }
  os << (pass() ? "all suites passed" : "FAILURES PRESENT") << "\n";
  return os.str();
}

Report run_suite(const SuiteConfig& cfg) {
  std::vector<std::string> names = cfg.suites.empty() ? known_suites() : cfg.suites;
  const auto known = known_suites();
  for (const auto& n : names)
    if (std::find(known.begin(), known.end(), n) == known.end())
      throw std::invalid_argument("unknown suite: " + n);
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");

  const std::vector<HSSFamily> families = sweep_families(cfg);
  Report report;
  for (const std::string& name : names) {
    if (name == "example") {
      SuiteResult res;
      res.name = "example";
      res.family = "quadric(3) [sum-squares]";
      const auto start = std::chrono::steady_clock::now();
      suite_example(res);
      res.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      report.results.push_back(std::move(res));
      continue;
    }
    if (name == "subdiagram") {
      suite_subdiagram(cfg, report.results);
      continue;
    }
    FamilySuiteFn fn = nullptr;
    if (name == "roots") fn = suite_roots;
    if (name == "dimensions") fn = suite_dimensions;
    if (name == "bb") fn = suite_bb;
    if (name == "secant") fn = suite_secant;
    if (name == "inverse") fn = suite_inverse;
    if (name == "plucker") fn = suite_plucker;
    if (name == "limit") fn = suite_limit;
    if (name == "inversion") fn = suite_inversion;
    for (const HSSFamily& f : families) {
      if (name == "plucker" && f.tag != FamilyTag::Grassmann) continue;
      if (name == "inversion" && !f.is_tube()) continue;
      SuiteResult res;
      res.name = name;
      res.family = f.name();
      const auto start = std::chrono::steady_clock::now();
      fn(f, cfg, res);
      res.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      report.results.push_back(std::move(res));
    }
  }
  return report;
}

nlohmann::json generate_table_fixture() {
  json out;
  out["schema_version"] = 1;
  json fams = json::array();
  SuiteConfig cfg;  // default sweep
  for (const HSSFamily& f : sweep_families(cfg)) {
    const ModelInfo info = model_info(f);
    json e = family_to_json(f);
    e.erase("form");
    e["dim"] = info.n;
    e["r"] = info.r;
    e["tube"] = f.is_tube();
    json inf = json::array(), bal = json::array(), chr = json::array();
    for (std::size_t k = 1; k <= info.r; ++k) {
      inf.push_back(closed_form_infinity_dim(f, k));
      bal.push_back(closed_form_balanced_dim(f, k));
    }
    for (std::size_t k = 0; k <= info.r; ++k) chr.push_back(closed_form_char_dim(f, k));
    e["infinity_dims"] = std::move(inf);
    e["balanced_dims"] = std::move(bal);
    e["char_dims"] = std::move(chr);
    fams.push_back(std::move(e));
  }
  out["families"] = std::move(fams);
  return out;
}

}  // namespace hss
