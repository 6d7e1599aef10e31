#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hss/lm_map.hpp"
#include "hss/strata.hpp"

#include <stdexcept>

using namespace hss;

namespace {

ProjPoint affine_point(const HSSFamily& f, const RatVec& x) {
  RatVec c;
  c.push_back(Rat(1));
  c.insert(c.end(), x.begin(), x.end());
  return proj_point(std::move(c));
}

}  // namespace

TEST_CASE("phi on the sum-of-squares quadric: worked values") {
  const HSSFamily f = HSSFamily::quadric(3, QuadricForm::SumSquares);
  // [1:1:0:0] -> [1:1:0:0:1]
  CHECK(phi(f, affine_point(f, {Rat(1), Rat(0), Rat(0)})) ==
        proj_point({Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)}));
  // the base point maps to itself (padded by zeros)
  CHECK(phi(f, proj_point({Rat(1), Rat(0), Rat(0), Rat(0)})) ==
        proj_point({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("phi on G(2,2): pinned blocks") {
  const HSSFamily f = HSSFamily::grassmann(2, 2);
  const ProjPoint z = phi(f, affine_point(f, {Rat(1), Rat(2), Rat(3), Rat(4)}));
  REQUIRE(z.has_blocks());
  CHECK(z.block(0) == RatVec{Rat(1)});
  CHECK(z.block(1) == RatVec{Rat(1), Rat(2), Rat(3), Rat(4)});
  CHECK(z.block(2) == RatVec{Rat(-2)});  // det [[1,2],[3,4]]
}

TEST_CASE("phi indeterminacy throws with the rank in the message") {
  const HSSFamily f = HSSFamily::quadric(3);  // split form: e1 is isotropic
  CHECK_THROWS_AS(phi(f, proj_point({Rat(0), Rat(1), Rat(0), Rat(0)})), std::domain_error);
  try {
    phi(f, proj_point({Rat(0), Rat(1), Rat(0), Rat(0)}));
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("rank") != std::string::npos);
  }
}

TEST_CASE("psi inverts phi on random affine points") {
  SplitMix64 rng(11);
  for (const HSSFamily& f :
       {HSSFamily::grassmann(3, 3), HSSFamily::orth_grassmann(6), HSSFamily::lag_grassmann(3),
        HSSFamily::quadric(5), HSSFamily::cayley_plane(), HSSFamily::freudenthal()}) {
    const std::size_t r = model_info(f).r;
    for (int t = 0; t < 15; ++t) {
      const TangentVec v = random_tangent_of_rank(f, r, rng);
      const ProjPoint x = affine_point(f, flatten_tangent(v));
      CHECK(psi(f, phi(f, x)) == x);
    }
  }
}

TEST_CASE("psi throws when the first two blocks vanish") {
  const HSSFamily f = HSSFamily::quadric(3);
  const ProjPoint z =
      proj_point({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}, std::vector<std::size_t>{1, 3, 1});
  CHECK_THROWS_AS(psi(f, z), std::domain_error);
}

TEST_CASE("C*-equivariance: phi([x0 : t x]) = t-weighted phi([x0 : x])") {
  SplitMix64 rng(42);
  const Rat t(7, 3);
  for (const HSSFamily& f : {HSSFamily::grassmann(4, 2), HSSFamily::lag_grassmann(4),
                             HSSFamily::quadric(6), HSSFamily::freudenthal()}) {
    const std::size_t r = model_info(f).r;
    for (int s = 0; s < 10; ++s) {
      const TangentVec v = random_tangent_of_rank(f, r, rng);
      const ProjPoint x = affine_point(f, flatten_tangent(v));
      CHECK(phi(f, cstar_act_source(t, x)) == cstar_act_target(t, phi(f, x)));
    }
  }
}

TEST_CASE("flow limits: pinned quadric values") {
  const HSSFamily split = HSSFamily::quadric(3);
  {
    // q(v) = 0, v != 0: limit lands in block 1
    const TangentVec v{split, RatVec{Rat(1), Rat(0), Rat(0)}};
    const ProjPoint lim = phi_limit_at_infinity(v);
    CHECK(lim == proj_point({Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)}));
    CHECK(classify_stratum(split, lim) == Stratum{StratumKind::NFixed, 1});
  }
  {
    // q(v) != 0: limit is the last coordinate point
    const TangentVec v{split, RatVec{Rat(1), Rat(1), Rat(0)}};
    const ProjPoint lim = phi_limit_at_infinity(v);
    CHECK(lim == proj_point({Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    CHECK(classify_stratum(split, lim) == Stratum{StratumKind::NFixed, 2});
  }
  CHECK_THROWS_AS(phi_limit_at_infinity(zero_tangent(split)), std::invalid_argument);
}

TEST_CASE("flow limit of a rank-2 Jordan element lands on a rank-1 adjugate") {
  SplitMix64 rng(8);
  const HSSFamily f = HSSFamily::freudenthal();
  for (int t = 0; t < 10; ++t) {
    const TangentVec v = random_tangent_of_rank(f, 2, rng);
    const ProjPoint lim = phi_limit_at_infinity(v);
    CHECK(block_support(lim) == std::set<std::size_t>{2});
    const JordanElem adj = jordan_adj(std::get<JordanElem>(v.payload));
    CHECK(jordan_rank(adj) == 1);
    CHECK(lim.block(2) == proj_point(jordan_coords(adj)).coords());
  }
}

TEST_CASE("infinity_inverse: pinned values") {
  {
    TangentVec v{HSSFamily::grassmann(3, 3),
                 RatMatrix(3, 3,
                           {Rat(1), Rat(0), Rat(0), Rat(0), Rat(2), Rat(0), Rat(0), Rat(0),
                            Rat(3)})};
    const TangentVec inv = infinity_inverse(v);
    const auto& m = std::get<RatMatrix>(inv.payload);
    CHECK(m.at(0, 0) == 6);
    CHECK(m.at(1, 1) == 3);
    CHECK(m.at(2, 2) == 2);
    CHECK(m.at(0, 1) == 0);
  }
  {
    TangentVec v{HSSFamily::freudenthal(), JordanElem::diag(1, 1, 2)};
    const TangentVec inv = infinity_inverse(v);
    CHECK(std::get<JordanElem>(inv.payload) == JordanElem::diag(2, 2, 1));
  }
  {
    TangentVec v{HSSFamily::lag_grassmann(2), RatMatrix::identity(2)};
    const TangentVec inv = infinity_inverse(v);
    CHECK(std::get<RatMatrix>(inv.payload) == RatMatrix::identity(2));
  }
}

TEST_CASE("C* actions: pinned quadric point") {
  const ProjPoint z =
      proj_point({Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)}, std::vector<std::size_t>{1, 3, 1});
  const ProjPoint moved = cstar_act_target(Rat(2), z);
  CHECK(moved.coords() == RatVec{Rat(1), Rat(2), Rat(0), Rat(0), Rat(4)});
  const ProjPoint x = proj_point({Rat(1), Rat(1), Rat(0), Rat(0)});
  CHECK(cstar_act_source(Rat(2), x).coords() == RatVec{Rat(1), Rat(2), Rat(0), Rat(0)});
  CHECK_THROWS_AS(cstar_act_source(Rat(0), x), std::invalid_argument);
}

TEST_CASE("Plucker graph oracle: pinned minors") {
  {
    // A = 0, x0 = 1: the only nonzero minor is the top [0..q-1] row set
    const ProjPoint z = plucker_graph_oracle(2, 2, Rat(1), RatMatrix(2, 2));
    CHECK(z.coords() == RatVec{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
  }
  {
    const RatMatrix a(2, 2, {Rat(1), Rat(2), Rat(3), Rat(4)});
    const ProjPoint z = plucker_graph_oracle(2, 2, Rat(1), a);
    // row sets lex: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}
    CHECK(z.coords()[0] == 1);
    CHECK(z.coords()[5] == -2);  // det A
  }
  {
    // x0 = 0 leaves only the bottom-rows minor
    const RatMatrix a(2, 2, {Rat(1), Rat(0), Rat(0), Rat(1)});
    const ProjPoint z = plucker_graph_oracle(2, 2, Rat(0), a);
    CHECK(z.coords() == RatVec{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
  }
}

TEST_CASE("plucker_alignment identifies phi with the graph minors") {
  SplitMix64 rng(3);
  for (const auto& [p, q] : std::vector<std::pair<std::size_t, std::size_t>>{
           {2, 2}, {3, 2}, {4, 3}, {4, 4}}) {
    const HSSFamily f = HSSFamily::grassmann(p, q);
    const SignedPermutation sp = plucker_alignment(p, q);
    const std::size_t N1 = binomial(p + q, q);
    REQUIRE(sp.perm.size() == N1);
    for (int t = 0; t < 8; ++t) {
      const TangentVec v = random_tangent_of_rank(f, q, rng);
      const auto& a = std::get<RatMatrix>(v.payload);
      const RatVec lhs = plucker_graph_oracle(p, q, Rat(1), a).coords();
      const RatVec rhs = phi_affine(f, v).coords();
      for (std::size_t i = 0; i < N1; ++i)
        CHECK(lhs[i] == Rat(sp.sign[i]) * rhs[sp.perm[i]]);
    }
  }
}
