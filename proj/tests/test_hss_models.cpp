#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hss/jordan.hpp"
#include "hss/restricted_roots.hpp"
#include "hss/root_system.hpp"
#include "hss/tangent.hpp"

#include <numeric>
#include <stdexcept>

using namespace hss;

TEST_CASE("model_info: pinned dimension tables") {
  {
    const ModelInfo m = model_info(HSSFamily::grassmann(2, 2));
    CHECK(m.n == 4);
    CHECK(m.r == 2);
    CHECK(m.N == 5);
    CHECK(m.block_sizes == std::vector<std::size_t>{1, 4, 1});
  }
  {
    const ModelInfo m = model_info(HSSFamily::quadric(3));
    CHECK(m.n == 3);
    CHECK(m.r == 2);
    CHECK(m.N == 4);
    CHECK(m.block_sizes == std::vector<std::size_t>{1, 3, 1});
  }
  {
    const ModelInfo m = model_info(HSSFamily::cayley_plane());
    CHECK(m.n == 16);
    CHECK(m.r == 2);
    CHECK(m.block_sizes == std::vector<std::size_t>{1, 16, 10});
  }
  {
    const ModelInfo m = model_info(HSSFamily::freudenthal());
    CHECK(m.n == 27);
    CHECK(m.r == 3);
    CHECK(m.N == 55);
    CHECK(m.block_sizes == std::vector<std::size_t>{1, 27, 27, 1});
  }
  {
    const ModelInfo m = model_info(HSSFamily::orth_grassmann(5));
    CHECK(m.n == 10);
    CHECK(m.r == 2);
    CHECK(m.block_sizes == std::vector<std::size_t>{1, 10, 5});
  }
  CHECK_THROWS_AS(model_info(HSSFamily::grassmann(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(model_info(HSSFamily::quadric(2)), std::invalid_argument);
}

TEST_CASE("model dimension equals the noncompact positive root count") {
  for (const HSSFamily& f :
       {HSSFamily::grassmann(4, 3), HSSFamily::orth_grassmann(7), HSSFamily::lag_grassmann(5),
        HSSFamily::quadric(8), HSSFamily::cayley_plane(), HSSFamily::freudenthal()}) {
    CHECK(model_info(f).n == build_marked_datum(f).noncompact.size());
    CHECK(model_info(f).r == strongly_orthogonal_chain(build_marked_datum(f)).size());
  }
}

TEST_CASE("block sizes sum to N + 1") {
  for (const HSSFamily& f :
       {HSSFamily::grassmann(5, 3), HSSFamily::orth_grassmann(8), HSSFamily::lag_grassmann(4),
        HSSFamily::quadric(6), HSSFamily::freudenthal()}) {
    const ModelInfo m = model_info(f);
    CHECK(std::accumulate(m.block_sizes.begin(), m.block_sizes.end(), std::size_t(0)) ==
          m.N + 1);
  }
}

TEST_CASE("tangent_rank: pinned examples") {
  {
    TangentVec v{HSSFamily::grassmann(3, 2),
                 RatMatrix(3, 2, {Rat(1), Rat(2), Rat(2), Rat(4), Rat(3), Rat(6)})};
    CHECK(tangent_rank(v) == 1);
  }
  {
    RatMatrix a(4, 4);
    a.at(0, 1) = 1;
    a.at(1, 0) = -1;
    TangentVec v{HSSFamily::orth_grassmann(4), a};
    CHECK(tangent_rank(v) == 1);  // half the matrix rank
  }
  {
    TangentVec v{HSSFamily::quadric(4), RatVec{Rat(1), Rat(0), Rat(0), Rat(0)}};
    CHECK(tangent_rank(v) == 1);  // split form vanishes on e1
    TangentVec w{HSSFamily::quadric(4), RatVec{Rat(1), Rat(1), Rat(0), Rat(0)}};
    CHECK(tangent_rank(w) == 2);
  }
  CHECK(tangent_rank(zero_tangent(HSSFamily::freudenthal())) == 0);
  {
    TangentVec v{HSSFamily::freudenthal(), JordanElem::identity()};
    CHECK(tangent_rank(v) == 3);
  }
}

TEST_CASE("secant generators: pinned Grassmann case") {
  TangentVec v{HSSFamily::grassmann(2, 2), RatMatrix(2, 2, {Rat(1), Rat(2), Rat(3), Rat(4)})};
  const RatVec g = secant_generators(v, 1);
  REQUIRE(g.size() == 1);
  CHECK(g[0] == Rat(-2));
  CHECK(top_degree_form(v) == Rat(-2));
}

TEST_CASE("Lagrangian generator lists satisfy the expected linear relation at n = 4") {
  // the 2x2 symmetric minors m(R, C) obey m({0,1},{2,3}) - m({0,2},{1,3})
  // + m({0,3},{1,2}) = 0 identically
  SplitMix64 rng(2024);
  const HSSFamily f = HSSFamily::lag_grassmann(4);
  for (int t = 0; t < 30; ++t) {
    const TangentVec v = random_tangent_of_rank(f, 3, rng);
    const auto& a = std::get<RatMatrix>(v.payload);
    const auto m = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
      return a.at(r0, c0) * a.at(r1, c1) - a.at(r0, c1) * a.at(r1, c0);
    };
    CHECK(m(0, 1, 2, 3) - m(0, 2, 1, 3) + m(0, 3, 1, 2) == 0);
  }
}

TEST_CASE("flatten/unflatten round trip every family") {
  SplitMix64 rng(77);
  for (const HSSFamily& f :
       {HSSFamily::grassmann(3, 2), HSSFamily::orth_grassmann(5), HSSFamily::lag_grassmann(3),
        HSSFamily::quadric(5), HSSFamily::cayley_plane(), HSSFamily::freudenthal()}) {
    const std::size_t r = model_info(f).r;
    for (std::size_t k = 0; k <= r; ++k) {
      if (f.tag == FamilyTag::Quadric && k == 1 && f.form == QuadricForm::SumSquares) continue;
      const TangentVec v = random_tangent_of_rank(f, k, rng);
      const RatVec c = flatten_tangent(v);
      CHECK(c.size() == model_info(f).n);
      const TangentVec back = unflatten_tangent(f, c);
      CHECK(flatten_tangent(back) == c);
      CHECK(tangent_rank(back) == k);
    }
  }
}

TEST_CASE("random_tangent_of_rank hits the requested rank") {
  SplitMix64 rng(5);
  for (const HSSFamily& f :
       {HSSFamily::grassmann(4, 3), HSSFamily::orth_grassmann(6), HSSFamily::lag_grassmann(4),
        HSSFamily::quadric(7), HSSFamily::cayley_plane(), HSSFamily::freudenthal()}) {
    const std::size_t r = model_info(f).r;
    for (std::size_t k = 0; k <= r; ++k) {
      for (int t = 0; t < 10; ++t) CHECK(tangent_rank(random_tangent_of_rank(f, k, rng)) == k);
    }
  }
  CHECK_THROWS_AS(
      random_tangent_of_rank(HSSFamily::quadric(4, QuadricForm::SumSquares), 1, rng),
      std::runtime_error);
}

TEST_CASE("secant generator vanishing matches rank thresholds") {
  SplitMix64 rng(99);
  for (const HSSFamily& f : {HSSFamily::grassmann(4, 3), HSSFamily::lag_grassmann(4),
                             HSSFamily::orth_grassmann(8), HSSFamily::freudenthal()}) {
    const std::size_t r = model_info(f).r;
    for (std::size_t rank = 0; rank <= r; ++rank) {
      const TangentVec v = random_tangent_of_rank(f, rank, rng);
      for (std::size_t k = 1; k + 1 <= r; ++k) {
        const RatVec g = secant_generators(v, k);
        const bool vanish =
            std::all_of(g.begin(), g.end(), [](const Rat& x) { return x == 0; });
        CHECK(vanish == (rank <= k));
      }
    }
  }
}

TEST_CASE("Cayley plane F_1 agrees with an independent rank-1 criterion") {
  // embed (u, w) as the off-diagonal Jordan element {0,0,0; x=u, y=w, z=0};
  // its adjugate is (0, -N(w), -N(u); 0, 0, conj(u) w), so it vanishes exactly
  // when the rank-1 equations N(u) = N(w) = conj(u) w = 0 hold
  SplitMix64 rng(321);
  const HSSFamily f = HSSFamily::cayley_plane();
  for (std::size_t k = 0; k <= 2; ++k) {
    for (int t = 0; t < 20; ++t) {
      const TangentVec v = random_tangent_of_rank(f, k, rng);
      const auto& [u, w] = std::get<OctPair>(v.payload);
      const RatVec g = secant_generators(v, 1);
      const bool vanish = std::all_of(g.begin(), g.end(), [](const Rat& x) { return x == 0; });
      JordanElem embed;
      embed.x = u;
      embed.y = w;
      CHECK(vanish == jordan_adj(embed).is_zero());
      CHECK(vanish == (k <= 1));
    }
  }
}

TEST_CASE("submodel_embed: pinned behavior") {
  const HSSFamily big = HSSFamily::grassmann(4, 3);
  TangentVec sub{HSSFamily::grassmann(2, 2),
                 RatMatrix(2, 2, {Rat(1), Rat(2), Rat(3), Rat(4)})};
  {
    const TangentVec e = submodel_embed(big, sub, EmbedCorner::Leading);
    const auto& m = std::get<RatMatrix>(e.payload);
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 1) == 4);
    CHECK(m.at(3, 2) == 0);
    CHECK(tangent_rank(e) == 2);
  }
  {
    const TangentVec e = submodel_embed(big, sub, EmbedCorner::Trailing);
    const auto& m = std::get<RatMatrix>(e.payload);
    CHECK(m.at(2, 1) == 1);
    CHECK(m.at(3, 2) == 4);
    CHECK(m.at(0, 0) == 0);
    CHECK(tangent_rank(e) == 2);
  }
  CHECK_THROWS_AS(submodel_embed(big, zero_tangent(HSSFamily::lag_grassmann(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(submodel_embed(HSSFamily::cayley_plane(), zero_tangent(HSSFamily::quadric(8))),
                  std::invalid_argument);
}

TEST_CASE("validate_tangent rejects malformed payloads") {
  CHECK_THROWS_AS(validate_tangent(TangentVec{HSSFamily::grassmann(3, 2), RatMatrix(2, 2)}),
                  std::invalid_argument);
  RatMatrix notAntisym(4, 4);
  notAntisym.at(0, 1) = 1;
  CHECK_THROWS_AS(validate_tangent(TangentVec{HSSFamily::orth_grassmann(4), notAntisym}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate_tangent(TangentVec{HSSFamily::quadric(5), RatVec(4, Rat(0))}),
                  std::invalid_argument);
}
