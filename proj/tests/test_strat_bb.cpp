#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hss/strata.hpp"

using namespace hss;

namespace {

ProjPoint blocked(const HSSFamily& f, RatVec coords) {
  return proj_point(std::move(coords), model_info(f).block_sizes);
}

}  // namespace

TEST_CASE("block_support and section membership on the small quadric") {
  const HSSFamily f = HSSFamily::quadric(3);  // blocks 1, 3, 1
  {
    const ProjPoint z = blocked(f, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK(block_support(z) == std::set<std::size_t>{0, 1, 2});
    CHECK(in_V(z, 2));
    CHECK_FALSE(in_V(z, 1));
    CHECK_FALSE(in_M(z, 1));
  }
  {
    const ProjPoint z = blocked(f, {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)});
    CHECK(block_support(z) == std::set<std::size_t>{1});
    CHECK(in_M(z, 2));   // blocks 0..r-2 = {0} vanish
    CHECK_FALSE(in_M(z, 1));
    CHECK(in_V(z, 1));   // blocks 2..r vanish
  }
}

TEST_CASE("classify_stratum: pinned cases") {
  const HSSFamily f = HSSFamily::quadric(3);
  CHECK(classify_stratum(f, blocked(f, {Rat(1), Rat(1), Rat(0), Rat(0), Rat(1)})) ==
        Stratum{StratumKind::AffineCell, 2});
  CHECK(classify_stratum(f, blocked(f, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)})) ==
        Stratum{StratumKind::AffineCell, 0});
  CHECK(classify_stratum(f, blocked(f, {Rat(0), Rat(1), Rat(0), Rat(0), Rat(0)})) ==
        Stratum{StratumKind::NFixed, 1});
  CHECK(classify_stratum(f, blocked(f, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)})) ==
        Stratum{StratumKind::NFixed, 2});
}

TEST_CASE("Stratum::to_string") {
  CHECK(Stratum{StratumKind::NFixed, 2}.to_string() == "N_fixed(2)");
  CHECK(Stratum{StratumKind::AffineCell, 1}.to_string().find("1") != std::string::npos);
}

TEST_CASE("flow limits land in the fixed locus across families") {
  SplitMix64 rng(17);
  for (const HSSFamily& f :
       {HSSFamily::grassmann(3, 2), HSSFamily::orth_grassmann(6), HSSFamily::lag_grassmann(3),
        HSSFamily::quadric(5), HSSFamily::cayley_plane(), HSSFamily::freudenthal()}) {
    const std::size_t r = model_info(f).r;
    for (std::size_t k = 1; k <= r; ++k) {
      for (int t = 0; t < 5; ++t) {
        const TangentVec v = random_tangent_of_rank(f, k, rng);
        const ProjPoint lim = phi_limit_at_infinity(v);
        CHECK(block_support(lim) == std::set<std::size_t>{k});
        CHECK(classify_stratum(f, lim) == Stratum{StratumKind::NFixed, k});
        CHECK(cstar_act_target(Rat(2), lim) == lim);
      }
    }
  }
}

TEST_CASE("bb_full_report: pinned Quadric(5) rows and family-wide pass") {
  {
    const BBReport rep = bb_full_report(HSSFamily::quadric(5), 4, 13);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.n == 5);
    CHECK(rep.rows[0].dim_N == 3);
    CHECK(rep.rows[0].plus_fiber == 1);
    CHECK(rep.rows[0].minus_fiber == 1);
    CHECK(rep.rows[1].dim_N == 0);
    CHECK(rep.rows[1].plus_fiber == 0);
    CHECK(rep.rows[1].minus_fiber == 5);
    CHECK(rep.pass);
    for (const BBReportRow& row : rep.rows) {
      CHECK(row.sum == rep.n);
      CHECK(row.sampled_limits == 4);
      CHECK(row.limits_in_N == 4);
    }
  }
  for (const HSSFamily& f : {HSSFamily::grassmann(3, 3), HSSFamily::orth_grassmann(5),
                             HSSFamily::lag_grassmann(3), HSSFamily::cayley_plane(),
                             HSSFamily::freudenthal()}) {
    CHECK(bb_full_report(f, 3, 29).pass);
  }
}
