#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hss/restricted_roots.hpp"
#include "hss/root_system.hpp"
#include "hss/suites.hpp"

#include <fstream>
#include <json.hpp>
#include <set>

using namespace hss;

TEST_CASE("classical root systems have the classical positive counts") {
  CHECK(build_root_system_A(3).positive_roots.size() == 6);
  CHECK(build_root_system_B(3).positive_roots.size() == 9);
  CHECK(build_root_system_C(4).positive_roots.size() == 16);
  CHECK(build_root_system_D(5).positive_roots.size() == 20);
  CHECK(build_root_system_E6().positive_roots.size() == 36);
  CHECK(build_root_system_E7().positive_roots.size() == 63);
}

TEST_CASE("every positive root is a nonnegative integer combination of simples") {
  for (const RootDatum& d : {build_root_system_B(4), build_root_system_E7()}) {
    for (const Root& r : d.positive_roots) {
      RatVec reconstructed(d.ambient_dim, Rat(0));
      for (std::size_t i = 0; i < d.rank; ++i) {
        CHECK(denominator(r.simple_coeff[i]) == 1);
        CHECK(r.simple_coeff[i] >= 0);
        for (std::size_t t = 0; t < d.ambient_dim; ++t)
          reconstructed[t] += r.simple_coeff[i] * d.simple_roots[i][t];
      }
      CHECK(reconstructed == r.ambient);
    }
  }
}

TEST_CASE("marked data: pinned noncompact counts") {
  {
    const MarkedDatum d = build_marked_datum(HSSFamily::grassmann(2, 2));
    CHECK(d.datum.label == "A3");
    CHECK(d.marked_node == 2);
    CHECK(d.noncompact.size() == 4);  // A3 roots with middle coefficient 1
  }
  {
    const MarkedDatum d = build_marked_datum(HSSFamily::quadric(3));
    CHECK(d.datum.label == "B2");
    CHECK(d.marked_node == 1);
    CHECK(d.noncompact.size() == 3);
  }
  CHECK(build_marked_datum(HSSFamily::freudenthal()).noncompact.size() == 27);
  CHECK(build_marked_datum(HSSFamily::cayley_plane()).noncompact.size() == 16);
}

TEST_CASE("strongly orthogonal chains: pinned lengths") {
  CHECK(strongly_orthogonal_chain(build_marked_datum(HSSFamily::grassmann(3, 2))).size() == 2);
  CHECK(strongly_orthogonal_chain(build_marked_datum(HSSFamily::lag_grassmann(3))).size() == 3);
  CHECK(strongly_orthogonal_chain(build_marked_datum(HSSFamily::freudenthal())).size() == 3);
  CHECK(strongly_orthogonal_chain(build_marked_datum(HSSFamily::orth_grassmann(7))).size() == 3);
}

TEST_CASE("restrict_root: pinned examples") {
  {
    const MarkedDatum d = build_marked_datum(HSSFamily::grassmann(2, 2));
    const auto chain = strongly_orthogonal_chain(d);
    // self restriction
    CHECK(restrict_root(chain.front().ambient, chain).coeff ==
          RatVec{Rat(1), Rat(0)});
    // every noncompact root off the chain restricts to (1/2, 1/2)
    for (const Root& beta : d.noncompact) {
      if (beta == chain[0] || beta == chain[1]) continue;
      CHECK(restrict_root(beta.ambient, chain).coeff == RatVec{Rat(1, 2), Rat(1, 2)});
    }
  }
  {
    // compact simple roots of the symmetric 2x2 model restrict to (1/2, -1/2)
    const MarkedDatum d = build_marked_datum(HSSFamily::lag_grassmann(2));
    const auto chain = strongly_orthogonal_chain(d);
    const RestrictedRoot rr = restrict_root(d.datum.simple_roots[0], chain);
    const bool matches = rr.coeff == RatVec{Rat(1, 2), Rat(-1, 2)} ||
                         rr.coeff == RatVec{Rat(-1, 2), Rat(1, 2)};
    CHECK(matches);
  }
}

TEST_CASE("classify_tube matches the expected tube column") {
  CHECK(classify_tube(build_marked_datum(HSSFamily::grassmann(3, 3))).is_tube);
  CHECK_FALSE(classify_tube(build_marked_datum(HSSFamily::grassmann(3, 2))).is_tube);
  CHECK(classify_tube(build_marked_datum(HSSFamily::freudenthal())).is_tube);
  CHECK_FALSE(classify_tube(build_marked_datum(HSSFamily::cayley_plane())).is_tube);
  CHECK(classify_tube(build_marked_datum(HSSFamily::orth_grassmann(6))).is_tube);
  CHECK_FALSE(classify_tube(build_marked_datum(HSSFamily::orth_grassmann(7))).is_tube);
}

TEST_CASE("infinity locus dimensions: pinned examples") {
  CHECK(infinity_locus_dim(build_marked_datum(HSSFamily::grassmann(3, 2)), 1) == 3);
  CHECK(infinity_locus_dim(build_marked_datum(HSSFamily::quadric(7)), 2) == 0);
  CHECK(infinity_locus_dim(build_marked_datum(HSSFamily::freudenthal()), 2) == 16);
  CHECK_THROWS_AS(infinity_locus_dim(build_marked_datum(HSSFamily::quadric(5)), 3),
                  std::invalid_argument);
}

TEST_CASE("balanced and characteristic dimensions: pinned examples") {
  const MarkedDatum g32 = build_marked_datum(HSSFamily::grassmann(3, 2));
  CHECK(balanced_dim(g32, 2) == 4);
  CHECK(char_dim(g32, 1) == 2);
  const MarkedDatum e7 = build_marked_datum(HSSFamily::freudenthal());
  CHECK(balanced_dim(e7, 1) == 1);
  CHECK(balanced_dim(e7, 2) == 10);
  CHECK(char_dim(e7, 2) == 1);
  CHECK(char_dim(build_marked_datum(HSSFamily::cayley_plane()), 1) == 5);
}

TEST_CASE("transversal partition holds for pinned cases") {
  const MarkedDatum g33 = build_marked_datum(HSSFamily::grassmann(3, 3));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(transversal_partition(g33, k));
  CHECK(transversal_partition(build_marked_datum(HSSFamily::quadric(4)), 1));
  CHECK(transversal_partition(build_marked_datum(HSSFamily::freudenthal()), 2));
}

TEST_CASE("BB dimension table: pinned rows") {
  {
    const auto rows = bb_dimension_table(build_marked_datum(HSSFamily::grassmann(2, 2)));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].dim_N == 2);
    CHECK(rows[0].plus_fiber == 1);
    CHECK(rows[0].minus_fiber == 1);
  }
  {
    const auto rows = bb_dimension_table(build_marked_datum(HSSFamily::quadric(9)));
    CHECK(rows[0].dim_N == 7);
    CHECK(rows[0].plus_fiber == 1);
    CHECK(rows[0].minus_fiber == 1);
  }
  {
    const auto rows = bb_dimension_table(build_marked_datum(HSSFamily::freudenthal()));
    REQUIRE(rows.size() == 3);
    CHECK(rows[2].dim_N == 0);
    CHECK(rows[2].plus_fiber + rows[2].minus_fiber == 27);
  }
}

TEST_CASE("E6 fixture: the 16 noncompact root strings under the label mapping") {
  // the source diagram labels the chain 1-2-3-4-5 with 6 on the branch;
  // ours (Bourbaki) labels the chain 1-3-4-5-6 with 2 on the branch
  const std::size_t to_bourbaki[6] = {1, 3, 4, 5, 6, 2};
  const int strings[16][6] = {
      {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 1},
      {1, 1, 1, 1, 0, 0}, {1, 1, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 0}, {1, 1, 2, 1, 0, 1},
      {1, 1, 1, 1, 1, 1}, {1, 2, 2, 1, 0, 1}, {1, 1, 2, 1, 1, 1}, {1, 2, 2, 1, 1, 1},
      {1, 1, 2, 2, 1, 1}, {1, 2, 2, 2, 1, 1}, {1, 2, 3, 2, 1, 1}, {1, 2, 3, 2, 1, 2}};
  std::set<std::vector<int>> expected;
  for (const auto& s : strings) {
    std::vector<int> bourbaki(6, 0);
    for (std::size_t i = 0; i < 6; ++i) bourbaki[to_bourbaki[i] - 1] = s[i];
    expected.insert(bourbaki);
  }
  const MarkedDatum d = build_marked_datum(HSSFamily::cayley_plane());
  std::set<std::vector<int>> got;
  for (const Root& r : d.noncompact) {
    std::vector<int> c;
    for (const Rat& x : r.simple_coeff)
      c.push_back(static_cast<int>(numerator(x).convert_to<long long>()));
    got.insert(c);
  }
  CHECK(got == expected);
}

TEST_CASE("dimension engine vs closed-form fixture file") {
  std::ifstream in(std::string(HSS_DATA_DIR) + "/table_dims.json");
  REQUIRE(in.good());
  nlohmann::json fixture;
  in >> fixture;
  CHECK(fixture == generate_table_fixture());
  for (const auto& e : fixture.at("families")) {
    SuiteConfig cfg;
    cfg.family = e.at("family").get<std::string>();
    if (e.contains("p")) cfg.p = e.at("p").get<std::size_t>();
    if (e.contains("q")) cfg.q = e.at("q").get<std::size_t>();
    if (cfg.family != "grassmann" && e.contains("n")) cfg.n = e.at("n").get<std::size_t>();
    const HSSFamily f = sweep_families(cfg).front();
    const MarkedDatum md = build_marked_datum(f);
    const std::size_t r = e.at("r").get<std::size_t>();
    CHECK(md.noncompact.size() == e.at("dim").get<std::size_t>());
    CHECK(classify_tube(md).is_tube == e.at("tube").get<bool>());
    for (std::size_t k = 1; k <= r; ++k) {
      CHECK(infinity_locus_dim(md, k) == e.at("infinity_dims")[k - 1].get<std::size_t>());
      CHECK(balanced_dim(md, k) == e.at("balanced_dims")[k - 1].get<std::size_t>());
    }
    for (std::size_t k = 0; k <= r; ++k)
      CHECK(char_dim(md, k) == e.at("char_dims")[k].get<std::size_t>());
  }
}
