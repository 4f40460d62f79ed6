#include <algorithm>
#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "test_helpers.hpp"
#include "tmreg/oracle.hpp"

using namespace tmreg;

TEST_CASE("oracle_regular examples", "[oracle]") {
  SECTION("identity") {
    for (auto const& p : all_set_partitions(3)) {
      auto const r = oracle_regular(Transformation::identity(3),
                                    MonoidId(MonoidTag::OmegaXP, p));
      CHECK(r.regular);
      CHECK(r.unit_regular);
    }
    auto const r = oracle_regular(Transformation::identity(3), MonoidId(MonoidTag::FullT));
    REQUIRE(r.first_witness);
    CHECK(*r.first_witness == Transformation::identity(3));
  }
  SECTION("(0,0,1) in T(X)") {
    auto const r = oracle_regular(Transformation{0, 0, 1}, MonoidId(MonoidTag::FullT));
    CHECK(r.regular);
    REQUIRE(r.first_witness);
    // least g in lexicographic order with fgf = f
    CHECK(*r.first_witness == Transformation{0, 2, 0});
    CHECK(r.inner_inverses_found == 6);
    CHECK(r.unit_inner_inverses.size() == 2);
  }
  SECTION("not regular in Omega(X, P)") {
    SetPartition const p({{0, 1}, {2, 3, 4}, {5, 6, 7}});
    Transformation const f{2, 3, 5, 6, 7, 5, 6, 7};
    auto const r = oracle_regular(f, MonoidId(MonoidTag::OmegaXP, p), 8);
    CHECK_FALSE(r.regular);
    CHECK_FALSE(r.unit_regular);
    CHECK(r.inner_inverses_found == 0);
    CHECK_FALSE(r.first_witness);
  }
}

TEST_CASE("oracle_unit_regular examples", "[oracle]") {
  auto const full = MonoidId(MonoidTag::FullT);
  CHECK(oracle_unit_regular(Transformation::constant(3, 0), full).unit_inner_inverses.size() == 6);

  auto const r = oracle_unit_regular(Transformation{0, 0, 1}, full);
  CHECK(r.unit_inner_inverses
        == std::vector<Transformation>{Transformation{0, 2, 1}, Transformation{1, 2, 0}});
  CHECK(r.scope == OracleScope::UnitGroup);

  Transformation const perm{2, 0, 3, 1};
  auto const           s = oracle_unit_regular(perm, full);
  REQUIRE(s.unit_inner_inverses.size() == 1);
  CHECK(s.unit_inner_inverses.front() == perm.inverse());
}

TEST_CASE("oracle errors", "[oracle]") {
  SetPartition const p({{0, 1}, {2, 3}});
  CHECK_THROWS_AS(oracle_regular(Transformation{0, 0, 0, 1},
                                 MonoidId(MonoidTag::SigmaXP, p)),
                  NotInMonoid);
  CHECK_THROWS_AS(oracle_unit_regular(Transformation{0, 2, 1, 3},
                                      MonoidId(MonoidTag::TXP, p)),
                  NotInMonoid);
  CHECK_THROWS_AS(oracle_regular(Transformation::identity(6), MonoidId(MonoidTag::FullT)),
                  CapExceeded);
  CHECK_THROWS_AS(oracle_unit_regular(Transformation::identity(8),
                                      MonoidId(MonoidTag::FullT)),
                  CapExceeded);
  CHECK_NOTHROW(oracle_unit_regular(Transformation::identity(7), MonoidId(MonoidTag::FullT)));
}

TEST_CASE("oracle results are self-consistent", "[oracle][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      MonoidId const txp(MonoidTag::TXP, p);
      for (auto const& f : enumerate(txp, n)) {
        auto const whole = oracle_regular(f, txp);
        auto const units = oracle_unit_regular(f, txp);
        REQUIRE(whole.unit_inner_inverses == units.unit_inner_inverses);
        REQUIRE((!whole.unit_regular || whole.regular));
        REQUIRE(whole.inner_inverses_found >= whole.unit_inner_inverses.size());
        for (auto const& u : units.unit_inner_inverses) {
          REQUIRE(f * u * f == f);
          REQUIRE(is_member(u, MonoidId(MonoidTag::SXP, p)));
        }
        for (auto t : {MonoidTag::SigmaXP,
                       MonoidTag::GammaXP,
                       MonoidTag::TEStar,
                       MonoidTag::OmegaXP}) {
          MonoidId const m(t, p);
          if (is_member(f, m)) {
            REQUIRE(oracle_regular(f, m).inner_inverses_found
                    <= whole.inner_inverses_found);
          }
        }
      }
    }
  }
}

TEST_CASE("verify_cross_section_lemma", "[oracle]") {
  CHECK(verify_cross_section_lemma(Transformation{0, 0, 1}, Transformation{0, 2, 1}));
  // fgf != f: vacuous
  CHECK(verify_cross_section_lemma(Transformation{0, 0, 1}, Transformation{0, 0, 2}));

  auto const maps = test::all_maps(3);
  for (auto const& f : maps) {
    for (auto const& g : maps) {
      REQUIRE(verify_cross_section_lemma(f, g));
    }
  }
  std::mt19937 rng(5);
  for (int k = 0; k < 5000; ++k) {
    auto const f = test::random_map(6, rng);
    auto const g = test::random_map(6, rng);
    REQUIRE(verify_cross_section_lemma(f, g));
  }
}
