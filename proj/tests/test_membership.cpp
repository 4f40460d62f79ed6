#include <algorithm>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "test_helpers.hpp"
#include "tmreg/membership.hpp"

using namespace tmreg;

namespace {
  std::vector<MonoidTag> const partition_tags = {MonoidTag::TXP,
                                                 MonoidTag::SigmaXP,
                                                 MonoidTag::GammaXP,
                                                 MonoidTag::TEStar,
                                                 MonoidTag::OmegaXP,
                                                 MonoidTag::SXP};

  std::vector<Transformation> filter_all_maps(MonoidId const& m, std::size_t n) {
    std::vector<Transformation> out;
    for (auto const& f : test::all_maps(n)) {
      if (is_member(f, m)) {
        out.push_back(f);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("MonoidId checks its partition", "[membership]") {
  CHECK_THROWS_AS(MonoidId(MonoidTag::TXP), InvalidArgument);
  CHECK_THROWS_AS(MonoidId(MonoidTag::FullT, SetPartition::discrete(2)),
                  InvalidArgument);
  MonoidId const m(MonoidTag::OmegaXP, SetPartition::discrete(2));
  CHECK(m.unit_group().tag() == MonoidTag::SXP);
  CHECK(MonoidId(MonoidTag::FullT).unit_group().tag() == MonoidTag::SymmetricS);
  CHECK(monoid_tag_from_string("gamma-xp") == MonoidTag::GammaXP);
  CHECK_THROWS_AS(monoid_tag_from_string("nope"), ParseError);
}

TEST_CASE("is_member examples", "[membership]") {
  SetPartition const p({{0, 1}, {2, 3}});
  auto const         in = [&](Transformation const& f, MonoidTag t) {
    return is_member(f, MonoidId(t, p));
  };

  Transformation const f{0, 0, 0, 1};
  CHECK(in(f, MonoidTag::TXP));
  CHECK_FALSE(in(f, MonoidTag::SigmaXP));
  CHECK_FALSE(in(f, MonoidTag::OmegaXP));

  Transformation const swap{2, 3, 0, 1};
  for (auto t : partition_tags) {
    CHECK(in(swap, t));
  }

  for (auto const& q : all_set_partitions(4)) {
    for (auto t : partition_tags) {
      CHECK(is_member(Transformation::identity(4), MonoidId(t, q)));
    }
  }
  CHECK(is_member(Transformation::identity(4), MonoidId(MonoidTag::FullT)));
  CHECK(is_member(Transformation::identity(4), MonoidId(MonoidTag::SymmetricS)));
}

TEST_CASE("is_member_by_character examples", "[membership]") {
  SetPartition const p({{0, 1}, {2, 3}});
  auto const         by_char = [](Transformation const& f, SetPartition const& q, MonoidTag t) {
    return is_member_by_character(f, MonoidId(t, q));
  };
  Transformation const f{2, 2, 1, 0};
  CHECK_FALSE(by_char(f, p, MonoidTag::SXP));
  CHECK(by_char(f, p, MonoidTag::TEStar));
  CHECK(by_char(f, p, MonoidTag::SigmaXP));

  SetPartition const   q({{0, 1}, {2, 3, 4}});
  Transformation const g{2, 3, 2, 3, 4};
  CHECK_FALSE(by_char(g, q, MonoidTag::SigmaXP));
  CHECK_FALSE(by_char(g, q, MonoidTag::TEStar));

  for (auto t : partition_tags) {
    CHECK(by_char(Transformation::identity(4), p, t));
  }
  CHECK_THROWS_AS(by_char(Transformation{0, 2, 1, 3}, p, MonoidTag::SigmaXP),
                  NotPartitionPreserving);
}

TEST_CASE("definitional and character-based membership agree for n <= 5",
          "[membership][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      for (auto const& f : enumerate(MonoidId(MonoidTag::TXP, p), n)) {
        for (auto t : partition_tags) {
          MonoidId const m(t, p);
          REQUIRE(is_member(f, m) == is_member_by_character(f, m));
        }
      }
    }
  }
}

TEST_CASE("enumerate examples", "[membership]") {
  CHECK(count(MonoidId(MonoidTag::SymmetricS), 3) == 6);
  CHECK(count(MonoidId(MonoidTag::SymmetricS), 4) == 24);
  CHECK(count(MonoidId(MonoidTag::FullT), 3) == 27);

  SetPartition const p({{0, 1}, {2, 3}});
  CHECK(count(MonoidId(MonoidTag::TXP, p), 4) == 64);
  CHECK(count(MonoidId(MonoidTag::SXP, p), 4) == 8);
  CHECK(count(MonoidId(MonoidTag::SigmaXP, p), 4) == 32);
  CHECK(count(MonoidId(MonoidTag::GammaXP, p), 4) == 16);
  CHECK(count(MonoidId(MonoidTag::TEStar, p), 4) == 32);
  CHECK(count(MonoidId(MonoidTag::OmegaXP, p), 4) == 16);

  CHECK(count(MonoidId(MonoidTag::SigmaXP, SetPartition({{0, 1}, {2}})), 3) == 6);
}

TEST_CASE("block-structured enumeration equals filtering all maps",
          "[membership][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    REQUIRE(enumerate(MonoidId(MonoidTag::FullT), n) == test::all_maps(n));
    REQUIRE(enumerate(MonoidId(MonoidTag::SymmetricS), n)
            == filter_all_maps(MonoidId(MonoidTag::SymmetricS), n));
    for (auto const& p : all_set_partitions(n)) {
      for (auto t : partition_tags) {
        MonoidId const m(t, p);
        // both sides are in lexicographic order, so equality also pins the
        // order and the absence of duplicates
        REQUIRE(enumerate(m, n) == filter_all_maps(m, n));
      }
    }
  }
}

TEST_CASE("enumerators are restartable", "[membership]") {
  Enumerator                    e(MonoidId(MonoidTag::SXP, SetPartition({{0, 1}, {2}})), 3);
  std::optional<Transformation> f;
  std::vector<Transformation>   first, second;
  while (e.next(f)) {
    first.push_back(*f);
  }
  CHECK_FALSE(e.next(f));
  e.reset();
  while (e.next(f)) {
    second.push_back(*f);
  }
  CHECK(first == second);
  CHECK(first.size() == 2);
}

TEST_CASE("enumeration caps", "[membership]") {
  CHECK_THROWS_AS(Enumerator(MonoidId(MonoidTag::FullT), 8), CapExceeded);
  CHECK_THROWS_AS(Enumerator(MonoidId(MonoidTag::SymmetricS), 9), CapExceeded);
  CHECK_NOTHROW(Enumerator(MonoidId(MonoidTag::SymmetricS), 8));
  CHECK_THROWS_AS(count(MonoidId(MonoidTag::FullT), 4, 3), CapExceeded);
  CHECK(count(MonoidId(MonoidTag::SymmetricS), 9, 9) == 362880);
}

TEST_CASE("every monoid contains the identity and is closed under composition",
          "[membership][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      for (auto t : partition_tags) {
        MonoidId const m(t, p);
        auto const     members = enumerate(m, n);
        REQUIRE(std::find(members.begin(), members.end(), Transformation::identity(n))
                != members.end());
        for (auto const& f : members) {
          for (auto const& g : members) {
            REQUIRE(is_member(f * g, m));
          }
        }
      }
    }
  }
}

TEST_CASE("S(X, P) is exactly the group of units of T(X, P)",
          "[membership][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      auto const txp = enumerate(MonoidId(MonoidTag::TXP, p), n);
      auto const id  = Transformation::identity(n);
      for (auto const& f : txp) {
        bool has_inverse = std::any_of(txp.begin(), txp.end(), [&](auto const& g) {
          return f * g == id && g * f == id;
        });
        REQUIRE(has_inverse == is_member(f, MonoidId(MonoidTag::SXP, p)));
      }
    }
  }
}

TEST_CASE("S(X, P) lies in every submonoid, which all lie in T(X, P)",
          "[membership][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      for (auto const& f : test::all_maps(n)) {
        bool const in_sxp = is_member(f, MonoidId(MonoidTag::SXP, p));
        bool const in_txp = is_member(f, MonoidId(MonoidTag::TXP, p));
        for (auto t : {MonoidTag::SigmaXP,
                       MonoidTag::GammaXP,
                       MonoidTag::TEStar,
                       MonoidTag::OmegaXP}) {
          bool const in_n = is_member(f, MonoidId(t, p));
          REQUIRE((!in_sxp || in_n));
          REQUIRE((!in_n || in_txp));
        }
      }
    }
  }
}

TEST_CASE("Omega(X, P) for the two trivial partitions", "[membership]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    MonoidId const discrete(MonoidTag::OmegaXP, SetPartition::discrete(n));
    MonoidId const single(MonoidTag::OmegaXP, SetPartition::single_block(n));
    for (auto const& f : test::all_maps(n)) {
      REQUIRE(is_member(f, discrete));
      REQUIRE(is_member(f, single) == f.is_permutation());
    }
  }
}
