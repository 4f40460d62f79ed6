#include <random>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "test_helpers.hpp"
#include "tmreg/decomposition.hpp"
#include "tmreg/kernel.hpp"
#include "tmreg/membership.hpp"
#include "tmreg/set_partition.hpp"
#include "tmreg/transformation.hpp"

using namespace tmreg;

TEST_CASE("Transformation rejects malformed image lists", "[core]") {
  CHECK_THROWS_AS(Transformation(std::vector<point_type>{}), InvalidArgument);
  CHECK_THROWS_AS(Transformation({0, 3, 1}), InvalidArgument);
  CHECK_NOTHROW(Transformation({0, 2, 1}));
}

TEST_CASE("compose acts on the right", "[core]") {
  Transformation const f{0, 0, 1};
  Transformation const g{0, 2, 1};
  CHECK(compose(f, g) == Transformation{0, 0, 2});
  CHECK(f * Transformation::identity(3) == f);
  CHECK(Transformation::identity(3) * f == f);

  Transformation const cycle{1, 2, 0};
  CHECK(power(cycle, 3) == Transformation::identity(3));
  CHECK(power(cycle, 2) != Transformation::identity(3));
  CHECK(cycle.inverse() == power(cycle, 2));

  CHECK_THROWS_AS(compose(f, Transformation::identity(4)), InvalidArgument);
  CHECK_THROWS_AS(f.inverse(), InvalidArgument);
}

TEST_CASE("compose is associative on random samples", "[core][property]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t const n = 1 + trial % 7;
    auto const        f = test::random_map(n, rng);
    auto const        g = test::random_map(n, rng);
    auto const        h = test::random_map(n, rng);
    REQUIRE((f * g) * h == f * (g * h));
  }
}

TEST_CASE("kernel_data examples", "[core]") {
  SECTION("identity") {
    auto const k = kernel_data(Transformation::identity(3));
    REQUIRE(k.classes.size() == 3);
    CHECK(k.classes[0] == KernelClass{0, {0}});
    CHECK(k.classes[1] == KernelClass{1, {1}});
    CHECK(k.classes[2] == KernelClass{2, {2}});
    CHECK(k.cross_section == std::vector<point_type>{0, 1, 2});
    CHECK(k.collapse == 0);
    CHECK(k.defect == 0);
  }
  SECTION("(0,0,1)") {
    auto const k = kernel_data(Transformation{0, 0, 1});
    REQUIRE(k.classes.size() == 2);
    CHECK(k.classes[0] == KernelClass{0, {0, 1}});
    CHECK(k.classes[1] == KernelClass{1, {2}});
    CHECK(k.cross_section == std::vector<point_type>{0, 2});
    CHECK(k.image == std::vector<point_type>{0, 1});
    CHECK(k.collapse == 1);
    CHECK(k.defect == 1);
  }
  SECTION("constant") {
    auto const k = kernel_data(Transformation::constant(3, 0));
    REQUIRE(k.classes.size() == 1);
    CHECK(k.classes[0] == KernelClass{0, {0, 1, 2}});
    CHECK(k.cross_section == std::vector<point_type>{0});
    CHECK(k.collapse == 2);
    CHECK(k.defect == 2);
  }
}

TEST_CASE("kernel_data invariants hold for every map with n <= 5",
          "[core][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& f : test::all_maps(n)) {
      auto const k = kernel_data(f);
      REQUIRE(k.cross_section.size() == k.image.size());
      REQUIRE(k.collapse == n - k.image.size());
      REQUIRE(k.defect == n - k.image.size());
      std::vector<point_type> keys;
      std::size_t             covered = 0;
      for (auto const& c : k.classes) {
        keys.push_back(c.image);
        covered += c.members.size();
        for (auto x : c.members) {
          REQUIRE(f[x] == c.image);
        }
      }
      REQUIRE(keys == k.image);
      REQUIRE(covered == n);
    }
  }
}

TEST_CASE("every map of a finite set is semi-balanced", "[core][property]") {
  CHECK(is_semi_balanced(Transformation::identity(4)));
  CHECK(is_semi_balanced(Transformation{0, 0, 1}));
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& f : test::all_maps(n)) {
      auto const k = kernel_data(f);
      REQUIRE(k.collapse == k.defect);
      REQUIRE(is_semi_balanced(f));
    }
  }
}

TEST_CASE("decompose examples", "[core]") {
  SetPartition const p({{0, 1}, {2, 3}});

  SECTION("(0,0,0,1)") {
    auto const d = decompose(Transformation{0, 0, 0, 1}, p);
    CHECK(d.character == Transformation{0, 0});
    REQUIRE(d.block_maps.size() == 2);
    using pairs = std::vector<std::pair<point_type, point_type>>;
    CHECK(d.block_maps[0].pairs == pairs{{0, 0}, {1, 0}});
    CHECK(d.block_maps[0].target == 0);
    CHECK(d.block_maps[1].pairs == pairs{{2, 0}, {3, 1}});
    CHECK(d.block_maps[1].target == 0);
  }
  SECTION("a block split across two blocks") {
    try {
      (void) decompose(Transformation{0, 2, 1, 3}, p);
      FAIL("expected NotPartitionPreserving");
    } catch (NotPartitionPreserving const& e) {
      CHECK(e.block() == 0);
    }
  }
  SECTION("the first offending block is reported") {
    SetPartition const q({{0}, {1, 2}, {3, 4}});
    try {
      (void) decompose(Transformation{0, 0, 0, 1, 3}, q);
      FAIL("expected NotPartitionPreserving");
    } catch (NotPartitionPreserving const& e) {
      CHECK(e.block() == 2);
    }
  }
  SECTION("identity") {
    for (auto const& q : all_set_partitions(4)) {
      auto const d = decompose(Transformation::identity(4), q);
      CHECK(d.character.is_identity());
      for (auto const& fi : d.block_maps) {
        CHECK(fi.source == fi.target);
        for (auto const& [x, y] : fi.pairs) {
          CHECK(x == y);
        }
      }
    }
  }
  SECTION("degree mismatch") {
    CHECK_THROWS_AS(decompose(Transformation::identity(3), p), InvalidArgument);
  }
}

TEST_CASE("block_map_stats examples", "[core]") {
  SetPartition const p({{0, 1}, {2, 3}});
  auto const         d = decompose(Transformation{0, 0, 0, 1}, p);
  CHECK(block_map_stats(d, 1) == BlockMapStats{0, 0, true, true});
  CHECK(block_map_stats(d, 0) == BlockMapStats{1, 1, false, false});

  SetPartition const q({{0, 1}, {2, 3, 4}});
  auto const         e = decompose(Transformation{2, 3, 2, 3, 4}, q);
  CHECK(block_map_stats(e, 0) == BlockMapStats{0, 1, true, false});

  CHECK_THROWS_AS(block_map_stats(d, 2), InvalidArgument);
}

TEST_CASE("block map injectivity and surjectivity match collapse and defect",
          "[core][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      for (auto const& f : enumerate(MonoidId(MonoidTag::TXP, p), n)) {
        auto const d = decompose(f, p);
        for (std::size_t i = 0; i < d.block_maps.size(); ++i) {
          auto const s = block_map_stats(d, i);
          REQUIRE(s.injective == (s.collapse == 0));
          REQUIRE(s.surjective == (s.defect == 0));
        }
      }
    }
  }
}

TEST_CASE("block maps reassemble to f and are unique", "[core][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      for (auto const& f : test::all_maps(n)) {
        bool preserving = true;
        try {
          auto const d = decompose(f, p);
          REQUIRE(reassemble(d) == f);
          for (auto const& fi : d.block_maps) {
            auto const block = p.block(fi.source);
            REQUIRE(fi.pairs.size() == block.size());
            for (std::size_t k = 0; k < block.size(); ++k) {
              // the only map with domain X_i induced by f
              REQUIRE(fi.pairs[k].first == block[k]);
              REQUIRE(fi.pairs[k].second == f[block[k]]);
              REQUIRE(p.block_of(f[block[k]]) == fi.target);
            }
          }
        } catch (NotPartitionPreserving const&) {
          preserving = false;
        }
        REQUIRE(preserving == is_member(f, MonoidId(MonoidTag::TXP, p)));
      }
    }
  }
}

TEST_CASE("the character is functorial", "[core][property]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& p : all_set_partitions(n)) {
      auto const members = enumerate(MonoidId(MonoidTag::TXP, p), n);
      for (auto const& f : members) {
        auto const chi_f = decompose(f, p).character;
        for (auto const& g : members) {
          auto const chi_g = decompose(g, p).character;
          REQUIRE(decompose(f * g, p).character == chi_f * chi_g);
        }
      }
    }
  }
}
