#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "tmreg/set_partition.hpp"

using namespace tmreg;

TEST_CASE("SetPartition canonicalizes its blocks", "[partition]") {
  SetPartition const p({{3, 2}, {4}, {1, 0}});
  REQUIRE(p.number_of_blocks() == 3);
  CHECK(p.blocks()
        == std::vector<std::vector<point_type>>{{0, 1}, {2, 3}, {4}});
  CHECK(p.block_of(0) == 0);
  CHECK(p.block_of(3) == 1);
  CHECK(p.block_of(4) == 2);
  CHECK(p.degree() == 5);
  CHECK(to_string(p) == "{{0,1},{2,3},{4}}");
  CHECK(p == SetPartition({{4}, {0, 1}, {2, 3}}));
}

TEST_CASE("SetPartition rejects invalid block lists", "[partition]") {
  using blocks = std::vector<std::vector<point_type>>;
  CHECK_THROWS_AS(SetPartition(blocks{}), InvalidArgument);
  CHECK_THROWS_AS(SetPartition(blocks{{0}, {}}), InvalidArgument);
  CHECK_THROWS_AS(SetPartition(blocks{{0, 1}, {1}}), InvalidArgument);
  CHECK_THROWS_AS(SetPartition(blocks{{0, 3}, {1}}), InvalidArgument);
}

TEST_CASE("discrete and single-block partitions", "[partition]") {
  auto const d = SetPartition::discrete(4);
  CHECK(d.number_of_blocks() == 4);
  auto const s = SetPartition::single_block(4);
  CHECK(s.number_of_blocks() == 1);
  CHECK(s.block_size(0) == 4);
}

TEST_CASE("all_set_partitions yields Bell(n) distinct partitions in RGS order",
          "[partition]") {
  std::vector<std::size_t> const bell = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (std::size_t n = 1; n <= 8; ++n) {
    auto const ps = all_set_partitions(n);
    REQUIRE(ps.size() == bell[n]);
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t k = 0; k < ps.size(); ++k) {
      auto const& rgs = ps[k].rgs();
      REQUIRE(rgs.size() == n);
      REQUIRE(rgs[0] == 0);
      std::size_t max_so_far = 0;
      for (std::size_t x = 1; x < n; ++x) {
        REQUIRE(rgs[x] <= max_so_far + 1);
        max_so_far = std::max(max_so_far, rgs[x]);
      }
      seen.insert(rgs);
      if (k > 0) {
        REQUIRE(ps[k - 1].rgs() < rgs);
      }
    }
    REQUIRE(seen.size() == bell[n]);
  }
  auto const three = all_set_partitions(3);
  CHECK(to_string(three.front()) == "{{0,1,2}}");
  CHECK(to_string(three[1]) == "{{0,1},{2}}");
  CHECK(to_string(three.back()) == "{{0},{1},{2}}");
}
