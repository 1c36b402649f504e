#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fakedeg/shapes.hpp"

using namespace fakedeg;

TEST_CASE("partition validation") {
  CHECK(Partition{3, 1, 0, 0}.parts() == std::vector<int>{3, 1});
  CHECK(Partition{3, 1}.size() == 4);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0, 1}), std::invalid_argument);
  CHECK(Partition{}.empty());
}

TEST_CASE("cells, corners, conjugate, hooks") {
  const Partition p{3, 1};
  CHECK(p.conjugate() == Partition{2, 1, 1});
  CHECK(p.cells().size() == 4);
  CHECK(p.corners() == std::vector<Cell>{{1, 3}, {2, 1}});
  CHECK(hooks(Partition{2, 1}) == std::vector<int>{3, 1, 1});
  CHECK(p.contains({2, 1}));
  CHECK_FALSE(p.contains({2, 2}));
  CHECK(Cell{1, 3}.content() == 2);
}

TEST_CASE("b statistics") {
  CHECK(b_statistic(Partition{2, 2, 1}) == 4);
  CHECK(b_statistic(Partition{5}) == 0);
  CHECK(b_multi(Multipartition{{1, 1}, {1}}) == 1);
  CHECK(b_multi(Multipartition{{1}, {1}, {2}}) == 5);
}

TEST_CASE("Lusztig map values") {
  CHECK(lusztig_rho1({{1, 1}, {1}}) == Partition{2, 2, 2});
  CHECK(lusztig_rho1({{1}, {1, 1}}) == Partition{2, 2, 1, 1});
  CHECK(lusztig_rho1({{2}, {2}}) == Partition{4, 4});
  CHECK(lusztig_rho2({{1, 1}, {1}}) == Partition{3, 2, 2});
  CHECK(lusztig_rho1({{}, {}}) == Partition{});
  CHECK(lusztig_rho2({{}, {}}) == Partition{1});
  CHECK(lusztig_rho1({{1}, {}}) == Partition{2});
  CHECK(lusztig_rho1({{}, {1}}) == Partition{1, 1});
  CHECK(lusztig_rho2({{1}, {}}) == Partition{3});
  CHECK_THROWS_AS(lusztig_rho1(Multipartition{{1}}), std::invalid_argument);
}

TEST_CASE("Lusztig images have the right size and admit domino tableaux") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& pair : multipartitions_of(n, 2)) {
      const Partition a = lusztig_rho1(pair);
      const Partition b = lusztig_rho2(pair);
      CHECK(a.size() == 2 * n);
      CHECK(b.size() == 2 * n + 1);
      CHECK(supports_domino(a));
      CHECK(supports_domino(b));
    }
}

TEST_CASE("Lusztig maps are injective") {
  for (int n = 0; n <= 6; ++n) {
    std::set<Partition> even, odd;
    const auto pairs = multipartitions_of(n, 2);
    for (const auto& pair : pairs) {
      even.insert(lusztig_rho1(pair));
      odd.insert(lusztig_rho2(pair));
    }
    CHECK(even.size() == pairs.size());
    CHECK(odd.size() == pairs.size());
  }
}

TEST_CASE("domino support agrees with the 2-core") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& alpha : partitions_of(n)) {
      const Partition core = two_core(alpha);
      const bool trivial_core = core.size() == n % 2;
      CHECK(supports_domino(alpha) == trivial_core);
    }
  CHECK(two_core(Partition{2, 1}) == Partition{2, 1});
  CHECK(two_core(Partition{3, 1}) == Partition{});
}

TEST_CASE("partition enumeration") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("multipartition enumeration") {
  const auto pairs = multipartitions_of(2, 2);
  CHECK(pairs.size() == 5);
  CHECK(pairs.front() == Multipartition{{2}, {}});
  CHECK(pairs.back() == Multipartition{{}, {1, 1}});
  // number of d-multipartitions of n: 2 -> 1,2,5,10,20,36 ; 3 -> 1,3,9,22,51
  const std::vector<std::size_t> two{1, 2, 5, 10, 20, 36};
  const std::vector<std::size_t> three{1, 3, 9, 22, 51};
  for (int n = 0; n < 6; ++n) CHECK(multipartitions_of(n, 2).size() == two[static_cast<std::size_t>(n)]);
  for (int n = 0; n < 5; ++n) CHECK(multipartitions_of(n, 3).size() == three[static_cast<std::size_t>(n)]);
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_partition("2,2,1") == Partition{2, 2, 1});
  CHECK(parse_partition(" 3 , 1 ") == Partition{3, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
  CHECK(parse_pair("1,1|1") == Multipartition{{1, 1}, {1}});
  CHECK(parse_pair("|") == Multipartition{{}, {}});
  CHECK_THROWS_AS(parse_pair("1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pair("1|1|1"), std::invalid_argument);
  CHECK(parse_multipartition("1|1|1").d() == 3);
  CHECK(format_partition(Partition{2, 2, 1}) == "2,2,1");
  CHECK(format_partition_paren(Partition{}) == "()");
  CHECK(format_multipartition(Multipartition{{2, 1}, {}}) == "2,1|");
  for (const auto& m : multipartitions_of(4, 3)) CHECK(parse_multipartition(format_multipartition(m)) == m);
}
