#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sptcrank/partition.hpp"

using namespace sptcrank;

namespace {

std::vector<oracle::Parts> stream_all(int n, int lo, int hi) {
  std::vector<oracle::Parts> out;
  PartitionStream s(n, lo, hi);
  while (s.next()) out.emplace_back(s.current().begin(), s.current().end());
  return out;
}

}  // namespace

TEST_CASE("partition construction validates order and positivity") {
  CHECK_NOTHROW(Partition({5, 5, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK_THROWS_AS(Partition::from_unsorted({2, 0}), std::invalid_argument);
  CHECK(Partition::from_trailing_zeros({4, 2, 0, 0}) == Partition({4, 2}));
  CHECK(Partition::from_trailing_zeros({0, 0}).empty());
  CHECK_THROWS_AS(Partition::from_trailing_zeros({0, 1}), std::invalid_argument);
}

TEST_CASE("accessors use zero beyond the length") {
  const Partition p{5, 5, 4, 3, 1};
  CHECK(p.length() == 5);
  CHECK(p.weight() == 18);
  CHECK(p.largest() == 5);
  CHECK(p.part(1) == 5);
  CHECK(p.part(5) == 1);
  CHECK(p.part(6) == 0);
  CHECK(p.part(0) == 0);
  CHECK(p.multiplicity(5) == 2);
  CHECK(p.to_string() == "(5,5,4,3,1)");
  CHECK(Partition().to_string() == "()");
  CHECK(Partition().largest() == 0);
}

TEST_CASE("smallest part of the empty partition is infinite") {
  CHECK(smallest_part(Partition{4, 2}) == ExtendedPart(2));
  const ExtendedPart inf = smallest_part(Partition());
  CHECK(inf.is_infinite());
  CHECK(inf > ExtendedPart(1000000));
  CHECK(inf == ExtendedPart::infinity());
  CHECK_THROWS_AS(inf.value(), std::domain_error);
  std::ostringstream os;
  os << inf;
  CHECK(os.str() == "inf");
}

TEST_CASE("conjugate is an involution and matches the column counts") {
  CHECK(conjugate(Partition{5, 5, 1}) == Partition({3, 2, 2, 2, 2}));
  for (int n = 0; n <= 14; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      CHECK(conjugate(conjugate(p)) == p);
      CHECK(conjugate(p).weight() == n);
    }
  }
}

TEST_CASE("p(n) agrees with the coin-change recurrence") {
  const auto p = oracle::partition_numbers(120);
  for (int n = 0; n <= 120; ++n) CHECK(count_partitions(n) == p[static_cast<std::size_t>(n)]);
  CHECK(count_partitions(50) == 204226);
  CHECK(count_partitions(100) == 190569292);
  CHECK_THROWS_AS(count_partitions(-1), std::invalid_argument);
  CHECK_THROWS_AS(count_partitions(500), std::overflow_error);
  CHECK(count_partitions(405) == 9147679068859117602LL);
  CHECK_THROWS_AS(count_partitions(406), std::overflow_error);
}

TEST_CASE("partition stream matches the recursive enumeration") {
  for (int n = 0; n <= 18; ++n) {
    CHECK(stream_all(n, 1, n) == oracle::partitions(n));
  }
}

TEST_CASE("partition stream with a minimum part skips nothing") {
  // (4) with parts >= 2 must be followed by (2,2): lowering 4 to 3 leaves 1.
  CHECK(stream_all(4, 2, 4) == std::vector<oracle::Parts>{{4}, {2, 2}});
  for (int lo = 1; lo <= 6; ++lo) {
    for (int hi = lo; hi <= 9; ++hi) {
      for (int n = 0; n <= 20; ++n) {
        INFO("n=" << n << " lo=" << lo << " hi=" << hi);
        CHECK(stream_all(n, lo, hi) == oracle::partitions(n, lo, hi));
      }
    }
  }
}

TEST_CASE("enumeration of n = 0 yields the empty partition once") {
  const auto all = enumerate_partitions(0);
  REQUIRE(all.size() == 1);
  CHECK(all[0].empty());
  CHECK(stream_all(3, 2, 2).empty());
  CHECK_THROWS_AS(PartitionStream(-1), std::invalid_argument);
  CHECK_THROWS_AS(PartitionStream(3, 0), std::invalid_argument);
}

TEST_CASE("for_each_partition honours min_part") {
  int count = 0;
  for_each_partition(12, [&](std::span<const int> parts) {
    CHECK(parts.back() >= 3);
    ++count;
  }, 3);
  CHECK(count == static_cast<int>(oracle::partitions(12, 3).size()));
}
