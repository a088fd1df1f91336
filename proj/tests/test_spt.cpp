#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sptcrank/spt.hpp"

using namespace sptcrank;

namespace {

std::set<std::string> as_strings(const std::vector<SPartition>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(s.to_string());
  return out;
}

}  // namespace

TEST_CASE("S-partitions of 1 and 2") {
  const auto one = enumerate_s_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == SPartition(Partition{1}, Partition{}, Partition{}));

  const auto two = enumerate_s_partitions(2);
  CHECK(two.size() == 3);
  CHECK(as_strings(two) == as_strings({SPartition(Partition{2}, {}, {}), SPartition(Partition{1}, Partition{1}, {}),
                                       SPartition(Partition{1}, {}, Partition{1})}));
}

TEST_CASE("S-partition validation") {
  CHECK_THROWS_AS(SPartition(Partition{}, Partition{}, Partition{}), std::invalid_argument);
  CHECK_THROWS_AS(SPartition(Partition{2, 2}, Partition{}, Partition{}), std::invalid_argument);
  CHECK_THROWS_AS(SPartition(Partition{3, 2}, Partition{1}, Partition{}), std::invalid_argument);
  CHECK_THROWS_AS(SPartition(Partition{3, 2}, Partition{}, Partition{4, 1}), std::invalid_argument);
  CHECK_NOTHROW(SPartition(Partition{3, 2}, Partition{2, 2}, Partition{5}));
  CHECK_THROWS_AS(enumerate_s_partitions(0), std::invalid_argument);
  CHECK_THROWS_AS(spt(0), std::invalid_argument);
}

TEST_CASE("sign and spt-crank") {
  const SPartition a(Partition{5, 3, 2}, Partition{4, 2}, Partition{2});
  CHECK(a.sign() == 1);
  CHECK(a.spt_crank() == 1);
  CHECK(a.weight() == 18);
  const SPartition b(Partition{4, 1}, Partition{}, Partition{1, 1, 1});
  CHECK(b.sign() == -1);
  CHECK(b.spt_crank() == -3);
}

TEST_CASE("small spt values") {
  CHECK(spt(1) == 1);
  CHECK(spt(3) == 5);
  CHECK(spt(4) == 10);
  CHECK(spt(5) == 14);
}

TEST_CASE("spt against the generating-function oracle") {
  for (int n = 1; n <= 60; ++n) {
    INFO("n=" << n);
    CHECK(spt(n) == oracle::spt(n));
  }
}

TEST_CASE("spt-crank counts against the oracle") {
  for (int n = 1; n <= 26; ++n) {
    INFO("n=" << n);
    const auto expected = oracle::spt_crank_counts(n);
    const SptCrankCounts counts = SptCrankCounts::build(n);
    for (int m = -n - 2; m <= n + 2; ++m) {
      const auto it = expected.find(m);
      CHECK(counts.count(m) == (it == expected.end() ? 0 : it->second));
      CHECK(counts.count(m) == counts.count(-m));
    }
    CHECK(counts.total() == oracle::spt(n));
    if (n <= 12) CHECK(spt_crank_count(1, n) == counts.count(1));
  }
}

TEST_CASE("signed enumeration agrees with the counts") {
  for (int n = 1; n <= 14; ++n) {
    std::map<int, Count> tally;
    for_each_s_partition(n, [&](const SPartition& s) {
      CHECK(s.weight() == n);
      tally[s.spt_crank()] += s.sign();
    });
    const SptCrankCounts counts = SptCrankCounts::build(n);
    for (const auto& [m, c] : tally) CHECK(counts.count(m) == c);
  }
}

TEST_CASE("equal residue classes for the 5 and 7 congruences") {
  const Count s9 = spt(9);
  CHECK(s9 == 80);
  for (int k = 0; k < 5; ++k) CHECK(spt_crank_residue_count(k, 5, 9) == s9 / 5);
  const Count s12 = spt(12);
  CHECK(s12 % 7 == 0);
  for (int k = 0; k < 7; ++k) CHECK(spt_crank_residue_count(k, 7, 12) == s12 / 7);
  CHECK_THROWS_AS(spt_crank_residue_count(5, 5, 9), std::invalid_argument);
}
