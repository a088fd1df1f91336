#include <map>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sptcrank/stats.hpp"

using namespace sptcrank;

namespace {

struct Brute {
  std::map<int, Count> rank, crank;
  std::vector<Count> q;  // q[m] for 0 <= m <= n
  std::vector<Count> at_least;
};

Brute brute(int n) {
  Brute b;
  b.q.assign(static_cast<std::size_t>(n) + 1, 0);
  b.at_least.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : oracle::partitions(n)) {
    // The empty partition is tabulated at statistic 0.
    ++b.rank[p.empty() ? 0 : oracle::rank(p)];
    ++b.crank[p.empty() ? 0 : oracle::crank(p)];
    for (int m = 0; m <= n; ++m) {
      if (oracle::rank_set_contains(p, m)) ++b.q[static_cast<std::size_t>(m)];
      if (p.empty() || oracle::rank(p) >= -m) ++b.at_least[static_cast<std::size_t>(m)];
    }
  }
  return b;
}

Moment power(int base, int k) {
  Moment r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

TEST_CASE("rank and crank of small partitions") {
  CHECK(rank(Partition{5, 5, 4, 3, 1}) == 0);
  CHECK(rank(Partition{4}) == 3);
  CHECK(crank(Partition{4}) == 4);
  CHECK(crank(Partition{2, 1, 1}) == -2);
  CHECK(crank(Partition{3, 1}) == 0);
  CHECK(crank(Partition{1}) == -1);
  CHECK_THROWS_AS(rank(Partition()), std::domain_error);
  CHECK_THROWS_AS(crank(Partition()), std::domain_error);
}

TEST_CASE("rank and crank agree with the definitions") {
  for (int n = 1; n <= 16; ++n) {
    for (const auto& p : oracle::partitions(n)) {
      const Partition lambda(p);
      CHECK(rank(lambda) == oracle::rank(p));
      CHECK(crank(lambda) == oracle::crank(p));
    }
  }
}

TEST_CASE("rank-set of (5,5,4,3,1)") {
  const Partition p{5, 5, 4, 3, 1};
  for (int m : {-5, -4, -2, 0, 3, 5, 6, 7, 8, 40}) CHECK(rank_set_contains(p, m));
  for (int m : {-6, -3, -1, 1, 2, 4}) CHECK_FALSE(rank_set_contains(p, m));
}

TEST_CASE("q(1,4) = 3 from (4), (2,1,1), (1,1,1,1)") {
  CHECK(rank_set_count(1, 4) == 3);
  std::vector<Partition> members;
  for (const Partition& p : enumerate_partitions(4)) {
    if (rank_set_contains(p, 1)) members.push_back(p);
  }
  CHECK(members == std::vector<Partition>{Partition{4}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
}

TEST_CASE("tables agree with brute force") {
  for (int n = 0; n <= 16; ++n) {
    const Brute b = brute(n);
    const RankCrankTable raw = RankCrankTable::build(n, CrankConvention::kRaw);
    const auto q = rank_set_counts(n);
    for (int m = -n - 1; m <= n + 1; ++m) {
      CHECK(raw.rank_count(m) == (b.rank.count(m) ? b.rank.at(m) : 0));
      CHECK(raw.crank_count(m) == (b.crank.count(m) ? b.crank.at(m) : 0));
    }
    for (int m = 0; m <= n; ++m) {
      CHECK(q[static_cast<std::size_t>(m)] == b.q[static_cast<std::size_t>(m)]);
      CHECK(rank_set_count(m, n) == b.q[static_cast<std::size_t>(m)]);
      CHECK(rank_at_least_count(m, n) == b.at_least[static_cast<std::size_t>(m)]);
      CHECK(raw.rank_at_least(m) == b.at_least[static_cast<std::size_t>(m)]);
    }
  }
}

TEST_CASE("empty partition and the n = 1 crank convention") {
  const RankCrankTable zero = RankCrankTable::build(0);
  CHECK(zero.rank_count(0) == 1);
  CHECK(zero.crank_count(0) == 1);
  CHECK(rank_set_count(0, 0) == 1);
  CHECK(rank_at_least_count(3, 0) == 1);

  const RankCrankTable adjusted = RankCrankTable::build(1);
  CHECK(adjusted.crank_count(0) == -1);
  CHECK(adjusted.crank_count(-1) == 1);
  CHECK(adjusted.crank_count(1) == 1);
  CHECK(adjusted.crank_total() == 1);
  CHECK(adjusted.crank_within(0) == -1);
  // crank_at_most stays on raw cranks: crank((1)) = -1.
  CHECK(adjusted.crank_at_most(-1) == 1);

  const RankCrankTable raw = RankCrankTable::build(1, CrankConvention::kRaw);
  CHECK(raw.crank_count(-1) == 1);
  CHECK(raw.crank_count(0) == 0);
  CHECK(raw.crank_count(1) == 0);
}

TEST_CASE("window sums") {
  const RankCrankTable t = RankCrankTable::build(4);
  // ranks of partitions of 4: 3, 1, 0, -1, -3
  CHECK(t.rank_within(0) == 1);
  CHECK(t.rank_within(1) == 3);
  CHECK(t.rank_within(3) == 5);
  CHECK(rank_within_count(1, 4) == 3);
  // cranks: 4, 0, 2, -2, -4
  CHECK(t.crank_within(0) == 1);
  CHECK(t.crank_within(2) == 3);
  CHECK(crank_within_count(4, 4) == 5);
}

TEST_CASE("moments agree with direct sums") {
  for (int n = 2; n <= 16; ++n) {
    const auto parts = oracle::partitions(n);
    for (int k = 1; k <= 8; ++k) {
      Moment nk = 0, mk = 0, nbar = 0, mbar = 0;
      for (const auto& p : parts) {
        const int r = oracle::rank(p), c = oracle::crank(p);
        nk += power(r, k);
        mk += power(c, k);
        if (r > 0) nbar += power(r, k);
        if (c > 0) mbar += power(c, k);
      }
      CHECK(rank_moment(k, n) == nk);
      CHECK(crank_moment(k, n) == mk);
      CHECK(positive_rank_moment(k, n) == nbar);
      CHECK(positive_crank_moment(k, n) == mbar);
    }
  }
  CHECK(positive_crank_moment(1, 1) == 1);
  CHECK(positive_rank_moment(1, 1) == 0);
}

TEST_CASE("window formulas for the positive moments") {
  for (int n = 1; n <= 30; ++n) {
    const RankCrankTable t = RankCrankTable::build(n);
    for (int k = 1; k <= 6; ++k) {
      CHECK(positive_rank_moment_by_windows(k, t) == positive_rank_moment(k, t));
      CHECK(positive_crank_moment_by_windows(k, t) == positive_crank_moment(k, t));
      CHECK(positive_moment_difference_by_windows(k, t) ==
            positive_crank_moment(k, t) - positive_rank_moment(k, t));
    }
  }
}

TEST_CASE("moments past 64 bits") {
  const Moment m12 = crank_moment(12, 40);
  CHECK(m12 > Moment(INT64_MAX));
  CHECK(to_string(m12).size() > 19);
  CHECK(to_string(Moment(-42)) == "-42");
  CHECK(to_string(Moment(0)) == "0");
  CHECK_THROWS_AS(checked_power(Moment(10), 40), std::overflow_error);
}
