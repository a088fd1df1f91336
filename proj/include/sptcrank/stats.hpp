#pragma once

#include <vector>

#include "sptcrank/partition.hpp"

namespace sptcrank {

/// Moments reach ~40^12 * p(40) at desk scale, beyond 64 bits.
using Moment = __int128;

std::string to_string(Moment value);

/// Rank: largest part minus number of parts. Throws std::domain_error for the empty partition.
int rank(const Partition& p);
int rank(std::span<const int> parts);

/// Crank. With o the number of 1s: the largest part when o = 0,
/// otherwise #{parts > o} - o. Throws std::domain_error for the empty partition.
int crank(const Partition& p);
int crank(std::span<const int> parts);

/// Whether m occurs in the rank-set [j - lambda_{j+1} : j >= 0], parts beyond
/// the length read as 0. Every m >= length(lambda) is a member.
bool rank_set_contains(const Partition& p, int m);
bool rank_set_contains(std::span<const int> parts, int m);

/// How M(m,1) is tabulated. The per-partition crank is never altered.
enum class CrankConvention {
  kRaw,         ///< M(-1,1) = 1 from crank((1)) = -1.
  kAdjustedN1,  ///< M(0,1) = -1, M(-1,1) = M(1,1) = 1, as in the spt-crank bridge identity.
};

/// N(m,n) and M(m,n) for one n, built in a single enumeration pass.
/// For n = 0 the empty partition is tabulated at N(0,0) = M(0,0) = 1.
class RankCrankTable {
 public:
  static RankCrankTable build(int n, CrankConvention convention = CrankConvention::kAdjustedN1);

  int n() const { return n_; }
  CrankConvention convention() const { return convention_; }

  /// N(m,n); zero outside |m| <= n.
  Count rank_count(int m) const;
  /// M(m,n) under the table's convention; zero outside |m| <= n.
  Count crank_count(int m) const;

  /// N_{<=m}(n) = sum_{|r|<=m} N(r,n). Requires m >= 0.
  Count rank_within(int m) const;
  /// M_{<=m}(n) = sum_{|r|<=m} M(r,n). Requires m >= 0.
  Count crank_within(int m) const;

  /// #{lambda |- n : rank >= -m}.
  Count rank_at_least(int m) const;
  /// #{lambda |- n : crank <= m}, raw cranks.
  Count crank_at_most(int m) const;

  Count rank_total() const;
  Count crank_total() const;

 private:
  int n_ = 0;
  CrankConvention convention_ = CrankConvention::kAdjustedN1;
  std::vector<Count> rank_;   // index m + n
  std::vector<Count> crank_;  // index m + n, convention applied
  std::vector<Count> raw_crank_;
};

/// q(m,n) for every m in [0, n] in one pass. q(m,0) = 1 (the empty partition).
std::vector<Count> rank_set_counts(int n);

/// q(m,n): partitions of n whose rank-set contains m (m >= 0).
Count rank_set_count(int m, int n);

/// p(-m,n): partitions of n with rank >= -m (m >= 0); 1 for n = 0.
Count rank_at_least_count(int m, int n);

/// N_{<=m}(n).
Count rank_within_count(int m, int n);

/// M_{<=m}(n) with the adjusted n = 1 values.
Count crank_within_count(int m, int n);

/// sum_m m^k N(m,n), k >= 1, n >= 1.
Moment rank_moment(int k, int n);
/// sum_m m^k M(m,n); the adjusted values are used at n = 1.
Moment crank_moment(int k, int n);
/// sum_{m>=1} m^k N(m,n).
Moment positive_rank_moment(int k, int n);
/// sum_{m>=1} m^k M(m,n); adjusted values at n = 1.
Moment positive_crank_moment(int k, int n);

Moment rank_moment(int k, const RankCrankTable& table);
Moment crank_moment(int k, const RankCrankTable& table);
Moment positive_rank_moment(int k, const RankCrankTable& table);
Moment positive_crank_moment(int k, const RankCrankTable& table);

/// Positive moments rewritten through the symmetric window counts:
///   1/2 * sum_{m=1}^{n} (m^k - (m-1)^k) (p(n) - X_{<=m-1}(n)),
/// X = N for ranks, M for cranks. Terms with m > n vanish.
Moment positive_rank_moment_by_windows(int k, const RankCrankTable& table);
Moment positive_crank_moment_by_windows(int k, const RankCrankTable& table);

/// Difference of positive crank and rank moments through the windows:
///   1/2 * sum_{m=1}^{n-1} (m^k - (m-1)^k)(N_{<=m-1} - M_{<=m-1}) + n^k - (n-1)^k.
Moment positive_moment_difference_by_windows(int k, const RankCrankTable& table);

/// base^exp with overflow detection (std::overflow_error).
Moment checked_power(Moment base, int exp);

}  // namespace sptcrank
