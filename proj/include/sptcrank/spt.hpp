#pragma once

#include <functional>
#include <vector>

#include "sptcrank/partition.hpp"

namespace sptcrank {

/// A vector partition (pi1, pi2, pi3) with pi1 nonempty with distinct parts and
/// s(pi1) <= min(s(pi2), s(pi3)), where an empty pi2 or pi3 has smallest part +inf.
class SPartition {
 public:
  /// Throws std::invalid_argument if the triple violates the conditions above.
  SPartition(Partition pi1, Partition pi2, Partition pi3);

  const Partition& pi1() const { return pi1_; }
  const Partition& pi2() const { return pi2_; }
  const Partition& pi3() const { return pi3_; }

  /// (-1)^{l(pi1) - 1}.
  int sign() const { return pi1_.length() % 2 == 1 ? 1 : -1; }
  int weight() const { return pi1_.weight() + pi2_.weight() + pi3_.weight(); }
  /// l(pi2) - l(pi3).
  int spt_crank() const { return static_cast<int>(pi2_.length()) - static_cast<int>(pi3_.length()); }

  std::string to_string() const;

  friend bool operator==(const SPartition&, const SPartition&) = default;

 private:
  Partition pi1_, pi2_, pi3_;
};

/// Visits every S-partition of weight n once. Order: smallest part s of pi1
/// ascending; then pi1 by weight ascending and lexicographically decreasing
/// within a weight; then pi2 the same way; pi3 is lexicographically decreasing.
/// pi2 and pi3 range over partitions with all parts >= s.
///
/// Full enumeration is practical up to about n = 26. Throws
/// std::invalid_argument for n < 1.
void for_each_s_partition(int n, const std::function<void(const SPartition&)>& visit);

std::vector<SPartition> enumerate_s_partitions(int n);

/// N_S(m,n) for all m at one n, from a single pass over the S-partitions.
class SptCrankCounts {
 public:
  static SptCrankCounts build(int n);

  int n() const { return n_; }
  /// N_S(m,n); zero outside |m| <= n.
  Count count(int m) const;
  /// N_S(k,t,n) = sum of N_S(m,n) over m = k (mod t). Requires 0 <= k < t.
  Count residue_count(int k, int t) const;
  /// sum_m N_S(m,n).
  Count total() const;

 private:
  int n_ = 0;
  std::vector<Count> counts_;  // index m + n
};

Count spt_crank_count(int m, int n);
Count spt_crank_residue_count(int k, int t, int n);

/// Total number of smallest parts over the partitions of n, by enumeration.
/// Throws std::invalid_argument for n < 1.
Count spt(int n);

}  // namespace sptcrank
