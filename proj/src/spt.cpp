#include "sptcrank/spt.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sptcrank {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1");
}

// Distinct-part partitions with smallest part exactly s and weight <= cap,
// ordered by weight, then lexicographically decreasing.
std::vector<Partition> distinct_with_smallest(int s, int cap) {
  std::vector<std::vector<int>> found;
  std::vector<int> above;  // parts > s, increasing while building
  std::function<void(int, int)> extend = [&](int next, int room) {
    std::vector<int> parts(above.rbegin(), above.rend());
    parts.push_back(s);
    found.push_back(std::move(parts));
    for (int v = next; v <= room; ++v) {
      above.push_back(v);
      extend(v + 1, room - v);
      above.pop_back();
    }
  };
  if (s <= cap) extend(s + 1, cap - s);
  std::vector<Partition> out;
  out.reserve(found.size());
  for (auto& parts : found) out.emplace_back(std::move(parts));
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b < a;
  });
  return out;
}

// Partitions of each weight 0..cap with parts >= s, lexicographically decreasing.
std::vector<std::vector<Partition>> partitions_at_least(int s, int cap) {
  std::vector<std::vector<Partition>> out(static_cast<std::size_t>(cap) + 1);
  for (int w = 0; w <= cap; ++w) {
    PartitionStream stream(w, s);
    while (stream.next()) {
      const auto parts = stream.current();
      out[static_cast<std::size_t>(w)].emplace_back(std::vector<int>(parts.begin(), parts.end()));
    }
  }
  return out;
}

}  // namespace

SPartition::SPartition(Partition pi1, Partition pi2, Partition pi3)
    : pi1_(std::move(pi1)), pi2_(std::move(pi2)), pi3_(std::move(pi3)) {
  if (pi1_.empty()) throw std::invalid_argument("S-partition: pi1 must be nonempty");
  const auto parts = pi1_.parts();
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) {
    throw std::invalid_argument("S-partition: pi1 must have distinct parts");
  }
  const ExtendedPart s = smallest_part(pi1_);
  if (s > smallest_part(pi2_) || s > smallest_part(pi3_)) {
    throw std::invalid_argument("S-partition: s(pi1) exceeds the smallest part of pi2 or pi3");
  }
}

std::string SPartition::to_string() const {
  std::ostringstream os;
  os << '(' << pi1_ << ", " << pi2_ << ", " << pi3_ << ')';
  return os.str();
}

void for_each_s_partition(int n, const std::function<void(const SPartition&)>& visit) {
  require_positive(n, "for_each_s_partition");
  for (int s = 1; s <= n; ++s) {
    const auto firsts = distinct_with_smallest(s, n);
    const auto rest = partitions_at_least(s, n - s);
    for (const Partition& pi1 : firsts) {
      const int r = n - pi1.weight();
      for (int w2 = 0; w2 <= r; ++w2) {
        for (const Partition& pi2 : rest[static_cast<std::size_t>(w2)]) {
          for (const Partition& pi3 : rest[static_cast<std::size_t>(r - w2)]) {
            visit(SPartition(pi1, pi2, pi3));
          }
        }
      }
    }
  }
}

std::vector<SPartition> enumerate_s_partitions(int n) {
  std::vector<SPartition> out;
  for_each_s_partition(n, [&](const SPartition& x) { out.push_back(x); });
  return out;
}

SptCrankCounts SptCrankCounts::build(int n) {
  require_positive(n, "SptCrankCounts::build");
  SptCrankCounts table;
  table.n_ = n;
  table.counts_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
  // Same traversal as for_each_s_partition, but only the lengths of pi2 and
  // pi3 matter, so each weight keeps the list of its partition lengths.
  for (int s = 1; s <= n; ++s) {
    const auto firsts = distinct_with_smallest(s, n);
    std::vector<std::vector<int>> lengths(static_cast<std::size_t>(n - s) + 1);
    for (int w = 0; w <= n - s; ++w) {
      PartitionStream stream(w, s);
      while (stream.next()) {
        lengths[static_cast<std::size_t>(w)].push_back(static_cast<int>(stream.current().size()));
      }
    }
    for (const Partition& pi1 : firsts) {
      const Count sign = pi1.length() % 2 == 1 ? 1 : -1;
      const int r = n - pi1.weight();
      for (int w2 = 0; w2 <= r; ++w2) {
        for (int l2 : lengths[static_cast<std::size_t>(w2)]) {
          for (int l3 : lengths[static_cast<std::size_t>(r - w2)]) {
            table.counts_[static_cast<std::size_t>(l2 - l3 + n)] += sign;
          }
        }
      }
    }
  }
  return table;
}

Count SptCrankCounts::count(int m) const {
  if (m < -n_ || m > n_) return 0;
  return counts_[static_cast<std::size_t>(m + n_)];
}

Count SptCrankCounts::residue_count(int k, int t) const {
  if (t < 1 || k < 0 || k >= t) {
    throw std::invalid_argument("residue_count: requires 0 <= k < t");
  }
  Count sum = 0;
  for (int m = -n_; m <= n_; ++m) {
    if (((m % t) + t) % t == k) sum += count(m);
  }
  return sum;
}

Count SptCrankCounts::total() const {
  Count sum = 0;
  for (Count c : counts_) sum += c;
  return sum;
}

Count spt_crank_count(int m, int n) { return SptCrankCounts::build(n).count(m); }

Count spt_crank_residue_count(int k, int t, int n) {
  return SptCrankCounts::build(n).residue_count(k, t);
}

Count spt(int n) {
  require_positive(n, "spt");
  Count total = 0;
  for_each_partition(n, [&](std::span<const int> parts) {
    const int smallest = parts.back();
    total += std::count(parts.begin(), parts.end(), smallest);
  });
  return total;
}

}  // namespace sptcrank
