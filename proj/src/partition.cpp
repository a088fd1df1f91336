#include "sptcrank/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sptcrank {

int ExtendedPart::value() const {
  if (infinite_) throw std::domain_error("smallest part of the empty partition is infinite");
  return value_;
}

std::ostream& operator<<(std::ostream& os, ExtendedPart p) {
  if (p.is_infinite()) return os << "inf";
  return os << p.value();
}

namespace {

void check_weakly_decreasing(const std::vector<int>& parts, int floor) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < floor) {
      std::ostringstream msg;
      msg << "partition part " << parts[i] << " at position " << i + 1 << " is below " << floor;
      throw std::invalid_argument(msg.str());
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      std::ostringstream msg;
      msg << "partition parts must be weakly decreasing (position " << i + 1 << ")";
      throw std::invalid_argument(msg.str());
    }
  }
}

// r can be written as a sum of parts in [lo, hi] iff some k >= 1 has
// k*lo <= r <= k*hi.
bool representable(int r, int lo, int hi) {
  if (r == 0) return true;
  if (r < lo || hi < lo) return false;
  return (r + hi - 1) / hi <= r / lo;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_weakly_decreasing(parts_, 1);
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_trailing_zeros(std::vector<int> parts) {
  check_weakly_decreasing(parts, 0);
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
  return os << ')';
}

ExtendedPart smallest_part(const Partition& p) {
  if (p.empty()) return ExtendedPart::infinity();
  return p.parts().back();
}

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int r = 0; r < part; ++r) ++out[static_cast<std::size_t>(r)];
  }
  return Partition(std::move(out));
}

Count count_partitions(int n) {
  if (n < 0) throw std::invalid_argument("count_partitions: n must be non-negative");
  std::vector<Count> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int i = 1; i <= n; ++i) {
    // Partial sums of the alternating series can exceed p(i); only the total must fit.
    __int128 acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > i) break;
      const int g2 = k * (3 * k + 1) / 2;
      __int128 term = p[static_cast<std::size_t>(i - g1)];
      if (g2 <= i) term += p[static_cast<std::size_t>(i - g2)];
      acc += (k % 2 == 1) ? term : -term;
    }
    if (acc > std::numeric_limits<Count>::max()) {
      throw std::overflow_error("count_partitions: p(n) overflows 64-bit count");
    }
    p[static_cast<std::size_t>(i)] = static_cast<Count>(acc);
  }
  return p[static_cast<std::size_t>(n)];
}

PartitionStream::PartitionStream(int n, int min_part, int max_part)
    : n_(n), min_part_(min_part), max_part_(max_part < 0 ? n : max_part) {
  if (n < 0) throw std::invalid_argument("PartitionStream: n must be non-negative");
  if (min_part < 1) throw std::invalid_argument("PartitionStream: min_part must be positive");
}

// Appends the lexicographically largest partition of `remaining` into parts
// in [min_part_, bound]. Callers guarantee representability.
bool PartitionStream::fill(int remaining, int bound) {
  while (remaining > 0) {
    int p = std::min(bound, remaining);
    while (p >= min_part_ && !representable(remaining - p, min_part_, p)) --p;
    if (p < min_part_) return false;
    parts_.push_back(p);
    remaining -= p;
    bound = p;
  }
  return true;
}

bool PartitionStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!representable(n_, min_part_, max_part_) || !fill(n_, max_part_)) {
      done_ = true;
      return false;
    }
    return true;
  }
  // Rightmost part that can be lowered, to the largest value that still lets
  // the tail be refilled greedily.
  int tail = 0;
  for (std::size_t i = parts_.size(); i-- > 0;) {
    tail += parts_[i];
    for (int v = parts_[i] - 1; v >= min_part_; --v) {
      if (representable(tail - v, min_part_, v)) {
        parts_.resize(i);
        parts_.push_back(v);
        fill(tail - v, v);
        return true;
      }
    }
  }
  done_ = true;
  parts_.clear();
  return false;
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit,
                        int min_part) {
  PartitionStream stream(n, min_part);
  while (stream.next()) visit(stream.current());
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

}  // namespace sptcrank
