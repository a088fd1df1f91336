#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sptcrank {

/// Exact counts (p(n), N(m,n), spt(n), ...). Wide enough for p(100).
using Count = std::int64_t;

/// Value of a part size that may be the +infinity sentinel, used for the
/// smallest part of the empty partition. Ordering is total: infinity
/// compares greater than every finite value and equal to itself.
class ExtendedPart {
 public:
  constexpr ExtendedPart(int value) : value_(value), infinite_(false) {}  // NOLINT

  static constexpr ExtendedPart infinity() { return ExtendedPart(); }

  constexpr bool is_infinite() const { return infinite_; }

  /// Throws std::domain_error for the infinite sentinel.
  int value() const;

  friend constexpr std::strong_ordering operator<=>(ExtendedPart a, ExtendedPart b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(ExtendedPart a, ExtendedPart b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  constexpr ExtendedPart() : value_(0), infinite_(true) {}

  int value_;
  bool infinite_;
};

std::ostream& operator<<(std::ostream& os, ExtendedPart p);

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Sorts into decreasing order first; still rejects non-positive parts.
  static Partition from_unsorted(std::vector<int> parts);

  /// Accepts a weakly decreasing, non-negative sequence and drops the trailing
  /// zeros. Used by the symbol constructions, which produce `x - 1` entries.
  static Partition from_trailing_zeros(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return weight_; }

  /// Largest part, 0 for the empty partition.
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// 1-based access with the convention that parts beyond the length are 0.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// s(lambda): the last part, or infinity for the empty partition.
ExtendedPart smallest_part(const Partition& p);

/// lambda'_r = #{i : lambda_i >= r}.
Partition conjugate(const Partition& p);

/// p(n) by the Euler pentagonal recurrence. Throws std::overflow_error when
/// the result does not fit in Count, std::invalid_argument for n < 0.
Count count_partitions(int n);

/// Partitions of `n` with all parts in [min_part, max_part], produced in
/// lexicographically decreasing order. n = 0 yields the empty partition once.
///
/// Single consumer; `current()` is valid until the next call to `next()`.
class PartitionStream {
 public:
  explicit PartitionStream(int n, int min_part = 1, int max_part = -1);

  /// Advances to the next partition; returns false when exhausted.
  /// The first call positions on the first partition.
  bool next();

  std::span<const int> current() const { return parts_; }

 private:
  bool fill(int remaining, int bound);

  int n_;
  int min_part_;
  int max_part_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> parts_;
};

/// Visits each partition of n (parts >= min_part) in lexicographically
/// decreasing order without materializing Partition objects.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit,
                        int min_part = 1);

/// Practical ceiling is about n = 80; p(80) = 15796476 partitions.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace sptcrank
