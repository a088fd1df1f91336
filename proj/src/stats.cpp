#include "sptcrank/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sptcrank {

std::string to_string(Moment value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Negate through unsigned to stay defined at the minimum value.
  unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value)
                                         : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

int rank(std::span<const int> parts) {
  if (parts.empty()) throw std::domain_error("rank of the empty partition is undefined");
  return parts.front() - static_cast<int>(parts.size());
}

int rank(const Partition& p) { return rank(p.parts()); }

int crank(std::span<const int> parts) {
  if (parts.empty()) throw std::domain_error("crank of the empty partition is undefined");
  // Parts are decreasing, so the ones form a suffix.
  const auto first_one = std::find(parts.begin(), parts.end(), 1);
  const int ones = static_cast<int>(parts.end() - first_one);
  if (ones == 0) return parts.front();
  const auto larger = std::count_if(parts.begin(), first_one, [ones](int x) { return x > ones; });
  return static_cast<int>(larger) - ones;
}

int crank(const Partition& p) { return crank(p.parts()); }

bool rank_set_contains(std::span<const int> parts, int m) {
  const int len = static_cast<int>(parts.size());
  if (m >= len) return true;
  // j - lambda_{j+1} is strictly increasing in j.
  for (int j = 0; j < len; ++j) {
    const int value = j - parts[static_cast<std::size_t>(j)];
    if (value == m) return true;
    if (value > m) return false;
  }
  return false;
}

bool rank_set_contains(const Partition& p, int m) { return rank_set_contains(p.parts(), m); }

RankCrankTable RankCrankTable::build(int n, CrankConvention convention) {
  if (n < 0) throw std::invalid_argument("RankCrankTable: n must be non-negative");
  RankCrankTable t;
  t.n_ = n;
  t.convention_ = convention;
  const auto width = static_cast<std::size_t>(2 * n + 1);
  t.rank_.assign(width, 0);
  t.raw_crank_.assign(width, 0);
  if (n == 0) {
    t.rank_[0] = 1;
    t.raw_crank_[0] = 1;
  } else {
    for_each_partition(n, [&](std::span<const int> parts) {
      ++t.rank_[static_cast<std::size_t>(rank(parts) + n)];
      ++t.raw_crank_[static_cast<std::size_t>(crank(parts) + n)];
    });
  }
  t.crank_ = t.raw_crank_;
  if (n == 1 && convention == CrankConvention::kAdjustedN1) {
    t.crank_ = {1, -1, 1};
  }
  return t;
}

Count RankCrankTable::rank_count(int m) const {
  if (m < -n_ || m > n_) return 0;
  return rank_[static_cast<std::size_t>(m + n_)];
}

Count RankCrankTable::crank_count(int m) const {
  if (m < -n_ || m > n_) return 0;
  return crank_[static_cast<std::size_t>(m + n_)];
}

Count RankCrankTable::rank_within(int m) const {
  if (m < 0) throw std::invalid_argument("rank_within: m must be non-negative");
  Count total = 0;
  for (int r = -std::min(m, n_); r <= std::min(m, n_); ++r) total += rank_count(r);
  return total;
}

Count RankCrankTable::crank_within(int m) const {
  if (m < 0) throw std::invalid_argument("crank_within: m must be non-negative");
  Count total = 0;
  for (int r = -std::min(m, n_); r <= std::min(m, n_); ++r) total += crank_count(r);
  return total;
}

Count RankCrankTable::rank_at_least(int m) const {
  Count total = 0;
  for (int r = std::max(-m, -n_); r <= n_; ++r) total += rank_count(r);
  return total;
}

Count RankCrankTable::crank_at_most(int m) const {
  Count total = 0;
  for (int r = -n_; r <= std::min(m, n_); ++r) {
    total += raw_crank_[static_cast<std::size_t>(r + n_)];
  }
  return total;
}

Count RankCrankTable::rank_total() const {
  Count total = 0;
  for (Count c : rank_) total += c;
  return total;
}

Count RankCrankTable::crank_total() const {
  Count total = 0;
  for (Count c : crank_) total += c;
  return total;
}

std::vector<Count> rank_set_counts(int n) {
  if (n < 0) throw std::invalid_argument("rank_set_counts: n must be non-negative");
  // diff[m] accumulates "every m' >= m is a member" contributions.
  std::vector<Count> diff(static_cast<std::size_t>(n) + 2, 0);
  std::vector<Count> point(static_cast<std::size_t>(n) + 1, 0);
  for_each_partition(n, [&](std::span<const int> parts) {
    const int len = static_cast<int>(parts.size());
    if (len <= n) ++diff[static_cast<std::size_t>(len)];
    for (int j = 0; j < len; ++j) {
      const int value = j - parts[static_cast<std::size_t>(j)];
      if (value >= 0) ++point[static_cast<std::size_t>(value)];
    }
  });
  std::vector<Count> q(static_cast<std::size_t>(n) + 1, 0);
  Count running = 0;
  for (int m = 0; m <= n; ++m) {
    running += diff[static_cast<std::size_t>(m)];
    q[static_cast<std::size_t>(m)] = running + point[static_cast<std::size_t>(m)];
  }
  return q;
}

Count rank_set_count(int m, int n) {
  if (m < 0) throw std::invalid_argument("rank_set_count: m must be non-negative");
  if (m > n) return count_partitions(n);
  return rank_set_counts(n)[static_cast<std::size_t>(m)];
}

Count rank_at_least_count(int m, int n) {
  if (m < 0) throw std::invalid_argument("rank_at_least_count: m must be non-negative");
  return RankCrankTable::build(n).rank_at_least(m);
}

Count rank_within_count(int m, int n) { return RankCrankTable::build(n).rank_within(m); }

Count crank_within_count(int m, int n) { return RankCrankTable::build(n).crank_within(m); }

Moment checked_power(Moment base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked_power: negative exponent");
  Moment result = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw std::overflow_error("moment power overflows 128-bit accumulator");
    }
  }
  return result;
}

namespace {

void checked_add(Moment& acc, Moment term) {
  if (__builtin_add_overflow(acc, term, &acc)) {
    throw std::overflow_error("moment sum overflows 128-bit accumulator");
  }
}

Moment weighted(Moment weight, Count count) {
  Moment out = 0;
  if (__builtin_mul_overflow(weight, static_cast<Moment>(count), &out)) {
    throw std::overflow_error("moment term overflows 128-bit accumulator");
  }
  return out;
}

void check_moment_args(int k, int n) {
  if (k < 1) throw std::invalid_argument("moment order k must be positive");
  if (n < 1) throw std::invalid_argument("moments are defined for n >= 1");
}

template <typename CountAt>
Moment moment(int k, int lo, int hi, CountAt count_at) {
  Moment acc = 0;
  for (int m = lo; m <= hi; ++m) {
    if (m == 0) continue;
    checked_add(acc, weighted(checked_power(m, k), count_at(m)));
  }
  return acc;
}

// m^k - (m-1)^k
Moment step(int m, int k) { return checked_power(m, k) - checked_power(m - 1, k); }

}  // namespace

Moment rank_moment(int k, const RankCrankTable& t) {
  check_moment_args(k, t.n());
  return moment(k, -t.n(), t.n(), [&](int m) { return t.rank_count(m); });
}

Moment crank_moment(int k, const RankCrankTable& t) {
  check_moment_args(k, t.n());
  return moment(k, -t.n(), t.n(), [&](int m) { return t.crank_count(m); });
}

Moment positive_rank_moment(int k, const RankCrankTable& t) {
  check_moment_args(k, t.n());
  return moment(k, 1, t.n(), [&](int m) { return t.rank_count(m); });
}

Moment positive_crank_moment(int k, const RankCrankTable& t) {
  check_moment_args(k, t.n());
  return moment(k, 1, t.n(), [&](int m) { return t.crank_count(m); });
}

Moment rank_moment(int k, int n) { return rank_moment(k, RankCrankTable::build(n)); }
Moment crank_moment(int k, int n) { return crank_moment(k, RankCrankTable::build(n)); }
Moment positive_rank_moment(int k, int n) {
  return positive_rank_moment(k, RankCrankTable::build(n));
}
Moment positive_crank_moment(int k, int n) {
  return positive_crank_moment(k, RankCrankTable::build(n));
}

namespace {

template <typename Window>
Moment by_windows(int k, const RankCrankTable& t, Window window) {
  check_moment_args(k, t.n());
  const Count p = count_partitions(t.n());
  Moment twice = 0;
  for (int m = 1; m <= t.n(); ++m) {
    checked_add(twice, weighted(step(m, k), p - window(m - 1)));
  }
  // Even whenever the table is symmetric.
  if (twice % 2 != 0) throw std::domain_error("window moment sum is odd");
  return twice / 2;
}

}  // namespace

Moment positive_rank_moment_by_windows(int k, const RankCrankTable& t) {
  return by_windows(k, t, [&](int m) { return t.rank_within(m); });
}

Moment positive_crank_moment_by_windows(int k, const RankCrankTable& t) {
  return by_windows(k, t, [&](int m) { return t.crank_within(m); });
}

Moment positive_moment_difference_by_windows(int k, const RankCrankTable& t) {
  check_moment_args(k, t.n());
  const int n = t.n();
  Moment twice = 0;
  for (int m = 1; m <= n - 1; ++m) {
    checked_add(twice, weighted(step(m, k), t.rank_within(m - 1) - t.crank_within(m - 1)));
  }
  if (twice % 2 != 0) throw std::domain_error("window difference sum is odd");
  Moment out = twice / 2;
  checked_add(out, step(n, k));
  return out;
}

}  // namespace sptcrank
