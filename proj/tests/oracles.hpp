#pragma once

// Slow, independent reference implementations used only by the tests.
// Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

// All partitions of n with parts in [lo, hi], by plain recursion on the
// largest part. Order: lexicographically decreasing.
inline void partitions_rec(int n, int lo, int hi, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, hi); p >= lo; --p) {
    cur.push_back(p);
    partitions_rec(n - p, lo, p, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Parts> partitions(int n, int lo = 1, int hi = -1) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, lo, hi < 0 ? n : hi, cur, out);
  return out;
}

// p(0..n) by the coin-change recurrence.
inline std::vector<std::int64_t> partition_numbers(int n) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int w = part; w <= n; ++w) p[static_cast<std::size_t>(w)] += p[static_cast<std::size_t>(w - part)];
  }
  return p;
}

inline int rank(const Parts& p) { return p.front() - static_cast<int>(p.size()); }

inline int crank(const Parts& p) {
  const int ones = static_cast<int>(std::count(p.begin(), p.end(), 1));
  if (ones == 0) return p.front();
  int larger = 0;
  for (int x : p) larger += x > ones ? 1 : 0;
  return larger - ones;
}

// The rank-set as a finite prefix long enough to decide membership of m.
inline bool rank_set_contains(const Parts& p, int m) {
  const int len = static_cast<int>(p.size());
  for (int j = 0; j <= len + std::abs(m) + 1; ++j) {
    const int next = j < len ? p[static_cast<std::size_t>(j)] : 0;
    if (j - next == m) return true;
  }
  return false;
}

// Ferrers diagram cells as rows of booleans.
struct Diagram {
  std::vector<int> rows;
  bool cell(int r, int c) const {  // 1-based
    return r >= 1 && r <= static_cast<int>(rows.size()) && c >= 1 && c <= rows[static_cast<std::size_t>(r - 1)];
  }
};

// Largest j such that the (m+j) x j rectangle fits, found by testing the
// bottom-right cell of every candidate rectangle.
inline int rectangle_index(const Parts& p, int m) {
  Diagram d{p};
  int best = 0;
  for (int j = 1; j <= 200; ++j) {
    if (d.cell(m + j, j)) best = j;
  }
  return best;
}

struct Symbol {
  int j;
  Parts alpha, beta;
};

// Reads the symbol off the diagram: alpha are the column heights to the right
// of the rectangle (restricted to its rows), beta the rows below it.
inline Symbol symbol(const Parts& p, int m) {
  Diagram d{p};
  Symbol s;
  s.j = rectangle_index(p, m);
  if (s.j == 0) {
    const int width = p.empty() ? 0 : p.front();
    for (int c = 1; c <= width; ++c) {
      int h = 0;
      while (d.cell(h + 1, c)) ++h;
      s.alpha.push_back(h);
    }
    return s;
  }
  const int height = m + s.j;
  for (int c = s.j + 1; d.cell(1, c); ++c) {
    int h = 0;
    while (h < height && d.cell(h + 1, c)) ++h;
    s.alpha.push_back(h);
  }
  for (std::size_t r = static_cast<std::size_t>(height); r < p.size(); ++r) s.beta.push_back(p[r]);
  return s;
}

// Distinct-part partitions with smallest part exactly s and weight <= cap.
inline void distinct_rec(int next, int room, Parts& above, int s, std::vector<Parts>& out) {
  Parts q(above.rbegin(), above.rend());
  q.push_back(s);
  out.push_back(q);
  for (int v = next; v <= room; ++v) {
    above.push_back(v);
    distinct_rec(v + 1, room - v, above, s, out);
    above.pop_back();
  }
}

// N_S(m,n) for |m| <= n without listing pi2 and pi3: count partitions with
// parts >= s by (weight, length) with a DP, then convolve.
inline std::map<int, std::int64_t> spt_crank_counts(int n) {
  std::map<int, std::int64_t> out;
  for (int s = 1; s <= n; ++s) {
    // table[w][l] = #partitions of w into l parts, all >= s
    std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(n) + 1,
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    table[0][0] = 1;
    for (int part = s; part <= n; ++part) {
      for (int w = part; w <= n; ++w) {
        for (int l = 1; l <= n; ++l) {
          table[static_cast<std::size_t>(w)][static_cast<std::size_t>(l)] +=
              table[static_cast<std::size_t>(w - part)][static_cast<std::size_t>(l - 1)];
        }
      }
    }
    std::vector<Parts> firsts;
    Parts above;
    if (s <= n) distinct_rec(s + 1, n - s, above, s, firsts);
    for (const Parts& pi1 : firsts) {
      int w1 = 0;
      for (int x : pi1) w1 += x;
      const std::int64_t sign = pi1.size() % 2 == 1 ? 1 : -1;
      const int r = n - w1;
      for (int w2 = 0; w2 <= r; ++w2) {
        for (int l2 = 0; l2 <= n; ++l2) {
          const auto a = table[static_cast<std::size_t>(w2)][static_cast<std::size_t>(l2)];
          if (a == 0) continue;
          for (int l3 = 0; l3 <= n; ++l3) {
            const auto b = table[static_cast<std::size_t>(r - w2)][static_cast<std::size_t>(l3)];
            if (b != 0) out[l2 - l3] += sign * a * b;
          }
        }
      }
    }
  }
  return out;
}

// spt(n) = sum over s, k >= 1 of k * #{partitions of n - k s with parts > s}.
inline std::int64_t spt(int n) {
  std::int64_t total = 0;
  for (int s = 1; s <= n; ++s) {
    std::vector<std::int64_t> above(static_cast<std::size_t>(n) + 1, 0);
    above[0] = 1;
    for (int part = s + 1; part <= n; ++part) {
      for (int w = part; w <= n; ++w) above[static_cast<std::size_t>(w)] += above[static_cast<std::size_t>(w - part)];
    }
    for (int k = 1; k * s <= n; ++k) total += k * above[static_cast<std::size_t>(n - k * s)];
  }
  return total;
}

}  // namespace oracle
