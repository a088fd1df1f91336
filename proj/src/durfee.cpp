#include "sptcrank/durfee.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sptcrank {

namespace {

void write_row(std::ostream& os, const Partition& p) {
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p.parts()[i];
  }
}

}  // namespace

std::string DurfeeSymbol::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DurfeeSymbol& s) {
  os << '(';
  write_row(os, s.alpha);
  os << " / ";
  write_row(os, s.beta);
  os << ")_{";
  if (s.m == 0) {
    os << s.j;
  } else {
    os << s.m + s.j << 'x' << s.j;
  }
  return os << '}';
}

int durfee_index(const Partition& p, int m) {
  if (m < 0) throw std::invalid_argument("durfee_index: m must be non-negative");
  const int len = static_cast<int>(p.length());
  // lambda_{m+j} - j is strictly decreasing in j, so scan down from the cap.
  for (int j = std::min(p.largest(), len - m); j >= 1; --j) {
    if (p.part(static_cast<std::size_t>(m + j)) >= j) return j;
  }
  return 0;
}

DurfeeSymbol to_symbol(const Partition& p, int m) {
  DurfeeSymbol s;
  s.m = m;
  s.j = durfee_index(p, m);
  if (s.j == 0) {
    s.alpha = conjugate(p);
    return s;
  }
  const int height = m + s.j;
  std::vector<int> alpha;
  for (int c = 1; c <= p.largest() - s.j; ++c) {
    int count = 0;
    for (int r = 1; r <= height && p.part(static_cast<std::size_t>(r)) >= s.j + c; ++r) ++count;
    alpha.push_back(count);
  }
  s.alpha = Partition(std::move(alpha));
  const auto parts = p.parts();
  s.beta = Partition(std::vector<int>(parts.begin() + height, parts.end()));
  return s;
}

bool is_valid_symbol(const DurfeeSymbol& s) {
  return s.m >= 0 && s.j >= 0 && s.alpha.largest() <= s.m + s.j && s.beta.largest() <= s.j;
}

Partition from_symbol(const DurfeeSymbol& s) {
  if (s.m < 0 || s.j < 0) throw std::invalid_argument("durfee symbol: negative m or j");
  if (s.alpha.largest() > s.m + s.j) {
    throw std::invalid_argument("durfee symbol " + s.to_string() +
                                ": alpha_1 exceeds the rectangle height");
  }
  if (s.beta.largest() > s.j) {
    throw std::invalid_argument("durfee symbol " + s.to_string() +
                                ": beta_1 exceeds the rectangle width (rectangle not maximal)");
  }
  std::vector<int> rows;
  const int height = s.m + s.j;
  for (int r = 1; r <= height; ++r) {
    int count = 0;
    for (int a : s.alpha.parts()) {
      if (a >= r) ++count;
    }
    if (s.j + count > 0) rows.push_back(s.j + count);
  }
  const auto beta = s.beta.parts();
  rows.insert(rows.end(), beta.begin(), beta.end());
  Partition out(std::move(rows));
  if (durfee_index(out, s.m) != s.j) {
    throw std::invalid_argument("durfee symbol " + s.to_string() + ": rectangle is not maximal");
  }
  return out;
}

}  // namespace sptcrank
