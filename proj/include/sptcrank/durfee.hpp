#pragma once

#include <string>

#include "sptcrank/partition.hpp"

namespace sptcrank {

/// The m-Durfee rectangle symbol (alpha / beta)_{(m+j) x j} of a partition.
///
/// The rectangle is the largest (m+j) x j block inside the Ferrers diagram.
/// alpha lists the column lengths to its right, beta the rows below it. When
/// the partition has at most m parts there is no such block and j = 0, in
/// which case alpha is the conjugate and beta is empty.
///
/// Symbols with the same (alpha, beta, j) but different m are distinct values.
struct DurfeeSymbol {
  int m = 0;
  int j = 0;
  Partition alpha;
  Partition beta;

  int height() const { return m + j; }
  int weight() const { return alpha.weight() + beta.weight() + j * (m + j); }

  /// (4,3,3,2 / 3,2,2,2)_{5x3}; for m = 0 the subscript is the square side, (3,3,2 / 3,3,2,2,2)_{4}.
  std::string to_string() const;

  friend bool operator==(const DurfeeSymbol&, const DurfeeSymbol&) = default;
};

std::ostream& operator<<(std::ostream& os, const DurfeeSymbol& s);

/// Largest j >= 0 such that the partition has at least m + j parts of size >= j.
int durfee_index(const Partition& p, int m);

DurfeeSymbol to_symbol(const Partition& p, int m);

/// Rebuilds the partition: row r (1 <= r <= m+j) is j + #{i : alpha_i >= r},
/// followed by the parts of beta. Throws std::invalid_argument when
/// alpha_1 > m + j, beta_1 > j, or the rectangle is not the maximal one.
Partition from_symbol(const DurfeeSymbol& s);

/// Shape checks only (no exception): m, j >= 0, alpha_1 <= m + j, beta_1 <= j.
/// For these shapes beta_1 <= j is exactly the maximality condition.
bool is_valid_symbol(const DurfeeSymbol& s);

}  // namespace sptcrank
