#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sptcrank/durfee.hpp"

namespace sptcrank {

// Q(m,n): partitions of n whose rank-set contains m.
// P(-m,n): partitions of n with rank >= -m.
// Both are split into the disjoint classes below, in terms of the m-Durfee
// rectangle symbol. Writing s = l(alpha), t = l(beta), missing parts read as 0
// and the smallest part of an empty row is +infinity.

enum class ClassLabel {
  kQ1, kQ2, kQ3, kQ4, kQ5, kQ6,
  kQbar1, kQbar2, kQbar3, kQbar4, kQbar5,
  kP1, kP2, kP3, kP4, kP5, kP6, kP7, kP8,
  kPbar1, kPbar2, kPbar3,
};

enum class Side { kDomain, kCodomain };

Side side_of(ClassLabel label);
std::string_view to_string(ClassLabel label);
std::optional<ClassLabel> parse_class_label(std::string_view text);

/// Membership through the rank-set of the rebuilt partition.
bool in_Q(const DurfeeSymbol& s);
/// Membership through the rank of the rebuilt partition.
bool in_P(const DurfeeSymbol& s);

/// The same memberships read off the symbol: j = 0 or beta_1 = j.
bool in_Q_by_shape(const DurfeeSymbol& s);
/// j = 0 or l(beta) <= l(alpha).
bool in_P_by_shape(const DurfeeSymbol& s);

/// Coarse class predicates (Q1..Q6, P1..P8). They assume membership in Q or P.
bool matches(const DurfeeSymbol& s, ClassLabel label);

enum class ClassifyMode {
  kFirstMatch,
  kChecked,  ///< throws std::logic_error if a later predicate also matches
};

/// Q1..Q6 for m >= 1. For m = 0 the labels Q5 and Q6 are refined to Qbar1..Qbar5.
/// Throws std::invalid_argument if s is not in Q.
ClassLabel classify_Q(const DurfeeSymbol& s, ClassifyMode mode = ClassifyMode::kFirstMatch);

/// P1..P8 for m >= 1. For m = 0 the labels P5 and P6 are refined to Pbar1..Pbar3.
ClassLabel classify_P(const DurfeeSymbol& s, ClassifyMode mode = ClassifyMode::kFirstMatch);

/// Every label of the relevant side whose predicate holds (coarse and refined).
/// Used to test that the ladders are disjoint and exhaustive.
std::vector<ClassLabel> matching_Q_classes(const DurfeeSymbol& s);
std::vector<ClassLabel> matching_P_classes(const DurfeeSymbol& s);

}  // namespace sptcrank
