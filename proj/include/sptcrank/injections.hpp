#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sptcrank/classifier.hpp"
#include "sptcrank/durfee.hpp"

namespace sptcrank {

/// Record of one application of a class map (forward or inverse).
///
/// `indices` holds the auxiliary integers the construction selected, in the
/// order they were chosen: k for the Q4/Q5/Q6/Qbar1/Qbar2 maps, (k, h) for
/// Qbar5, and the primed counterparts (k', h', r') for the inverses.
struct MappingTrace {
  std::string map;  ///< "Q4->P4", or "P4->Q4" for an inverse
  bool inverse = false;
  ClassLabel source_class = ClassLabel::kQ1;
  std::optional<ClassLabel> target_class;  ///< class of `output`, if it lies on the target side
  DurfeeSymbol input;
  DurfeeSymbol output;
  std::vector<std::pair<std::string, int>> indices;

  std::optional<int> index(std::string_view name) const;
};

/// The class of P(-m,n) that the map on `domain` lands in:
/// Qi -> Pi (i <= 6), Qbar1..3 -> Pbar1..3, Qbar4 -> P7, Qbar5 -> P8.
ClassLabel target_class_of(ClassLabel domain);

// Forward maps. Each throws std::invalid_argument if the input is not in its
// domain class, and std::logic_error if a selection index cannot be found.

/// Q1 -> P1: identity (the two classes coincide).
MappingTrace inject_q1(const DurfeeSymbol& s);
/// Q2 -> P2: alpha_i + 1 padded with 1^{t-s}; beta_i - 1. Same rectangle.
MappingTrace inject_q2(const DurfeeSymbol& s);
/// Q3 -> P3 (bijection): drop alpha_1 and beta_1, shift, grow the rectangle by one.
MappingTrace inject_q3(const DurfeeSymbol& s);
/// Q4 -> P4: exchange the tails of the rows after the least admissible k.
MappingTrace inject_q4(const DurfeeSymbol& s);
/// Q5 -> P5, m >= 1 only. k is the largest admissible index.
MappingTrace inject_q5(const DurfeeSymbol& s);
/// Q6 -> P6, m >= 1 only. k is the largest admissible index.
MappingTrace inject_q6(const DurfeeSymbol& s);

/// m = 0 refinements of Q5 and Q6.
MappingTrace inject_qbar1(const DurfeeSymbol& s);  ///< -> Pbar1, Q5 construction at m = 0
MappingTrace inject_qbar2(const DurfeeSymbol& s);  ///< -> Pbar2, Q6 construction at m = 0
MappingTrace inject_qbar3(const DurfeeSymbol& s);  ///< -> Pbar3
MappingTrace inject_qbar4(const DurfeeSymbol& s);  ///< -> P7 (bijection)
MappingTrace inject_qbar5(const DurfeeSymbol& s);  ///< -> P8

// Inverses. They accept any symbol of the target class and throw
// std::invalid_argument when the input is not an image (the reconstruction
// fails to be a valid symbol of the source class or changes the weight).

MappingTrace invert_q2(const DurfeeSymbol& s);
MappingTrace invert_q3(const DurfeeSymbol& s);
MappingTrace invert_q4(const DurfeeSymbol& s);
MappingTrace invert_q5(const DurfeeSymbol& s);
MappingTrace invert_q6(const DurfeeSymbol& s);
MappingTrace invert_qbar1(const DurfeeSymbol& s);
MappingTrace invert_qbar2(const DurfeeSymbol& s);
MappingTrace invert_qbar3(const DurfeeSymbol& s);
MappingTrace invert_qbar4(const DurfeeSymbol& s);
MappingTrace invert_qbar5(const DurfeeSymbol& s);

/// Forward map for the given domain class.
MappingTrace inject_class(ClassLabel domain, const DurfeeSymbol& s);
/// Inverse of the map on `domain`; Q1 inverts to the identity.
MappingTrace invert_class(ClassLabel domain, const DurfeeSymbol& image);

/// The combined injection Q(m,n) -> P(-m,n): dispatch on classify_Q.
MappingTrace inject(const DurfeeSymbol& s);

}  // namespace sptcrank
