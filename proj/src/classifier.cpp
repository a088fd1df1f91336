#include "sptcrank/classifier.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "sptcrank/stats.hpp"

namespace sptcrank {

namespace {

constexpr std::array<std::pair<ClassLabel, std::string_view>, 22> kNames{{
    {ClassLabel::kQ1, "Q1"},       {ClassLabel::kQ2, "Q2"},       {ClassLabel::kQ3, "Q3"},
    {ClassLabel::kQ4, "Q4"},       {ClassLabel::kQ5, "Q5"},       {ClassLabel::kQ6, "Q6"},
    {ClassLabel::kQbar1, "Qbar1"}, {ClassLabel::kQbar2, "Qbar2"}, {ClassLabel::kQbar3, "Qbar3"},
    {ClassLabel::kQbar4, "Qbar4"}, {ClassLabel::kQbar5, "Qbar5"}, {ClassLabel::kP1, "P1"},
    {ClassLabel::kP2, "P2"},       {ClassLabel::kP3, "P3"},       {ClassLabel::kP4, "P4"},
    {ClassLabel::kP5, "P5"},       {ClassLabel::kP6, "P6"},       {ClassLabel::kP7, "P7"},
    {ClassLabel::kP8, "P8"},       {ClassLabel::kPbar1, "Pbar1"}, {ClassLabel::kPbar2, "Pbar2"},
    {ClassLabel::kPbar3, "Pbar3"},
}};

constexpr std::array kCoarseQ{ClassLabel::kQ1, ClassLabel::kQ2, ClassLabel::kQ3,
                              ClassLabel::kQ4, ClassLabel::kQ5, ClassLabel::kQ6};
constexpr std::array kRefinedQ{ClassLabel::kQbar1, ClassLabel::kQbar2, ClassLabel::kQbar3,
                               ClassLabel::kQbar4, ClassLabel::kQbar5};
constexpr std::array kCoarseP{ClassLabel::kP1, ClassLabel::kP2, ClassLabel::kP3,
                              ClassLabel::kP4, ClassLabel::kP5, ClassLabel::kP6,
                              ClassLabel::kP7, ClassLabel::kP8};
constexpr std::array kRefinedP{ClassLabel::kPbar1, ClassLabel::kPbar2, ClassLabel::kPbar3};

// Shape quantities of a symbol, with 0 for missing parts.
struct Shape {
  int m, j, s, t;
  int top;  // m + j
  int a1, a2, a3;
  int b1, b2;
  ExtendedPart min_alpha, min_beta;
  bool beta_has_two;

  explicit Shape(const DurfeeSymbol& sym)
      : m(sym.m),
        j(sym.j),
        s(static_cast<int>(sym.alpha.length())),
        t(static_cast<int>(sym.beta.length())),
        top(sym.m + sym.j),
        a1(sym.alpha.part(1)),
        a2(sym.alpha.part(2)),
        a3(sym.alpha.part(3)),
        b1(sym.beta.part(1)),
        b2(sym.beta.part(2)),
        min_alpha(smallest_part(sym.alpha)),
        min_beta(smallest_part(sym.beta)),
        beta_has_two(sym.beta.multiplicity(2) > 0) {}
};

// Q-side: alpha/beta as in the symbol. Common prefix of Q3..Q6.
bool q_long_beta_full_column(const Shape& x) { return x.j >= 1 && x.t - x.s >= 1 && x.a1 == x.top; }

bool q5(const Shape& x) {
  return q_long_beta_full_column(x) && x.a2 == x.top && x.a3 < x.top && x.min_beta >= 2;
}
bool q6(const Shape& x) {
  return q_long_beta_full_column(x) && x.a2 == x.top && x.a3 == x.top && x.min_beta >= 2;
}

// P-side: gamma/delta stored in alpha/beta.
bool p_equal_full_row(const Shape& x) { return x.j >= 1 && x.t == x.s && x.b1 == x.j; }

bool p5(const Shape& x) { return p_equal_full_row(x) && x.a1 <= x.top - 3; }
bool p6(const Shape& x) { return p_equal_full_row(x) && x.a1 == x.top - 2; }

bool predicate(const Shape& x, ClassLabel label) {
  switch (label) {
    case ClassLabel::kQ1:
      return x.j == 0 || x.t - x.s <= -1 || (x.t == x.s && x.a1 == x.top);
    case ClassLabel::kQ2:
      return x.j >= 1 && x.t - x.s >= 0 && x.a1 < x.top;
    case ClassLabel::kQ3:
      return q_long_beta_full_column(x) && x.min_beta == 1;
    case ClassLabel::kQ4:
      return q_long_beta_full_column(x) && x.a2 < x.top && x.min_beta >= 2;
    case ClassLabel::kQ5:
      return q5(x);
    case ClassLabel::kQ6:
      return q6(x);
    case ClassLabel::kQbar1:
      return x.m == 0 && q5(x) && x.min_beta >= 3;
    case ClassLabel::kQbar2:
      return x.m == 0 && q6(x) && x.min_beta >= 3;
    case ClassLabel::kQbar3:
      return x.m == 0 && (q5(x) || q6(x)) && x.min_alpha == 1 && x.min_beta == 2;
    case ClassLabel::kQbar4:
      return x.m == 0 && (q5(x) || q6(x)) && x.min_alpha >= 2 && x.b1 == x.b2 && x.min_beta == 2;
    case ClassLabel::kQbar5:
      return x.m == 0 && (q5(x) || q6(x)) && x.min_alpha >= 2 && x.b1 > x.b2 && x.min_beta == 2;
    case ClassLabel::kP1:
      return x.j == 0 || (x.t - x.s <= -1 && x.b1 == x.j) ||
             (x.t == x.s && x.a1 == x.top && x.b1 == x.j);
    case ClassLabel::kP2:
      return x.j >= 1 && x.b1 == x.j - 1;
    case ClassLabel::kP3:
      return x.j >= 2 && x.b1 <= x.j - 2;
    case ClassLabel::kP4:
      return p_equal_full_row(x) && x.a1 == x.top - 1 && x.beta_has_two;
    case ClassLabel::kP5:
      return p5(x);
    case ClassLabel::kP6:
      return p6(x);
    case ClassLabel::kP7:
      return p_equal_full_row(x) && x.a1 == x.top - 1 && x.a2 < x.a1 && !x.beta_has_two;
    case ClassLabel::kP8:
      return p_equal_full_row(x) && x.a1 == x.top - 1 && x.a2 == x.a1 && !x.beta_has_two;
    case ClassLabel::kPbar1:
      return x.m == 0 && p5(x) && x.min_beta >= 2;
    case ClassLabel::kPbar2:
      return x.m == 0 && p6(x) && x.min_beta >= 2;
    case ClassLabel::kPbar3:
      return x.m == 0 && (p5(x) || p6(x)) && x.min_beta == 1;
  }
  return false;
}

template <std::size_t N>
std::vector<ClassLabel> collect(const Shape& x, const std::array<ClassLabel, N>& ladder) {
  std::vector<ClassLabel> out;
  for (ClassLabel label : ladder) {
    if (predicate(x, label)) out.push_back(label);
  }
  return out;
}

template <std::size_t N>
ClassLabel first_match(const DurfeeSymbol& s, const Shape& x, const std::array<ClassLabel, N>& ladder,
                       ClassifyMode mode) {
  const auto hits = collect(x, ladder);
  if (hits.empty()) {
    throw std::logic_error("no class matches symbol " + s.to_string());
  }
  if (mode == ClassifyMode::kChecked && hits.size() > 1) {
    throw std::logic_error("symbol " + s.to_string() + " matches both " +
                           std::string(to_string(hits[0])) + " and " +
                           std::string(to_string(hits[1])));
  }
  return hits.front();
}

}  // namespace

Side side_of(ClassLabel label) {
  return label <= ClassLabel::kQbar5 ? Side::kDomain : Side::kCodomain;
}

std::string_view to_string(ClassLabel label) {
  for (const auto& [l, name] : kNames) {
    if (l == label) return name;
  }
  return "?";
}

std::optional<ClassLabel> parse_class_label(std::string_view text) {
  for (const auto& [l, name] : kNames) {
    if (name == text) return l;
  }
  return std::nullopt;
}

bool in_Q(const DurfeeSymbol& s) { return rank_set_contains(from_symbol(s), s.m); }

bool in_P(const DurfeeSymbol& s) {
  const Partition p = from_symbol(s);
  return p.empty() || rank(p) >= -s.m;
}

bool in_Q_by_shape(const DurfeeSymbol& s) { return s.j == 0 || s.beta.part(1) == s.j; }

bool in_P_by_shape(const DurfeeSymbol& s) { return s.j == 0 || s.beta.length() <= s.alpha.length(); }

bool matches(const DurfeeSymbol& s, ClassLabel label) { return predicate(Shape(s), label); }

ClassLabel classify_Q(const DurfeeSymbol& s, ClassifyMode mode) {
  if (!in_Q_by_shape(s)) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not in Q(m,n)");
  }
  const Shape x(s);
  const ClassLabel coarse = first_match(s, x, kCoarseQ, mode);
  if (s.m != 0 || (coarse != ClassLabel::kQ5 && coarse != ClassLabel::kQ6)) return coarse;
  return first_match(s, x, kRefinedQ, mode);
}

ClassLabel classify_P(const DurfeeSymbol& s, ClassifyMode mode) {
  if (!in_P_by_shape(s)) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not in P(-m,n)");
  }
  const Shape x(s);
  const ClassLabel coarse = first_match(s, x, kCoarseP, mode);
  if (s.m != 0 || (coarse != ClassLabel::kP5 && coarse != ClassLabel::kP6)) return coarse;
  return first_match(s, x, kRefinedP, mode);
}

std::vector<ClassLabel> matching_Q_classes(const DurfeeSymbol& s) {
  const Shape x(s);
  auto out = collect(x, kCoarseQ);
  const auto refined = collect(x, kRefinedQ);
  out.insert(out.end(), refined.begin(), refined.end());
  return out;
}

std::vector<ClassLabel> matching_P_classes(const DurfeeSymbol& s) {
  const Shape x(s);
  auto out = collect(x, kCoarseP);
  const auto refined = collect(x, kRefinedP);
  out.insert(out.end(), refined.begin(), refined.end());
  return out;
}

}  // namespace sptcrank
