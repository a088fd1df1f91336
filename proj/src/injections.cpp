#include "sptcrank/injections.hpp"

#include <stdexcept>
#include <string>

namespace sptcrank {

namespace {

// Row builder for the constructions below. Ranges are 1-based and inclusive;
// an empty range (hi < lo) contributes nothing.
class Row {
 public:
  Row& push(int v) {
    parts_.push_back(v);
    return *this;
  }
  Row& repeat(int v, int times) {
    for (int i = 0; i < times; ++i) parts_.push_back(v);
    return *this;
  }
  // p_i + shift for lo <= i <= hi (missing parts read as 0).
  Row& range(const Partition& p, int lo, int hi, int shift) {
    for (int i = lo; i <= hi; ++i) parts_.push_back(p.part(static_cast<std::size_t>(i)) + shift);
    return *this;
  }
  Partition build() && { return Partition::from_trailing_zeros(std::move(parts_)); }

 private:
  std::vector<int> parts_;
};

int len(const Partition& p) { return static_cast<int>(p.length()); }
int at(const Partition& p, int i) { return i < 1 ? 0 : p.part(static_cast<std::size_t>(i)); }

std::string map_name(ClassLabel from, ClassLabel to) {
  return std::string(to_string(from)) + "->" + std::string(to_string(to));
}

void require_class(const DurfeeSymbol& s, ClassLabel expected) {
  if (!in_Q_by_shape(s) || classify_Q(s) != expected) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not in " +
                                std::string(to_string(expected)));
  }
}

void require_target(const DurfeeSymbol& s, ClassLabel expected) {
  if (!in_P_by_shape(s) || classify_P(s) != expected) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not in " +
                                std::string(to_string(expected)));
  }
}

DurfeeSymbol make_symbol(int m, int j, Partition alpha, Partition beta) {
  DurfeeSymbol out{m, j, std::move(alpha), std::move(beta)};
  if (!is_valid_symbol(out)) {
    throw std::logic_error("construction produced an invalid symbol " + out.to_string());
  }
  return out;
}

MappingTrace forward_trace(ClassLabel domain, const DurfeeSymbol& in, DurfeeSymbol out,
                           std::vector<std::pair<std::string, int>> indices = {}) {
  MappingTrace t;
  t.map = map_name(domain, target_class_of(domain));
  t.source_class = domain;
  if (in_P_by_shape(out)) t.target_class = classify_P(out);
  t.input = in;
  t.output = std::move(out);
  t.indices = std::move(indices);
  return t;
}

// Inverse reconstructions are checked against the source class and weight,
// since they are only guaranteed on the forward image.
MappingTrace inverse_trace(ClassLabel domain, const DurfeeSymbol& in, int m, int j,
                           std::vector<int> alpha, std::vector<int> beta,
                           std::vector<std::pair<std::string, int>> indices = {}) {
  DurfeeSymbol out;
  try {
    out = DurfeeSymbol{m, j, Partition::from_trailing_zeros(std::move(alpha)),
                       Partition::from_trailing_zeros(std::move(beta))};
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("symbol " + in.to_string() + " is not an image of " +
                                std::string(to_string(domain)) + ": " + e.what());
  }
  if (!is_valid_symbol(out) || out.weight() != in.weight() || !in_Q_by_shape(out) ||
      classify_Q(out) != domain) {
    throw std::invalid_argument("symbol " + in.to_string() + " is not an image of " +
                                std::string(to_string(domain)));
  }
  MappingTrace t;
  t.map = map_name(target_class_of(domain), domain);
  t.inverse = true;
  t.source_class = target_class_of(domain);
  t.target_class = domain;
  t.input = in;
  t.output = std::move(out);
  t.indices = std::move(indices);
  return t;
}

std::vector<int> parts_of(Row row) {
  const Partition p = std::move(row).build();
  return {p.parts().begin(), p.parts().end()};
}

// ---- Q5 / Qbar1 construction ------------------------------------------------
// k is the largest index in [1, t-1] with alpha_k - m + 2 >= beta_{k+1} - 1.
MappingTrace two_full_columns_forward(ClassLabel domain, const DurfeeSymbol& s) {
  const int m = s.m, j = s.j, t = len(s.beta);
  const Partition& a = s.alpha;
  const Partition& b = s.beta;
  int k = 0;
  for (int c = t - 1; c >= 1; --c) {
    if (at(a, c) - m + 2 >= at(b, c + 1) - 1) {
      k = c;
      break;
    }
  }
  if (k < 2) throw std::logic_error("no admissible k >= 2 for " + s.to_string());

  Row gamma;
  gamma.range(b, 2, k, m - 2).range(a, k + 1, t, 1);
  Row delta;
  if (k == 2) {
    delta.push(at(a, 2) + 1 - m).range(b, 3, t, -1);
  } else {
    delta.push(at(a, 2) + 1 - m).range(a, 3, k, 2 - m).range(b, k + 1, t, -1);
  }
  auto out = make_symbol(m, j + 1, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(domain, s, std::move(out), {{"k", k}});
}

// k' is the largest index in [1, t'-1] with gamma_{k'} - m + 1 >= delta_{k'+1}.
MappingTrace two_full_columns_inverse(ClassLabel domain, const DurfeeSymbol& s) {
  const int m = s.m, jp = s.j, tp = len(s.alpha);
  const Partition& g = s.alpha;
  const Partition& d = s.beta;
  int kp = 0;
  for (int c = tp - 1; c >= 1; --c) {
    if (at(g, c) - m + 1 >= at(d, c + 1)) {
      kp = c;
      break;
    }
  }
  if (kp < 1) throw std::invalid_argument("no admissible k' for " + s.to_string());
  Row alpha;
  alpha.push(jp + m - 1).push(at(d, 1) - 1 + m).range(d, 2, kp, m - 2).range(g, kp + 1, tp, -1);
  Row beta;
  beta.push(jp - 1).range(g, 1, kp, 2 - m).range(d, kp + 1, tp, 1);
  std::vector<int> alpha_parts, beta_parts;
  try {
    alpha_parts = parts_of(std::move(alpha));
    beta_parts = parts_of(std::move(beta));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not an image: " + e.what());
  }
  return inverse_trace(domain, s, m, jp - 1, std::move(alpha_parts), std::move(beta_parts),
                       {{"k'", kp}});
}

// ---- Q6 / Qbar2 construction ------------------------------------------------
// k is the largest index <= s with alpha_k - m + 1 >= beta_k - 1.
MappingTrace three_full_columns_forward(ClassLabel domain, const DurfeeSymbol& s) {
  const int m = s.m, j = s.j, sl = len(s.alpha), t = len(s.beta);
  const Partition& a = s.alpha;
  const Partition& b = s.beta;
  int k = 0;
  for (int c = sl; c >= 1; --c) {
    if (at(a, c) - m + 1 >= at(b, c) - 1) {
      k = c;
      break;
    }
  }
  if (k < 3) throw std::logic_error("no admissible k >= 3 for " + s.to_string());

  Row gamma;
  if (k == sl) {
    gamma.range(b, 1, sl - 1, m - 1).push(2).repeat(1, t - sl - 1);
  } else {
    gamma.range(b, 1, k - 1, m - 1).range(a, k + 1, sl, 1).push(2).repeat(1, t - sl - 1);
  }
  Row delta;
  delta.range(a, 3, k, 1 - m).range(b, k, t, -1);
  auto out = make_symbol(m, j + 1, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(domain, s, std::move(out), {{"k", k}});
}

// k' is the largest index in [1, t'-1] with gamma_{k'} - m >= delta_{k'} and
// gamma_{k'+1} >= 2; s' is the position of the last part 2 of gamma.
MappingTrace three_full_columns_inverse(ClassLabel domain, const DurfeeSymbol& s) {
  const int m = s.m, jp = s.j, tp = len(s.alpha);
  const Partition& g = s.alpha;
  const Partition& d = s.beta;
  int kp = 0;
  for (int c = tp - 1; c >= 1; --c) {
    if (at(g, c) - m >= at(d, c) && at(g, c + 1) >= 2) {
      kp = c;
      break;
    }
  }
  int sp = 0;
  for (int c = tp; c >= 1; --c) {
    if (at(g, c) == 2) {
      sp = c;
      break;
    }
  }
  if (kp < 1 || sp < 1) throw std::invalid_argument("no admissible k' for " + s.to_string());
  Row alpha;
  alpha.push(jp + m - 1).push(jp + m - 1).range(d, 1, kp - 1, m - 1).range(g, kp + 1, sp - 1, -1);
  Row beta;
  beta.range(g, 1, kp, 1 - m).range(d, kp, tp, 1);
  std::vector<int> alpha_parts, beta_parts;
  try {
    alpha_parts = parts_of(std::move(alpha));
    beta_parts = parts_of(std::move(beta));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not an image: " + e.what());
  }
  return inverse_trace(domain, s, m, jp - 1, std::move(alpha_parts), std::move(beta_parts),
                       {{"k'", kp}});
}

}  // namespace

std::optional<int> MappingTrace::index(std::string_view name) const {
  for (const auto& [key, value] : indices) {
    if (key == name) return value;
  }
  return std::nullopt;
}

ClassLabel target_class_of(ClassLabel domain) {
  switch (domain) {
    case ClassLabel::kQ1: return ClassLabel::kP1;
    case ClassLabel::kQ2: return ClassLabel::kP2;
    case ClassLabel::kQ3: return ClassLabel::kP3;
    case ClassLabel::kQ4: return ClassLabel::kP4;
    case ClassLabel::kQ5: return ClassLabel::kP5;
    case ClassLabel::kQ6: return ClassLabel::kP6;
    case ClassLabel::kQbar1: return ClassLabel::kPbar1;
    case ClassLabel::kQbar2: return ClassLabel::kPbar2;
    case ClassLabel::kQbar3: return ClassLabel::kPbar3;
    case ClassLabel::kQbar4: return ClassLabel::kP7;
    case ClassLabel::kQbar5: return ClassLabel::kP8;
    default: break;
  }
  throw std::invalid_argument("not a domain class: " + std::string(to_string(domain)));
}

MappingTrace inject_q1(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQ1);
  return forward_trace(ClassLabel::kQ1, s, s);
}

MappingTrace inject_q2(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQ2);
  const int sl = len(s.alpha), t = len(s.beta);
  Row gamma;
  gamma.range(s.alpha, 1, sl, 1).repeat(1, t - sl);
  Row delta;
  delta.range(s.beta, 1, t, -1);
  auto out = make_symbol(s.m, s.j, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(ClassLabel::kQ2, s, std::move(out));
}

MappingTrace invert_q2(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kP2);
  if (s.alpha.empty() && s.beta.empty() && s.j == 1) {
    throw std::invalid_argument("symbol " + s.to_string() + " is the one P2 symbol outside the image");
  }
  const int sp = len(s.alpha), tp = len(s.beta);
  Row alpha;
  alpha.range(s.alpha, 1, sp, -1);
  Row beta;
  beta.range(s.beta, 1, tp, 1).repeat(1, sp - tp);
  return inverse_trace(ClassLabel::kQ2, s, s.m, s.j, parts_of(std::move(alpha)),
                       parts_of(std::move(beta)));
}

MappingTrace inject_q3(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQ3);
  const int sl = len(s.alpha), t = len(s.beta);
  Row gamma;
  gamma.range(s.alpha, 2, sl, 1).repeat(1, t - sl - 1);
  Row delta;
  delta.range(s.beta, 2, t, -1);
  auto out = make_symbol(s.m, s.j + 1, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(ClassLabel::kQ3, s, std::move(out));
}

// alpha = (m+j, gamma_i - 1), beta = (j, delta_i + 1, 1^{s'+1-t'}), j = j' - 1.
MappingTrace invert_q3(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kP3);
  const int j = s.j - 1, sp = len(s.alpha), tp = len(s.beta);
  Row alpha;
  alpha.push(s.m + j).range(s.alpha, 1, sp, -1);
  Row beta;
  beta.push(j).range(s.beta, 1, tp, 1).repeat(1, sp + 1 - tp);
  return inverse_trace(ClassLabel::kQ3, s, s.m, j, parts_of(std::move(alpha)),
                       parts_of(std::move(beta)));
}

// k is the least index in [1, s] with alpha_{k+1} <= beta_k - 1 and
// alpha_k >= beta_{k+1} - 1.
MappingTrace inject_q4(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQ4);
  const Partition& a = s.alpha;
  const Partition& b = s.beta;
  const int sl = len(a), t = len(b);
  int k = 0;
  for (int c = 1; c <= sl; ++c) {
    if (at(a, c + 1) <= at(b, c) - 1 && at(a, c) >= at(b, c + 1) - 1) {
      k = c;
      break;
    }
  }
  if (k == 0) throw std::logic_error("no admissible k for " + s.to_string());
  Row gamma;
  gamma.push(at(a, 1) - 1).range(a, 2, k, 0).range(b, k + 1, t, -1);
  Row delta;
  delta.range(b, 1, k, 0).range(a, k + 1, sl, 1).push(2).repeat(1, t - sl - 1);
  auto out = make_symbol(s.m, s.j, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(ClassLabel::kQ4, s, std::move(out), {{"k", k}});
}

// k' is the least index in [1, l(gamma)-1] with delta_{k'} - 1 >= gamma_{k'+1}
// and gamma_{k'} >= delta_{k'+1} - 1 >= 1; s' is the last position of a 2 in delta.
MappingTrace invert_q4(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kP4);
  const Partition& g = s.alpha;
  const Partition& d = s.beta;
  const int tp = len(g);
  int kp = 0;
  for (int c = 1; c <= tp - 1; ++c) {
    if (at(d, c) - 1 >= at(g, c + 1) && at(g, c) >= at(d, c + 1) - 1 && at(d, c + 1) - 1 >= 1) {
      kp = c;
      break;
    }
  }
  int sp = 0;
  for (int c = len(d); c >= 1; --c) {
    if (at(d, c) == 2) {
      sp = c;
      break;
    }
  }
  if (kp == 0 || sp == 0) throw std::invalid_argument("no admissible k' for " + s.to_string());
  Row alpha;
  alpha.push(at(g, 1) + 1).range(g, 2, kp, 0).range(d, kp + 1, sp - 1, -1);
  Row beta;
  beta.range(d, 1, kp, 0).range(g, kp + 1, tp, 1);
  std::vector<int> alpha_parts, beta_parts;
  try {
    alpha_parts = parts_of(std::move(alpha));
    beta_parts = parts_of(std::move(beta));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not an image: " + e.what());
  }
  return inverse_trace(ClassLabel::kQ4, s, s.m, s.j, std::move(alpha_parts),
                       std::move(beta_parts), {{"k'", kp}});
}

MappingTrace inject_q5(const DurfeeSymbol& s) {
  if (s.m == 0) throw std::invalid_argument("the Q5 map is not valid for m = 0");
  require_class(s, ClassLabel::kQ5);
  return two_full_columns_forward(ClassLabel::kQ5, s);
}

MappingTrace invert_q5(const DurfeeSymbol& s) {
  if (s.m == 0) throw std::invalid_argument("the Q5 map is not valid for m = 0");
  require_target(s, ClassLabel::kP5);
  return two_full_columns_inverse(ClassLabel::kQ5, s);
}

MappingTrace inject_q6(const DurfeeSymbol& s) {
  if (s.m == 0) throw std::invalid_argument("the Q6 map is not valid for m = 0");
  require_class(s, ClassLabel::kQ6);
  return three_full_columns_forward(ClassLabel::kQ6, s);
}

MappingTrace invert_q6(const DurfeeSymbol& s) {
  if (s.m == 0) throw std::invalid_argument("the Q6 map is not valid for m = 0");
  require_target(s, ClassLabel::kP6);
  return three_full_columns_inverse(ClassLabel::kQ6, s);
}

MappingTrace inject_qbar1(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQbar1);
  return two_full_columns_forward(ClassLabel::kQbar1, s);
}

MappingTrace invert_qbar1(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kPbar1);
  return two_full_columns_inverse(ClassLabel::kQbar1, s);
}

MappingTrace inject_qbar2(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQbar2);
  return three_full_columns_forward(ClassLabel::kQbar2, s);
}

MappingTrace invert_qbar2(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kPbar2);
  return three_full_columns_inverse(ClassLabel::kQbar2, s);
}

// gamma = (beta_2 - 1, ..., beta_t - 1), delta = (alpha_2 + 1, ..., alpha_{s-1} + 1, 1^{t-s+1}).
MappingTrace inject_qbar3(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQbar3);
  const int sl = len(s.alpha), t = len(s.beta);
  Row gamma;
  gamma.range(s.beta, 2, t, -1);
  Row delta;
  delta.range(s.alpha, 2, sl - 1, 1).repeat(1, t - sl + 1);
  auto out = make_symbol(0, s.j + 1, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(ClassLabel::kQbar3, s, std::move(out));
}

// h' is the largest index with delta_{h'} > 1.
MappingTrace invert_qbar3(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kPbar3);
  const Partition& g = s.alpha;
  const Partition& d = s.beta;
  int hp = 0;
  for (int c = len(d); c >= 1; --c) {
    if (at(d, c) > 1) {
      hp = c;
      break;
    }
  }
  Row alpha;
  alpha.push(s.j - 1).range(d, 1, hp, -1).push(1);
  Row beta;
  beta.push(s.j - 1).range(g, 1, len(g), 1);
  std::vector<int> alpha_parts, beta_parts;
  try {
    alpha_parts = parts_of(std::move(alpha));
    beta_parts = parts_of(std::move(beta));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not an image: " + e.what());
  }
  return inverse_trace(ClassLabel::kQbar3, s, 0, s.j - 1, std::move(alpha_parts),
                       std::move(beta_parts), {{"h'", hp}});
}

// gamma = (alpha_2, beta_3 - 1, ..., beta_{t-1} - 1),
// delta = (beta_2 + 1, alpha_3 + 1, ..., alpha_s + 1, 1^{t-s-1}).
MappingTrace inject_qbar4(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQbar4);
  const int sl = len(s.alpha), t = len(s.beta);
  Row gamma;
  gamma.push(at(s.alpha, 2)).range(s.beta, 3, t - 1, -1);
  Row delta;
  delta.push(at(s.beta, 2) + 1).range(s.alpha, 3, sl, 1).repeat(1, t - sl - 1);
  auto out = make_symbol(0, s.j + 1, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(ClassLabel::kQbar4, s, std::move(out));
}

// alpha = (j, gamma_1, delta_i - 1 for the parts delta_i >= 3, i >= 2),
// beta = (j, delta_1 - 1, gamma_2 + 1, ..., gamma_{t'} + 1, 2), j = j' - 1.
MappingTrace invert_qbar4(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kP7);
  const Partition& g = s.alpha;
  const Partition& d = s.beta;
  const int j = s.j - 1;
  int big = 0;
  for (int c = 2; c <= len(d); ++c) {
    if (at(d, c) > 1) big = c - 1;
  }
  Row alpha;
  alpha.push(j).push(at(g, 1)).range(d, 2, big + 1, -1);
  Row beta;
  beta.push(j).push(at(d, 1) - 1).range(g, 2, len(g), 1).push(2);
  return inverse_trace(ClassLabel::kQbar4, s, 0, j, parts_of(std::move(alpha)),
                       parts_of(std::move(beta)));
}

// k is the largest index with alpha_k = j, h the least index with beta_h = 2.
MappingTrace inject_qbar5(const DurfeeSymbol& s) {
  require_class(s, ClassLabel::kQbar5);
  const Partition& a = s.alpha;
  const Partition& b = s.beta;
  const int j = s.j, sl = len(a), t = len(b);
  int k = 0;
  while (k < sl && at(a, k + 1) == j) ++k;
  int h = 1;
  while (h <= t && at(b, h) != 2) ++h;
  if (k < 2 || h > t) throw std::logic_error("no admissible (k, h) for " + s.to_string());
  Row gamma;
  gamma.range(a, 1, k, -1).range(b, 2, h - 1, -1).push(at(b, h)).repeat(1, t - h);
  Row delta;
  delta.push(at(b, 1)).range(a, k + 1, sl, 1).repeat(1, 2 * k - 2 + t - sl);
  auto out = make_symbol(0, j, std::move(gamma).build(), std::move(delta).build());
  return forward_trace(ClassLabel::kQbar5, s, std::move(out), {{"k", k}, {"h", h}});
}

// k' = #{gamma_i = j' - 1}, h' = last position of a 2 in gamma, r' = #{delta_i = 1}.
// j' >= 4 and j' = 3 are reconstructed differently.
MappingTrace invert_qbar5(const DurfeeSymbol& s) {
  require_target(s, ClassLabel::kP8);
  const Partition& g = s.alpha;
  const Partition& d = s.beta;
  const int jp = s.j, tp = len(g);
  const int kp = g.multiplicity(jp - 1);
  const int rp = d.multiplicity(1);
  int hp = 0;
  for (int c = tp; c >= 1; --c) {
    if (at(g, c) == 2) {
      hp = c;
      break;
    }
  }
  std::vector<std::pair<std::string, int>> indices{{"k'", kp}, {"h'", hp}, {"r'", rp}};
  if (hp == 0 || jp < 3) throw std::invalid_argument("symbol " + s.to_string() + " is not an image of Qbar5");
  Row alpha;
  Row beta;
  if (jp >= 4) {
    alpha.range(g, 1, kp, 1).range(d, 2, len(d), -1);
    beta.push(at(d, 1)).range(g, kp + 1, hp - 1, 1).push(at(g, hp)).range(g, hp + 1, tp, 1);
  } else {
    if (tp - rp - 1 < 0 || tp - kp + 1 < 0) {
      throw std::invalid_argument("symbol " + s.to_string() + " is not an image of Qbar5");
    }
    alpha.repeat(3, kp - 1).repeat(2, tp - rp - 1);
    beta.push(3).repeat(2, tp - kp + 1);
  }
  std::vector<int> alpha_parts, beta_parts;
  try {
    alpha_parts = parts_of(std::move(alpha));
    beta_parts = parts_of(std::move(beta));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("symbol " + s.to_string() + " is not an image: " + e.what());
  }
  return inverse_trace(ClassLabel::kQbar5, s, 0, jp, std::move(alpha_parts),
                       std::move(beta_parts), std::move(indices));
}

MappingTrace inject_class(ClassLabel domain, const DurfeeSymbol& s) {
  switch (domain) {
    case ClassLabel::kQ1: return inject_q1(s);
    case ClassLabel::kQ2: return inject_q2(s);
    case ClassLabel::kQ3: return inject_q3(s);
    case ClassLabel::kQ4: return inject_q4(s);
    case ClassLabel::kQ5: return inject_q5(s);
    case ClassLabel::kQ6: return inject_q6(s);
    case ClassLabel::kQbar1: return inject_qbar1(s);
    case ClassLabel::kQbar2: return inject_qbar2(s);
    case ClassLabel::kQbar3: return inject_qbar3(s);
    case ClassLabel::kQbar4: return inject_qbar4(s);
    case ClassLabel::kQbar5: return inject_qbar5(s);
    default: break;
  }
  throw std::invalid_argument("not a domain class: " + std::string(to_string(domain)));
}

MappingTrace invert_class(ClassLabel domain, const DurfeeSymbol& image) {
  switch (domain) {
    case ClassLabel::kQ1: {
      require_target(image, ClassLabel::kP1);
      return inverse_trace(ClassLabel::kQ1, image, image.m, image.j,
                           {image.alpha.parts().begin(), image.alpha.parts().end()},
                           {image.beta.parts().begin(), image.beta.parts().end()});
    }
    case ClassLabel::kQ2: return invert_q2(image);
    case ClassLabel::kQ3: return invert_q3(image);
    case ClassLabel::kQ4: return invert_q4(image);
    case ClassLabel::kQ5: return invert_q5(image);
    case ClassLabel::kQ6: return invert_q6(image);
    case ClassLabel::kQbar1: return invert_qbar1(image);
    case ClassLabel::kQbar2: return invert_qbar2(image);
    case ClassLabel::kQbar3: return invert_qbar3(image);
    case ClassLabel::kQbar4: return invert_qbar4(image);
    case ClassLabel::kQbar5: return invert_qbar5(image);
    default: break;
  }
  throw std::invalid_argument("not a domain class: " + std::string(to_string(domain)));
}

MappingTrace inject(const DurfeeSymbol& s) { return inject_class(classify_Q(s), s); }

}  // namespace sptcrank
