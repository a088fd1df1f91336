#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sptcrank/injections.hpp"

using namespace sptcrank;

namespace {

struct Golden {
  const char* name;
  DurfeeSymbol input;
  ClassLabel source;
  ClassLabel target;
  DurfeeSymbol output;
  std::vector<std::pair<std::string, int>> indices;
  std::vector<std::pair<std::string, int>> inverse_indices;
};

std::vector<Golden> goldens() {
  return {
      {"Q2 n=31", {2, 3, {4, 2, 2}, {3, 2, 2, 1}}, ClassLabel::kQ2, ClassLabel::kP2,
       {2, 3, {5, 3, 3, 1}, {2, 1, 1}}, {}, {}},
      {"Q3 n=34", {2, 3, {5, 4, 1}, {3, 3, 2, 1}}, ClassLabel::kQ3, ClassLabel::kP3,
       {2, 4, {5, 2}, {2, 1}}, {}, {}},
      {"Q4 n=41", {2, 3, {5, 4, 2, 1}, {3, 3, 2, 2, 2, 2}}, ClassLabel::kQ4, ClassLabel::kP4,
       {2, 3, {4, 4, 1, 1, 1, 1}, {3, 3, 3, 2, 2, 1}}, {{"k", 2}}, {{"k'", 2}}},
      {"Q5 n=34", {1, 3, {4, 4, 2}, {3, 3, 2, 2, 2}}, ClassLabel::kQ5, ClassLabel::kP5,
       {1, 4, {2, 1, 1, 1}, {4, 3, 1, 1}}, {{"k", 4}}, {{"k'", 3}}},
      {"Q6 n=60", {2, 3, {5, 5, 5, 5, 3, 2}, {3, 3, 3, 3, 2, 2, 2, 2}}, ClassLabel::kQ6, ClassLabel::kP6,
       {2, 4, {4, 4, 4, 4, 3, 2, 1}, {4, 4, 2, 1, 1, 1, 1}}, {{"k", 6}}, {{"k'", 5}}},
      {"Qbar3 n=35", {0, 3, {3, 3, 2, 2, 1}, {3, 3, 3, 2, 2, 2}}, ClassLabel::kQbar3, ClassLabel::kPbar3,
       {0, 4, {2, 2, 1, 1, 1}, {4, 3, 3, 1, 1}}, {}, {{"h'", 3}}},
      {"Qbar4 n=40", {0, 3, {3, 3, 3, 2, 2}, {3, 3, 3, 3, 2, 2, 2}}, ClassLabel::kQbar4, ClassLabel::kP7,
       {0, 4, {3, 2, 2, 1, 1}, {4, 4, 3, 3, 1}}, {}, {}},
      // The index h is the least position of a 2 in beta (5 here), and h' the
      // last position of a 2 in gamma (7 here).
      {"Qbar5 n=51", {0, 4, {4, 4, 4, 2, 2}, {4, 3, 3, 3, 2, 2, 2}}, ClassLabel::kQbar5, ClassLabel::kP8,
       {0, 4, {3, 3, 3, 2, 2, 2, 2, 1, 1}, {4, 3, 3, 1, 1, 1, 1, 1, 1}}, {{"k", 3}, {"h", 5}},
       {{"k'", 3}, {"h'", 7}, {"r'", 6}}},
  };
}

}  // namespace

TEST_CASE("worked examples reproduce exactly") {
  for (const Golden& g : goldens()) {
    INFO(g.name);
    CHECK(classify_Q(g.input) == g.source);
    const MappingTrace fwd = inject(g.input);
    CHECK(fwd.output == g.output);
    CHECK(fwd.source_class == g.source);
    REQUIRE(fwd.target_class.has_value());
    CHECK(*fwd.target_class == g.target);
    CHECK(fwd.indices == g.indices);
    CHECK_FALSE(fwd.inverse);
    CHECK(fwd.output.weight() == g.input.weight());

    const MappingTrace back = invert_class(g.source, g.output);
    CHECK(back.output == g.input);
    CHECK(back.inverse);
    CHECK(back.indices == g.inverse_indices);
  }
}

TEST_CASE("worked example weights") {
  const std::vector<int> weights{31, 34, 41, 34, 60, 35, 40, 51};
  const auto gs = goldens();
  for (std::size_t i = 0; i < gs.size(); ++i) CHECK(gs[i].input.weight() == weights[i]);
}

TEST_CASE("trace naming and index lookup") {
  const MappingTrace t = inject(DurfeeSymbol{2, 3, {5, 4, 2, 1}, {3, 3, 2, 2, 2, 2}});
  CHECK(t.map == "Q4->P4");
  CHECK(t.index("k") == 2);
  CHECK_FALSE(t.index("h").has_value());
  const MappingTrace b = invert_qbar5(DurfeeSymbol{0, 4, {3, 3, 3, 2, 2, 2, 2, 1, 1}, {4, 3, 3, 1, 1, 1, 1, 1, 1}});
  CHECK(b.map == "P8->Qbar5");
}

TEST_CASE("class maps reject inputs outside their domain") {
  const DurfeeSymbol q2{2, 3, {4, 2, 2}, {3, 2, 2, 1}};
  CHECK_THROWS_AS(inject_q3(q2), std::invalid_argument);
  CHECK_THROWS_AS(inject_qbar1(q2), std::invalid_argument);
  // The m >= 1 constructions are not used at m = 0.
  CHECK_THROWS_AS(inject_q5(DurfeeSymbol{0, 3, {3, 3, 2}, {3, 3, 3, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(invert_q6(DurfeeSymbol{0, 3, {1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(inject_class(ClassLabel::kP1, q2), std::invalid_argument);
  CHECK_THROWS_AS(target_class_of(ClassLabel::kP3), std::invalid_argument);
}

TEST_CASE("the P2 symbol outside the image is rejected") {
  for (int m = 0; m <= 5; ++m) {
    const DurfeeSymbol lone{m, 1, {}, {}};
    CHECK(classify_P(lone) == ClassLabel::kP2);
    CHECK_THROWS_AS(invert_q2(lone), std::invalid_argument);
  }
}

TEST_CASE("inverses reject symbols that are not images") {
  // Every P-symbol of a target class is either an image or rejected; an
  // accepted one maps back to itself.
  int rejected = 0;
  for (int n = 1; n <= 20; ++n) {
    for (const auto& parts : oracle::partitions(n)) {
      for (int m = 0; m <= 3; ++m) {
        const DurfeeSymbol s = to_symbol(Partition(parts), m);
        if (!in_P_by_shape(s)) continue;
        const ClassLabel c = classify_P(s);
        for (int d = 0; d <= static_cast<int>(ClassLabel::kQbar5); ++d) {
          const auto domain = static_cast<ClassLabel>(d);
          const bool refined = domain >= ClassLabel::kQbar1;
          const bool coarse_only = domain == ClassLabel::kQ5 || domain == ClassLabel::kQ6;
          if ((m == 0 && coarse_only) || (m >= 1 && refined)) continue;
          if (target_class_of(domain) != c) continue;
          try {
            const MappingTrace back = invert_class(domain, s);
            CHECK(inject(back.output).output == s);
          } catch (const std::invalid_argument&) {
            ++rejected;
          }
        }
      }
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("the combined map is an injection into P(-m,n)") {
  for (int m = 0; m <= 6; ++m) {
    for (int n = 1; n <= 22; ++n) {
      std::set<Partition> images;
      std::size_t domain = 0;
      for (const auto& parts : oracle::partitions(n)) {
        if (!oracle::rank_set_contains(parts, m)) continue;
        ++domain;
        const DurfeeSymbol s = to_symbol(Partition(parts), m);
        const MappingTrace t = inject(s);
        const Partition image = from_symbol(t.output);
        INFO(s.to_string() << " -> " << t.output.to_string());
        CHECK(image.weight() == n);
        CHECK((image.empty() || oracle::rank(std::vector<int>(image.parts().begin(), image.parts().end())) >= -m));
        CHECK(t.target_class == target_class_of(t.source_class));
        CHECK(invert_class(t.source_class, t.output).output == s);
        images.insert(image);
      }
      CHECK(images.size() == domain);
    }
  }
}
