#include "coxamida/longest.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "coxamida/coxeter.hpp"
#include "coxamida/perm.hpp"
#include "coxamida/words.hpp"

using namespace coxamida;

TEST_CASE("extension kind tags") {
  CHECK(to_string(ExtensionKind::OuterTop) == "outer-top");
  CHECK(to_string(ExtensionKind::LeftBottomRightTop) == "left-bottom");
  CHECK(extension_kind_from_string("left-top") == ExtensionKind::LeftTopRightBottom);
  CHECK_THROWS_AS(extension_kind_from_string("sideways"), std::invalid_argument);
}

TEST_CASE("even case: the paper's S4 instances") {
  CHECK(even_affords_longest(path_from_word(GeneratorWord(4, {1, 3, 2}))));
  CHECK_FALSE(even_affords_longest(path_from_word(GeneratorWord(4, {1, 2, 3}))));
  CHECK_THROWS_AS(even_affords_longest(CoxeterPath(5, {-1, 1, -1})), std::invalid_argument);
}

TEST_CASE("even case counts 2^{m-1}") {
  for (int n = 4; n <= 10; n += 2) {
    int count = 0;
    for (const CoxeterPath& p : enumerate_paths(n))
      if (even_affords_longest(p)) ++count;
    CHECK(count == 1 << (n / 2 - 1));
  }
}

TEST_CASE("power test, sign criterion and paranoid mode agree") {
  for (int n = 4; n <= 10; n += 2)
    for (const CoxeterPath& p : enumerate_paths(n)) {
      const bool by_power = even_affords_longest(p);
      CHECK(by_power == has_symmetric_signs(p));
      CHECK(by_power == even_affords_longest(p, CheckMode::Paranoid));
    }
}

TEST_CASE("extend follows the outer sign rule") {
  CHECK(extend(CoxeterPath(3, {1}), ExtensionKind::LeftBottomRightTop) ==
        CoxeterPath(5, {1, 1, 1}));
  CHECK(height(extend(CoxeterPath(3, {1}), ExtensionKind::LeftBottomRightTop)) == 3);

  // The paper's S7 example: s0 (s4 s3 s2 s1) s5, normalized to 1,5,4,3,2,6.
  const CoxeterPath s7 = path_from_word(GeneratorWord(7, {1, 5, 4, 3, 2, 6}));
  CHECK(s7 == extend(CoxeterPath(5, {1, 1, 1}), ExtensionKind::LeftTopRightBottom));
  CHECK(s7 == CoxeterPath(7, {-1, 1, 1, 1, -1}));
  CHECK(height(s7) == 1);
}

TEST_CASE("extension height deltas, exhaustively for n <= 8") {
  for (int n = 3; n <= 8; ++n)
    for (const CoxeterPath& p : enumerate_paths(n)) {
      const int eta = height(p);
      CHECK(height(extend(p, ExtensionKind::OuterTop)) == eta);
      CHECK(height(extend(p, ExtensionKind::OuterBottom)) == eta);
      CHECK(height(extend(p, ExtensionKind::LeftTopRightBottom)) == eta - 2);
      CHECK(height(extend(p, ExtensionKind::LeftBottomRightTop)) == eta + 2);
    }
}

TEST_CASE("peel inverts extend") {
  const auto [inner, kind] = peel(CoxeterPath(7, {-1, 1, 1, 1, -1}));
  CHECK(inner == CoxeterPath(5, {1, 1, 1}));
  CHECK(kind == ExtensionKind::LeftTopRightBottom);
  CHECK_THROWS_AS(peel(CoxeterPath(4, {-1, 1})), std::invalid_argument);

  for (int n = 3; n <= 9; ++n)
    for (const CoxeterPath& p : enumerate_paths(n))
      for (ExtensionKind k : kAllExtensionKinds) {
        const auto peeled = peel(extend(p, k));
        CHECK(peeled.first == p);
        CHECK(peeled.second == k);
      }
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(CoxeterPath(3, {1})));
  CHECK(is_admissible(CoxeterPath(3, {-1})));
  CHECK_FALSE(is_admissible(CoxeterPath(5, {1, 1, 1})));
  // Height 1 does not suffice: the S7 example peels to height 3.
  CHECK_FALSE(is_admissible(CoxeterPath(7, {-1, 1, 1, 1, -1})));
  CHECK_THROWS_AS(is_admissible(CoxeterPath(4, {-1, 1})), std::invalid_argument);
}

TEST_CASE("admissible counts 2 * 3^{m-2}") {
  CHECK(enumerate_admissible(3).size() == 2);
  CHECK(enumerate_admissible(5).size() == 6);
  CHECK(enumerate_admissible(7).size() == 18);
  CHECK(enumerate_admissible(9).size() == 54);
  CHECK_THROWS_AS(enumerate_admissible(6), std::invalid_argument);

  // In S5 exactly the two height-3 paths drop out.
  std::set<CoxeterPath> s5;
  for (const CoxeterPath& p : enumerate_admissible(5)) s5.insert(p);
  CHECK(s5.count(CoxeterPath(5, {1, 1, 1})) == 0);
  CHECK(s5.count(CoxeterPath(5, {-1, -1, -1})) == 0);
  CHECK(s5.size() == 6);
}

TEST_CASE("bottom-up generation matches peeling, n <= 9") {
  for (int n = 5; n <= 9; n += 2) {
    std::set<CoxeterPath> generated;
    std::vector<CoxeterPath> frontier = enumerate_paths(3);
    for (int d = 3; d < n; d += 2) {
      std::vector<CoxeterPath> next;
      for (const CoxeterPath& p : frontier)
        for (ExtensionKind k : kAllExtensionKinds) {
          CoxeterPath q = extend(p, k);
          if (std::abs(height(q)) <= 1) next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    generated.insert(frontier.begin(), frontier.end());
    for (const CoxeterPath& p : enumerate_paths(n))
      CHECK(is_admissible(p) == (generated.count(p) > 0));
  }
}

TEST_CASE("half power: the paper's S5 instances") {
  const CoxeterPath good = path_from_word(GeneratorWord(5, {1, 3, 2, 4}));
  CHECK(half_power(good, GeneratorWord(5, {2, 4})) == longest_element(5));

  const CoxeterPath bad = path_from_word(GeneratorWord(5, {1, 2, 3, 4}));
  CHECK(half_power(bad, GeneratorWord(5, {3, 4})) != longest_element(5));

  // Different halves of different expressions need not agree.
  CHECK(half_power(good, GeneratorWord(5, {3, 4})) != half_power(good, GeneratorWord(5, {1, 2})));

  CHECK_THROWS_AS(half_power(good, GeneratorWord(5, {2})), std::invalid_argument);
  CHECK_THROWS_AS(half_power(good, GeneratorWord(5, {2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(half_power(CoxeterPath(4, {-1, 1}), GeneratorWord(4, {2})),
                  std::invalid_argument);
}

TEST_CASE("find_half_power_split on the paper's examples") {
  const auto found = find_half_power_split(CoxeterPath(5, {-1, 1, -1}));
  REQUIRE(found.has_value());
  CHECK(evaluate(found->w1) == evaluate(GeneratorWord(5, {1, 3})));
  CHECK(evaluate(found->w2) == evaluate(GeneratorWord(5, {2, 4})));

  CHECK_FALSE(find_half_power_split(CoxeterPath(5, {-1, -1, -1})).has_value());
  CHECK_FALSE(find_half_power_split(path_from_word(GeneratorWord(7, {1, 5, 4, 3, 2, 6}))).has_value());
  CHECK_THROWS_AS(find_half_power_split(CoxeterPath(4, {-1, 1})), std::invalid_argument);

  // S3 base case: w1 and w2 are single generators.
  const auto base = find_half_power_split(CoxeterPath(3, {1}));
  REQUIRE(base.has_value());
  CHECK(base->w1 == GeneratorWord(3, {2}));
  CHECK(base->w2 == GeneratorWord(3, {1}));
}

TEST_CASE("split exists exactly on admissible paths, n <= 7") {
  for (int n = 3; n <= 7; n += 2)
    for (const CoxeterPath& p : enumerate_paths(n)) {
      const auto split = find_half_power_split(p);
      CHECK(split.has_value() == is_admissible(p));
      if (split) {
        const int half = (n - 1) / 2;
        // The two halves concatenate to a reduced word of the element.
        std::vector<int> joined = split->w1.letters();
        joined.insert(joined.end(), split->w2.letters().begin(), split->w2.letters().end());
        const GeneratorWord whole(n, joined);
        CHECK(is_coxeter_word(whole));
        CHECK(evaluate(whole) == cyclic_permutation(p));
        CHECK(half_power(p, split->w2) == longest_element(n));
        // w2 is forced at the permutation level.
        const Permutation forced =
            compose(longest_element(n), inverse(power(cyclic_permutation(p), half)));
        CHECK(evaluate(split->w2) == forced);
      }
    }
}

TEST_CASE("lemma 4.2 base instance from the paper's proof") {
  // C = s2 s1 in S3, OuterTop extension; prescribed word s0 s1 E^2 becomes
  // 1,2 against E = 1,4,3,2 in S5.
  const Permutation extended = evaluate(GeneratorWord(5, {1, 4, 3, 2}));
  const Permutation prescribed = evaluate(GeneratorWord(5, {1, 2}));
  CHECK(compose(prescribed, power(extended, 2)) == longest_element(5));
}

TEST_CASE("length gap bound") {
  CHECK(inversion_number(power(cyclic_permutation(CoxeterPath(5, {-1, 1, -1})), 2)) == 8);
  CHECK(length_gap_bound(CoxeterPath(5, {-1, 1, -1})));
  CHECK(inversion_number(power(cyclic_permutation(CoxeterPath(5, {1, 1, 1})), 2)) < 8);
  CHECK(length_gap_bound(CoxeterPath(5, {1, 1, 1})));
  CHECK_THROWS_AS(length_gap_bound(CoxeterPath(4, {-1, 1})), std::invalid_argument);

  for (int n = 3; n <= 9; n += 2)
    for (const CoxeterPath& p : enumerate_paths(n)) CHECK(length_gap_bound(p));
}
