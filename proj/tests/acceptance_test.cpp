// Acceptance suite: re-runs every classification claim at its exhaustive
// range and prints one pass/fail line per criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxamida/amida.hpp"
#include "coxamida/cli.hpp"
#include "coxamida/coxeter.hpp"
#include "coxamida/longest.hpp"
#include "coxamida/oracle.hpp"
#include "coxamida/perm.hpp"
#include "coxamida/words.hpp"

using namespace coxamida;

namespace {

bool criterion_line(int index, const std::string& name, bool pass) {
  std::ostringstream out;
  out << "[criterion " << (index < 10 ? "0" : "") << index << "] " << name << ": "
      << (pass ? "PASS" : "FAIL");
  std::cout << out.str() << std::endl;
  return pass;
}

bool all_reports_pass(const std::string& claim, const std::vector<int>& degrees) {
  bool ok = true;
  for (int n : degrees) {
    const VerificationReport report = verify(n, claim);
    if (!report.pass) {
      ok = false;
      std::cout << "  " << claim << " n=" << n << " FAILED";
      for (const std::string& w : report.witnesses) std::cout << " [" << w << "]";
      std::cout << std::endl;
    }
  }
  return ok;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(COXAMIDA_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("criterion 1: Coxeter count, n = 3..12") {
  CHECK(criterion_line(1, "coxeter-count",
                       all_reports_pass("count-coxeter", {3, 4, 5, 6, 7, 8, 9, 10, 11, 12})));
}

TEST_CASE("criterion 2: characterization by inversions and cycle type, n = 3..7") {
  CHECK(criterion_line(2, "characterization",
                       all_reports_pass("prop-characterization", {3, 4, 5, 6, 7})));
}

TEST_CASE("criterion 3: even-case classification and count, n = 4..12") {
  bool ok = all_reports_pass("even-longest", {4, 6, 8, 10, 12});
  ok = all_reports_pass("even-count", {4, 6, 8, 10, 12}) && ok;
  // the paper's S4 instances
  ok = even_affords_longest(path_from_word(GeneratorWord(4, {1, 3, 2}))) && ok;
  ok = !even_affords_longest(path_from_word(GeneratorWord(4, {1, 2, 3}))) && ok;
  CHECK(criterion_line(3, "even-case", ok));
}

TEST_CASE("criterion 4: extension heights, n = 3..10") {
  CHECK(criterion_line(4, "extension-heights",
                       all_reports_pass("extension-heights", {3, 4, 5, 6, 7, 8, 9, 10})));
}

TEST_CASE("criterion 5: admissible counts 2, 6, 18, 54, 162") {
  bool ok = all_reports_pass("admissible-count", {3, 5, 7, 9, 11});
  const std::vector<std::size_t> counts{2, 6, 18, 54, 162};
  const std::vector<int> degrees{3, 5, 7, 9, 11};
  for (std::size_t i = 0; i < degrees.size(); ++i)
    ok = (enumerate_admissible(degrees[i]).size() == counts[i]) && ok;
  CHECK(criterion_line(5, "admissible-count", ok));
}

TEST_CASE("criterion 6: odd-case equivalence, n = 3..11") {
  bool ok = all_reports_pass("odd-longest-iff-admissible", {3, 5, 7, 9, 11});
  // the paper's S5 instances
  const CoxeterPath good = path_from_word(GeneratorWord(5, {1, 3, 2, 4}));
  ok = (half_power(good, GeneratorWord(5, {2, 4})) == longest_element(5)) && ok;
  const CoxeterPath bad = path_from_word(GeneratorWord(5, {1, 2, 3, 4}));
  ok = (half_power(bad, GeneratorWord(5, {3, 4})) != longest_element(5)) && ok;
  ok = !find_half_power_split(bad).has_value() && ok;
  // the S7 non-admissible height-1 example affords no split
  ok = !find_half_power_split(path_from_word(GeneratorWord(7, {1, 5, 4, 3, 2, 6}))).has_value() &&
       ok;
  CHECK(criterion_line(6, "odd-case-equivalence", ok));
}

TEST_CASE("criterion 7: split uniqueness and the forced w2") {
  bool ok = all_reports_pass("split-uniqueness", {3, 5, 7, 9, 11});
  for (int n : {3, 5, 7, 9}) {
    const int half = (n - 1) / 2;
    for (const CoxeterPath& p : enumerate_admissible(n)) {
      const auto split = find_half_power_split(p);
      if (!split) {
        ok = false;
        continue;
      }
      const Permutation forced =
          compose(longest_element(n), inverse(power(cyclic_permutation(p), half)));
      ok = (evaluate(split->w2) == forced) && ok;
    }
  }
  CHECK(criterion_line(7, "split-uniqueness", ok));
}

TEST_CASE("criterion 8: lemma 4.2 instances, n = 3..7") {
  CHECK(criterion_line(8, "lemma42-instances", all_reports_pass("lemma42-cases", {3, 5, 7})));
}

TEST_CASE("criterion 9: length bound, odd n <= 11") {
  CHECK(criterion_line(9, "length-bound", all_reports_pass("length-bound", {3, 5, 7, 9, 11})));
}

TEST_CASE("criterion 10: golden renders") {
  bool ok = true;
  ok = (render_ascii(from_word(GeneratorWord(4, {3, 2, 3, 1}))) + "\n" ==
        read_golden("render_word_3231.txt")) &&
       ok;
  ok = (render_ascii(from_word(GeneratorWord(4, {2}))) + "\n" == read_golden("render_single_rung.txt")) && ok;
  ok = (render_ascii(standard_from_coxeter_word(word_from_path(parse_path(6, "-,-,+,-")))) +
            "\n" ==
        read_golden("render_standard_s6.txt")) &&
       ok;
  ok = (render_ascii(standard_from_coxeter_word(word_from_path(parse_path(9, "+,-,-,+,+,-,+")))) +
            "\n" ==
        read_golden("render_standard_s9.txt")) &&
       ok;
  CHECK(criterion_line(10, "golden-renders", ok));
}
