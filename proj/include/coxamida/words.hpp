#pragma once

#include <set>
#include <string>
#include <vector>

#include "coxamida/perm.hpp"

namespace coxamida {

/// Word in the adjacent-transposition generators s_1..s_{n-1} of the
/// symmetric group of the given degree. Letters are 1-based generator
/// indices, may repeat, and may be empty. The ambient degree travels with
/// the word: the same letter sequence in a different degree is a
/// different value.
class GeneratorWord {
public:
  GeneratorWord(int degree, std::vector<int> letters);

  int degree() const { return degree_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  bool operator==(const GeneratorWord& other) const = default;
  bool operator<(const GeneratorWord& other) const;

private:
  int degree_;
  std::vector<int> letters_;
};

/// Product of the transpositions (letter, letter+1), rightmost letter
/// applied first.
Permutation evaluate(const GeneratorWord& w);

/// True iff the word length equals the Coxeter length of its evaluation.
bool is_reduced(const GeneratorWord& w);

/// Distinct letters occurring in w.
std::set<int> generator_support(const GeneratorWord& w);

bool has_distinct_letters(const GeneratorWord& w);

/// A Coxeter word uses each of the n-1 generators exactly once.
bool is_coxeter_word(const GeneratorWord& w);

/// Comma-separated letter indices, e.g. "1,3,2,4".
std::string to_csv(const GeneratorWord& w);
GeneratorWord parse_word(int degree, const std::string& text);

}  // namespace coxamida
