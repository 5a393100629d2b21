#include "coxamida/words.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

#include "parse_util.hpp"

namespace coxamida {

GeneratorWord::GeneratorWord(int degree, std::vector<int> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree_ < 1) throw std::invalid_argument("word degree must be >= 1");
  for (int letter : letters_)
    if (letter < 1 || letter > degree_ - 1)
      throw std::invalid_argument("word letter out of range 1..n-1");
}

bool GeneratorWord::operator<(const GeneratorWord& other) const {
  return std::tie(degree_, letters_) < std::tie(other.degree_, other.letters_);
}

Permutation evaluate(const GeneratorWord& w) {
  const int n = w.degree();
  const auto& letters = w.letters();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int x = i;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (x == *it)
        x = *it + 1;
      else if (x == *it + 1)
        x = *it;
    }
    images[static_cast<std::size_t>(i) - 1] = x;
  }
  return Permutation(std::move(images));
}

bool is_reduced(const GeneratorWord& w) {
  return static_cast<int>(w.size()) == inversion_number(evaluate(w));
}

std::set<int> generator_support(const GeneratorWord& w) {
  return std::set<int>(w.letters().begin(), w.letters().end());
}

bool has_distinct_letters(const GeneratorWord& w) {
  return generator_support(w).size() == w.size();
}

bool is_coxeter_word(const GeneratorWord& w) {
  return static_cast<int>(w.size()) == w.degree() - 1 && has_distinct_letters(w);
}

std::string to_csv(const GeneratorWord& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out << ',';
    out << w.letters()[i];
  }
  return out.str();
}

GeneratorWord parse_word(int degree, const std::string& text) {
  if (text.empty()) return GeneratorWord(degree, {});
  return GeneratorWord(degree, detail::parse_csv_ints(text, "generator word"));
}

}  // namespace coxamida
