#include "coxamida/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "parse_util.hpp"

namespace coxamida {

CoxeterPath::CoxeterPath(int degree, std::vector<int> signs)
    : degree_(degree), signs_(std::move(signs)) {
  if (degree_ < 3) throw std::invalid_argument("Coxeter path degree must be >= 3");
  if (static_cast<int>(signs_.size()) != degree_ - 2)
    throw std::invalid_argument("Coxeter path needs exactly n-2 signs");
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("Coxeter path signs must be +1 or -1");
}

bool CoxeterPath::operator<(const CoxeterPath& other) const {
  return std::tie(degree_, signs_) < std::tie(other.degree_, other.signs_);
}

CoxeterPath path_from_word(const GeneratorWord& w) {
  if (!is_coxeter_word(w))
    throw std::invalid_argument("path_from_word needs a Coxeter word (distinct letters 1..n-1)");
  const int n = w.degree();
  std::vector<int> position(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < static_cast<int>(w.size()); ++j)
    position[static_cast<std::size_t>(w.letters()[static_cast<std::size_t>(j)])] = j;
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(n) - 2);
  for (int i = 2; i <= n - 1; ++i)
    signs.push_back(position[static_cast<std::size_t>(i)] < position[static_cast<std::size_t>(i) - 1]
                        ? 1
                        : -1);
  return CoxeterPath(n, std::move(signs));
}

GeneratorWord word_from_path(const CoxeterPath& p) {
  std::deque<int> letters{1};
  for (int i = 2; i <= p.degree() - 1; ++i) {
    if (p.sign(i) > 0)
      letters.push_front(i);
    else
      letters.push_back(i);
  }
  return GeneratorWord(p.degree(), std::vector<int>(letters.begin(), letters.end()));
}

std::vector<CoxeterPath> enumerate_paths(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_paths needs n >= 3");
  const std::size_t count = std::size_t{1} << (n - 2);
  std::vector<CoxeterPath> paths;
  paths.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<int> signs(static_cast<std::size_t>(n) - 2);
    for (int bit = 0; bit < n - 2; ++bit)
      signs[static_cast<std::size_t>(bit)] = (code >> bit) & 1 ? 1 : -1;
    paths.emplace_back(n, std::move(signs));
  }
  return paths;
}

int height(const CoxeterPath& p) {
  int sum = 0;
  for (int s : p.signs()) sum += s;
  return sum;
}

CyclicPresentation stanza_decomposition(const CoxeterPath& p) {
  CyclicPresentation result;
  result.stanza_starts.push_back(1);
  for (int i = 2; i <= p.degree() - 1; ++i)
    if (p.sign(i) < 0) result.stanza_starts.push_back(i);
  result.costanza_starts.push_back(p.degree());
  for (int i = p.degree() - 1; i >= 2; --i)
    if (p.sign(i) > 0) result.costanza_starts.push_back(i);
  return result;
}

Permutation cyclic_permutation(const CoxeterPath& p) {
  const CyclicPresentation cycle = stanza_decomposition(p);
  std::vector<int> order = cycle.stanza_starts;
  order.insert(order.end(), cycle.costanza_starts.begin(), cycle.costanza_starts.end());
  std::vector<int> images(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 0; k < order.size(); ++k)
    images[static_cast<std::size_t>(order[k]) - 1] = order[(k + 1) % order.size()];
  return Permutation(std::move(images));
}

bool is_coxeter(const Permutation& a) {
  const int n = a.degree();
  if (inversion_number(a) != n - 1) return false;
  const CycleType type = cycle_type(a);
  return type.parts.size() == 1 && type.parts[0] == n;
}

void for_each_reduced_word(const CoxeterPath& p,
                           const std::function<bool(const GeneratorWord&)>& visit) {
  const int n = p.degree();
  const int letters = n - 1;
  std::vector<char> placed(static_cast<std::size_t>(letters) + 1, 0);

  // eps_i = + forces i before i-1; eps_i = - forces i-1 before i. A letter
  // may wait on both of its neighbours.
  auto ready = [&](int c) {
    if (c >= 2 && p.sign(c) < 0 && !placed[static_cast<std::size_t>(c) - 1]) return false;
    if (c <= letters - 1 && p.sign(c + 1) > 0 && !placed[static_cast<std::size_t>(c) + 1])
      return false;
    return true;
  };

  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(letters));
  bool keep_going = true;

  std::function<void()> extend = [&] {
    if (!keep_going) return;
    if (static_cast<int>(word.size()) == letters) {
      keep_going = visit(GeneratorWord(n, word));
      return;
    }
    for (int c = 1; c <= letters && keep_going; ++c) {
      if (placed[static_cast<std::size_t>(c)] || !ready(c)) continue;
      placed[static_cast<std::size_t>(c)] = 1;
      word.push_back(c);
      extend();
      word.pop_back();
      placed[static_cast<std::size_t>(c)] = 0;
    }
  };
  extend();
}

std::vector<GeneratorWord> reduced_words(const CoxeterPath& p) {
  std::vector<GeneratorWord> words;
  for_each_reduced_word(p, [&](const GeneratorWord& w) {
    words.push_back(w);
    return true;
  });
  return words;
}

std::string to_csv(const CoxeterPath& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.signs().size(); ++i) {
    if (i > 0) out << ',';
    out << (p.signs()[i] > 0 ? '+' : '-');
  }
  return out.str();
}

CoxeterPath parse_path(int degree, const std::string& text) {
  std::vector<int> signs;
  for (const std::string& token : detail::split_csv(text)) {
    std::string trimmed;
    for (char ch : token)
      if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed == "+")
      signs.push_back(1);
    else if (trimmed == "-")
      signs.push_back(-1);
    else
      throw std::invalid_argument("Coxeter path: expected '+' or '-', got '" + token + "'");
  }
  return CoxeterPath(degree, std::move(signs));
}

}  // namespace coxamida
