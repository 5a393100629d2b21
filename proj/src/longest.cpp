#include "coxamida/longest.hpp"

#include <cstdlib>
#include <stdexcept>

namespace coxamida {

std::string to_string(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::OuterTop: return "outer-top";
    case ExtensionKind::OuterBottom: return "outer-bottom";
    case ExtensionKind::LeftTopRightBottom: return "left-top";
    case ExtensionKind::LeftBottomRightTop: return "left-bottom";
  }
  throw std::invalid_argument("unknown extension kind");
}

ExtensionKind extension_kind_from_string(const std::string& tag) {
  for (ExtensionKind kind : kAllExtensionKinds)
    if (to_string(kind) == tag) return kind;
  throw std::invalid_argument("unknown extension kind tag: '" + tag + "'");
}

bool has_symmetric_signs(const CoxeterPath& p) {
  const int n = p.degree();
  for (int j = 2; j <= n - 1; ++j)
    if (p.sign(j) != -p.sign(n + 1 - j)) return false;
  return true;
}

bool even_affords_longest(const CoxeterPath& p, CheckMode mode) {
  const int n = p.degree();
  if (n % 2 != 0) throw std::invalid_argument("even_affords_longest needs even n");
  const bool by_power = power(cyclic_permutation(p), n / 2) == longest_element(n);
  if (mode == CheckMode::Paranoid) return by_power && has_symmetric_signs(p);
  return by_power;
}

CoxeterPath extend(const CoxeterPath& p, ExtensionKind kind) {
  // The outer rung placed on top of its inner neighbour reads as a - on
  // the left edge and a + on the right edge.
  int left = 0, right = 0;
  switch (kind) {
    case ExtensionKind::OuterTop: left = -1; right = 1; break;
    case ExtensionKind::OuterBottom: left = 1; right = -1; break;
    case ExtensionKind::LeftTopRightBottom: left = -1; right = -1; break;
    case ExtensionKind::LeftBottomRightTop: left = 1; right = 1; break;
  }
  std::vector<int> signs;
  signs.reserve(p.signs().size() + 2);
  signs.push_back(left);
  signs.insert(signs.end(), p.signs().begin(), p.signs().end());
  signs.push_back(right);
  return CoxeterPath(p.degree() + 2, std::move(signs));
}

std::pair<CoxeterPath, ExtensionKind> peel(const CoxeterPath& p) {
  if (p.degree() < 5) throw std::invalid_argument("peel needs n >= 5");
  std::vector<int> inner(p.signs().begin() + 1, p.signs().end() - 1);
  const int left = p.signs().front();
  const int right = p.signs().back();
  ExtensionKind kind;
  if (left < 0)
    kind = right > 0 ? ExtensionKind::OuterTop : ExtensionKind::LeftTopRightBottom;
  else
    kind = right > 0 ? ExtensionKind::LeftBottomRightTop : ExtensionKind::OuterBottom;
  return {CoxeterPath(p.degree() - 2, std::move(inner)), kind};
}

bool is_admissible(const CoxeterPath& p) {
  if (p.degree() % 2 == 0) throw std::invalid_argument("admissibility is defined for odd n");
  CoxeterPath current = p;
  while (current.degree() > 3) {
    if (std::abs(height(current)) > 1) return false;
    current = peel(current).first;
  }
  return true;
}

std::vector<CoxeterPath> enumerate_admissible(int n) {
  if (n % 2 == 0) throw std::invalid_argument("admissibility is defined for odd n");
  std::vector<CoxeterPath> admissible;
  for (const CoxeterPath& p : enumerate_paths(n))
    if (is_admissible(p)) admissible.push_back(p);
  return admissible;
}

Permutation half_power(const CoxeterPath& p, const GeneratorWord& w2) {
  const int n = p.degree();
  if (n % 2 == 0) throw std::invalid_argument("half_power needs odd n");
  if (w2.degree() != n) throw std::invalid_argument("half_power: w2 degree mismatch");
  const int half = (n - 1) / 2;  // m - 1 for n = 2m - 1
  if (static_cast<int>(w2.size()) != half || !has_distinct_letters(w2))
    throw std::invalid_argument("half_power: w2 needs m-1 distinct letters");
  return compose(evaluate(w2), power(cyclic_permutation(p), half));
}

std::optional<HalfPowerSplit> find_half_power_split(const CoxeterPath& p) {
  const int n = p.degree();
  if (n % 2 == 0) throw std::invalid_argument("find_half_power_split needs odd n");
  const int half = (n - 1) / 2;
  const Permutation element = cyclic_permutation(p);
  const Permutation tail = power(element, half);

  // Any successful w2 must evaluate to w0 tail^{-1}, and a distinct-letter
  // word is always reduced, so the target must have length m-1.
  const Permutation target = compose(longest_element(n), inverse(tail));
  if (inversion_number(target) != half) return std::nullopt;

  std::optional<HalfPowerSplit> found;
  for_each_reduced_word(p, [&](const GeneratorWord& w) {
    std::vector<int> suffix(w.letters().begin() + half, w.letters().end());
    if (evaluate(GeneratorWord(n, suffix)) != target) return true;
    std::vector<int> prefix(w.letters().begin(), w.letters().begin() + half);
    found = HalfPowerSplit{GeneratorWord(n, std::move(prefix)), GeneratorWord(n, std::move(suffix))};
    return false;
  });
  return found;
}

bool length_gap_bound(const CoxeterPath& p) {
  const int n = p.degree();
  if (n % 2 == 0) throw std::invalid_argument("length_gap_bound needs odd n");
  const int half = (n - 1) / 2;
  const int length = inversion_number(power(cyclic_permutation(p), half));
  const int bound = 2 * half * half;
  return is_admissible(p) ? length == bound : length < bound;
}

}  // namespace coxamida
