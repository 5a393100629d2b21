#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxamida/perm.hpp"
#include "coxamida/words.hpp"

namespace coxamida {

/// Sign sequence eps_2..eps_{n-1} of a Coxeter element: eps_i = +1 iff the
/// rung of generator i sits above the rung of generator i-1 in the
/// standard diagram (equivalently, letter i precedes letter i-1 in any
/// word of the element). The sequence is a complete invariant, so it
/// serves as the canonical identity of a Coxeter element.
class CoxeterPath {
public:
  CoxeterPath(int degree, std::vector<int> signs);

  int degree() const { return degree_; }
  const std::vector<int>& signs() const { return signs_; }

  /// eps_i for i in 2..degree-1.
  int sign(int i) const { return signs_[static_cast<std::size_t>(i) - 2]; }

  bool operator==(const CoxeterPath& other) const = default;
  bool operator<(const CoxeterPath& other) const;

private:
  int degree_;
  std::vector<int> signs_;
};

/// Starting columns of the stanzas (ascending staircases running up-right)
/// and co-stanzas (up-left) of the standard diagram; together they spell
/// the cycle of the Coxeter element.
struct CyclicPresentation {
  std::vector<int> stanza_starts;    // p_1 = 1 < p_2 < ... < p_s
  std::vector<int> costanza_starts;  // q_1 = n > q_2 > ... > q_t

  bool operator==(const CyclicPresentation& other) const = default;
};

CoxeterPath path_from_word(const GeneratorWord& w);

/// The canonical word of a path: start from s_1 and multiply s_2, s_3, ...
/// from the left on a + sign and from the right on a - sign.
GeneratorWord word_from_path(const CoxeterPath& p);

/// All 2^{n-2} sign sequences in binary counting order (- = 0, + = 1,
/// eps_2 least significant).
std::vector<CoxeterPath> enumerate_paths(int n);

/// Sum of the signs.
int height(const CoxeterPath& p);

/// stanza starts = {1} + columns with -, co-stanza starts = {n} + columns
/// with +, giving t - s = height.
CyclicPresentation stanza_decomposition(const CoxeterPath& p);

/// The n-cycle (p_1,...,p_s,q_1,...,q_t) named by the stanza decomposition.
Permutation cyclic_permutation(const CoxeterPath& p);

/// A permutation is a Coxeter element iff its inversion number is n-1 and
/// its cycle type is (n).
bool is_coxeter(const Permutation& a);

/// All reduced words of the element with distinct letters (the commutation
/// class), i.e. the linear extensions of the standard diagram's rung
/// order, in lexicographic order.
std::vector<GeneratorWord> reduced_words(const CoxeterPath& p);

/// Visit the linear extensions in lexicographic order; the visitor
/// returns false to stop early.
void for_each_reduced_word(const CoxeterPath& p,
                           const std::function<bool(const GeneratorWord&)>& visit);

/// Comma-separated ASCII signs, e.g. "-,+,-".
std::string to_csv(const CoxeterPath& p);
CoxeterPath parse_path(int degree, const std::string& text);

}  // namespace coxamida
