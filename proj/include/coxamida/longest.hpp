#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "coxamida/coxeter.hpp"
#include "coxamida/perm.hpp"
#include "coxamida/words.hpp"

namespace coxamida {

/// The four ways a Coxeter element of S_n grows into one of S_{n+2} by
/// adjoining the two new outer generators (here relabelled 1 and n+1, the
/// inner generators shifting up by one).
enum class ExtensionKind {
  OuterTop,             // both new generators multiplied from the left
  OuterBottom,          // both from the right
  LeftTopRightBottom,   // left generator from the left, right from the right
  LeftBottomRightTop,   // right generator from the left, left from the right
};

inline constexpr std::array<ExtensionKind, 4> kAllExtensionKinds{
    ExtensionKind::OuterTop, ExtensionKind::OuterBottom,
    ExtensionKind::LeftTopRightBottom, ExtensionKind::LeftBottomRightTop};

/// Text tags: "outer-top", "outer-bottom", "left-top", "left-bottom".
std::string to_string(ExtensionKind kind);
ExtensionKind extension_kind_from_string(const std::string& tag);

/// Factorisation C = w1 w2 of an odd-degree Coxeter element into two
/// distinct-letter halves of length m-1 such that w2 C^{m-1} is the
/// longest element. The evaluation of w2 is unique when a split exists,
/// though several word-level splits may realise it.
struct HalfPowerSplit {
  GeneratorWord w1;
  GeneratorWord w2;
};

enum class CheckMode {
  Power,     // C^{n/2} == w0, the ground truth
  Paranoid,  // conjunction of the power test and the sign-symmetry test
};

/// Whether C^{n/2} is the longest element (n even).
bool even_affords_longest(const CoxeterPath& p, CheckMode mode = CheckMode::Power);

/// The sign-sequence symmetry criterion eps_j = -eps_{n+1-j}, equivalent
/// to mirror symmetry of the standard diagram.
bool has_symmetric_signs(const CoxeterPath& p);

/// Sign sequence of the extension; heights change by (0, 0, -2, +2) for
/// (OuterTop, OuterBottom, LeftTopRightBottom, LeftBottomRightTop).
CoxeterPath extend(const CoxeterPath& p, ExtensionKind kind);

/// Inverse of extend (needs n >= 5): strips the outer signs and reads the
/// kind off the stripped pair.
std::pair<CoxeterPath, ExtensionKind> peel(const CoxeterPath& p);

/// Odd n only: reachable from S_3 through extensions that keep every
/// intermediate height in {-1, +1}.
bool is_admissible(const CoxeterPath& p);

/// All admissible paths of odd degree n, in enumerate_paths order; there
/// are 2 * 3^{m-2} of them for n = 2m-1.
std::vector<CoxeterPath> enumerate_admissible(int n);

/// w2 C^{m-1} for n = 2m-1, the odd-case substitute for the half power.
Permutation half_power(const CoxeterPath& p, const GeneratorWord& w2);

/// Search all distinct-letter reduced words of the element for a midpoint
/// split with half_power == w0. Nonempty exactly for admissible paths.
std::optional<HalfPowerSplit> find_half_power_split(const CoxeterPath& p);

/// Truth of [admissible <=> l(C^{m-1}) = 2(m-1)^2], with the inequality
/// strict on non-admissible paths.
bool length_gap_bound(const CoxeterPath& p);

}  // namespace coxamida
