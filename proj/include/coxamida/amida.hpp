#pragma once

#include <string>
#include <vector>

#include "coxamida/perm.hpp"
#include "coxamida/words.hpp"

namespace coxamida {

/// Horizontal segment between vertical lines `column` and `column+1`.
/// Larger level = higher on the diagram = applied later.
struct Rung {
  int column;
  int level;

  bool operator==(const Rung& other) const = default;
};

/// Ladder diagram on n vertical lines. Rungs are kept sorted by level
/// (bottom to top). Two rungs may never share an endpoint, so rungs on
/// the same or adjacent columns must sit at distinct levels.
class AmidaDiagram {
public:
  AmidaDiagram(int lines, std::vector<Rung> rungs);

  int lines() const { return lines_; }
  const std::vector<Rung>& rungs() const { return rungs_; }

private:
  int lines_;
  std::vector<Rung> rungs_;
};

/// One rung per letter; the rightmost letter of w gets the lowest level.
AmidaDiagram from_word(const GeneratorWord& w);

/// Runner tracing, bottom to top: result(i) is the arrival line of the
/// runner who starts at the bottom of line i.
Permutation evaluate(const AmidaDiagram& d);

/// Puts `top` on `bottom`; evaluates to compose(evaluate(top), evaluate(bottom)).
AmidaDiagram stack(const AmidaDiagram& top, const AmidaDiagram& bottom);

/// Standard diagram of a Coxeter word: one rung per column, the rung of a
/// letter appearing earlier in w placed strictly higher than its adjacent
/// later letters, levels assigned by longest-path layering so the result
/// is canonical up to graph isotopy.
AmidaDiagram standard_from_coxeter_word(const GeneratorWord& w);

/// True iff column -> n-column preserves the relative level order of the
/// rungs. Only defined for standard diagrams with an even number of lines.
bool is_mirror_symmetric(const AmidaDiagram& d);

/// Fixed-width ASCII rendering: vertical line j at character column
/// 4(j-1), rungs drawn as "---", highest level first, one spacer row
/// between rung rows, rows joined by '\n' with no trailing whitespace.
std::string render_ascii(const AmidaDiagram& d);

}  // namespace coxamida
