#include "coxamida/amida.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace coxamida {

AmidaDiagram::AmidaDiagram(int lines, std::vector<Rung> rungs)
    : lines_(lines), rungs_(std::move(rungs)) {
  if (lines_ < 1) throw std::invalid_argument("diagram needs at least one line");
  for (const Rung& r : rungs_)
    if (r.column < 1 || r.column > lines_ - 1)
      throw std::invalid_argument("rung column out of range 1..n-1");
  std::sort(rungs_.begin(), rungs_.end(), [](const Rung& a, const Rung& b) {
    return a.level != b.level ? a.level < b.level : a.column < b.column;
  });
  // Endpoints never meet: same or adjacent columns need distinct levels.
  for (std::size_t i = 1; i < rungs_.size(); ++i)
    if (rungs_[i].level == rungs_[i - 1].level && rungs_[i].column - rungs_[i - 1].column < 2)
      throw std::invalid_argument("rungs on same or adjacent columns share a level");
}

AmidaDiagram from_word(const GeneratorWord& w) {
  const int len = static_cast<int>(w.size());
  std::vector<Rung> rungs;
  rungs.reserve(w.size());
  for (int j = 0; j < len; ++j)
    rungs.push_back(Rung{w.letters()[static_cast<std::size_t>(j)], len - 1 - j});
  return AmidaDiagram(w.degree(), std::move(rungs));
}

Permutation evaluate(const AmidaDiagram& d) {
  const int n = d.lines();
  // arrangement[line] = runner currently on that line (0-based)
  std::vector<int> arrangement(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) arrangement[static_cast<std::size_t>(i)] = i;
  for (const Rung& r : d.rungs())
    std::swap(arrangement[static_cast<std::size_t>(r.column) - 1],
              arrangement[static_cast<std::size_t>(r.column)]);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int line = 0; line < n; ++line)
    images[static_cast<std::size_t>(arrangement[static_cast<std::size_t>(line)])] = line + 1;
  return Permutation(std::move(images));
}

AmidaDiagram stack(const AmidaDiagram& top, const AmidaDiagram& bottom) {
  if (top.lines() != bottom.lines()) throw std::invalid_argument("stack: line count mismatch");
  std::vector<Rung> rungs = bottom.rungs();
  int low = 0;
  if (!bottom.rungs().empty()) low = bottom.rungs().back().level + 1;
  if (!top.rungs().empty()) low -= top.rungs().front().level;
  for (const Rung& r : top.rungs()) rungs.push_back(Rung{r.column, r.level + low});
  return AmidaDiagram(top.lines(), std::move(rungs));
}

AmidaDiagram standard_from_coxeter_word(const GeneratorWord& w) {
  if (!is_coxeter_word(w))
    throw std::invalid_argument("standard diagram needs a Coxeter word (distinct letters 1..n-1)");
  const int n = w.degree();
  std::vector<int> position(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < static_cast<int>(w.size()); ++j)
    position[static_cast<std::size_t>(w.letters()[static_cast<std::size_t>(j)])] = j;

  // Earlier letter = higher rung. Longest-path layering over the adjacent
  // "is below" constraints gives the minimal canonical level assignment.
  std::vector<int> level(static_cast<std::size_t>(n), -1);
  std::function<int(int)> layer = [&](int c) -> int {
    int& memo = level[static_cast<std::size_t>(c)];
    if (memo >= 0) return memo;
    int value = 0;
    for (int adj : {c - 1, c + 1})
      if (adj >= 1 && adj <= n - 1 &&
          position[static_cast<std::size_t>(adj)] > position[static_cast<std::size_t>(c)])
        value = std::max(value, layer(adj) + 1);
    return memo = value;
  };

  std::vector<Rung> rungs;
  rungs.reserve(static_cast<std::size_t>(n) - 1);
  for (int c = 1; c <= n - 1; ++c) rungs.push_back(Rung{c, layer(c)});
  return AmidaDiagram(n, std::move(rungs));
}

namespace {

// One rung per column 1..n-1 -> the level of each column; throws otherwise.
std::vector<int> standard_levels(const AmidaDiagram& d) {
  const int n = d.lines();
  if (static_cast<int>(d.rungs().size()) != n - 1)
    throw std::invalid_argument("not a standard diagram: needs exactly one rung per column");
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const Rung& r : d.rungs()) {
    if (seen[static_cast<std::size_t>(r.column)])
      throw std::invalid_argument("not a standard diagram: repeated column");
    seen[static_cast<std::size_t>(r.column)] = 1;
    level[static_cast<std::size_t>(r.column)] = r.level;
  }
  return level;
}

}  // namespace

bool is_mirror_symmetric(const AmidaDiagram& d) {
  const int n = d.lines();
  if (n % 2 != 0) throw std::invalid_argument("mirror symmetry is defined for even n");
  const std::vector<int> level = standard_levels(d);
  // Sign of column i records whether its rung sits above column i-1's; the
  // reflection column -> n-column preserves relative order exactly when
  // each sign flips across the axis.
  for (int i = 2; i <= n - 1; ++i) {
    const bool above = level[static_cast<std::size_t>(i)] > level[static_cast<std::size_t>(i) - 1];
    const int j = n + 1 - i;
    const bool mirror_above =
        level[static_cast<std::size_t>(j)] > level[static_cast<std::size_t>(j) - 1];
    if (above == mirror_above) return false;
  }
  return true;
}

std::string render_ascii(const AmidaDiagram& d) {
  const int n = d.lines();
  const std::size_t width = static_cast<std::size_t>(4 * (n - 1) + 1);
  std::string spacer(width, ' ');
  for (int j = 0; j < n; ++j) spacer[static_cast<std::size_t>(4 * j)] = '|';

  // Group by level, top first.
  std::map<int, std::vector<int>, std::greater<int>> columns_at;
  for (const Rung& r : d.rungs()) columns_at[r.level].push_back(r.column);

  std::string out;
  if (columns_at.empty()) return spacer;
  bool first = true;
  for (const auto& [level, columns] : columns_at) {
    if (!first) out += '\n' + spacer + '\n';
    first = false;
    std::string row = spacer;
    for (int c : columns) row.replace(static_cast<std::size_t>(4 * (c - 1) + 1), 3, "---");
    out += row;
  }
  return out;
}

}  // namespace coxamida
