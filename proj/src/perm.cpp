#include "coxamida/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "parse_util.hpp"

namespace coxamida {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images_) {
    if (v < 1 || v > n) throw std::invalid_argument("permutation image out of range");
    if (seen[static_cast<std::size_t>(v) - 1]) throw std::invalid_argument("permutation image repeated");
    seen[static_cast<std::size_t>(v) - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  const int n = a.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = a(b(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& a) {
  const int n = a.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(a(i)) - 1] = i;
  return Permutation(std::move(images));
}

Permutation power(const Permutation& a, int k) {
  if (k < 0) return power(inverse(a), -k);
  Permutation result = Permutation::identity(a.degree());
  for (int step = 0; step < k; ++step) result = compose(a, result);
  return result;
}

int inversion_number(const Permutation& a) {
  const int n = a.degree();
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (a(i) > a(j)) ++count;
  return count;
}

CycleType cycle_type(const Permutation& a) {
  const int n = a.degree();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<int> parts;
  for (int start = 1; start <= n; ++start) {
    if (visited[static_cast<std::size_t>(start) - 1]) continue;
    int length = 0;
    for (int x = start; !visited[static_cast<std::size_t>(x) - 1]; x = a(x)) {
      visited[static_cast<std::size_t>(x) - 1] = 1;
      ++length;
    }
    parts.push_back(length);
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return CycleType{std::move(parts)};
}

Permutation longest_element(int n) {
  if (n < 1) throw std::invalid_argument("longest_element: degree must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images[static_cast<std::size_t>(i) - 1] = n + 1 - i;
  return Permutation(std::move(images));
}

std::string to_one_line(const Permutation& a) {
  std::ostringstream out;
  for (int i = 1; i <= a.degree(); ++i) {
    if (i > 1) out << ',';
    out << a(i);
  }
  return out.str();
}

Permutation parse_one_line(const std::string& text) {
  return Permutation(detail::parse_csv_ints(text, "one-line permutation"));
}

std::string to_string(const CycleType& t) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (i > 0) out << ',';
    out << t.parts[i];
  }
  out << ')';
  return out.str();
}

}  // namespace coxamida
