#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coxamida {

/// Permutation of {1..n} in one-line notation: images()[i-1] = sigma(i).
/// Construction validates that the images form a bijection of {1..n}.
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }

  /// sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& other) const = default;
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

private:
  std::vector<int> images_;
};

/// Multiset of cycle lengths, sorted weakly decreasing; parts sum to the degree.
struct CycleType {
  std::vector<int> parts;

  bool operator==(const CycleType& other) const = default;
};

/// result(i) = a(b(i)); b is applied first.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

/// a^k for any integer k (negative powers via the inverse).
Permutation power(const Permutation& a, int k);

/// Count of pairs i < j with a(i) > a(j); equals the Coxeter length.
int inversion_number(const Permutation& a);

CycleType cycle_type(const Permutation& a);

/// The order-reversing permutation i -> n+1-i, the unique element of
/// maximal length n(n-1)/2.
Permutation longest_element(int n);

/// Comma-separated one-line notation, e.g. "4,1,3,2".
std::string to_one_line(const Permutation& a);
Permutation parse_one_line(const std::string& text);

std::string to_string(const CycleType& t);

}  // namespace coxamida
