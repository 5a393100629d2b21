#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxamida/perm.hpp"
#include "coxamida/words.hpp"

namespace coxamida {

/// Exhaustive grouping of all (n-1)! orderings of the distinct generators
/// by the permutation they evaluate to. Class keys are exactly the
/// Coxeter elements; orderings within a class are stored in lexicographic
/// order.
class OrderingCensus {
public:
  OrderingCensus(int degree, std::vector<Permutation> elements,
                 std::vector<std::vector<std::uint8_t>> flat_orderings);

  int degree() const { return degree_; }
  std::size_t class_count() const { return elements_.size(); }
  std::size_t total_orderings() const;

  /// Class keys, sorted by one-line notation.
  const std::vector<Permutation>& elements() const { return elements_; }

  std::optional<std::size_t> find(const Permutation& element) const;
  std::size_t ordering_count(std::size_t class_index) const;
  GeneratorWord ordering(std::size_t class_index, std::size_t k) const;
  std::vector<GeneratorWord> orderings_of(const Permutation& element) const;

  /// Raw letters of ordering k of a class, without materialising a word.
  const std::uint8_t* ordering_letters(std::size_t class_index, std::size_t k) const;

private:
  int degree_;
  std::vector<Permutation> elements_;
  // letters_[c] holds ordering_count(c) words of degree_-1 letters each,
  // flattened back to back.
  std::vector<std::vector<std::uint8_t>> letters_;
};

/// Enumerate all (n-1)! generator orderings, evaluating each one naively.
/// The ordering space is partitioned by first letter across workers
/// (workers <= 0 picks the hardware concurrency). Degrees above
/// max_degree are refused, not approximated.
OrderingCensus census(int n, int workers = 0, int max_degree = 11);

struct VerificationReport {
  std::string claim;
  int n = 0;
  std::optional<long long> expected;
  std::optional<long long> computed;
  bool pass = false;
  std::vector<std::string> witnesses;
  std::int64_t elapsed_ms = 0;
};

struct VerifyOptions {
  int workers = 0;
  int budget_secs = 120;
};

struct ClaimInfo {
  std::string id;
  int min_n;
  int max_n;
  int parity;  // 0 = any, 1 = odd only, 2 = even only

  bool accepts(int n) const {
    if (n < min_n || n > max_n) return false;
    if (parity == 1 && n % 2 == 0) return false;
    if (parity == 2 && n % 2 != 0) return false;
    return true;
  }
};

/// The fixed claim registry.
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& claim_info(const std::string& id);

/// Re-derive one registered claim for a single degree without using the
/// machinery under test, and report pass/fail with counterexample
/// witnesses (lexicographically smallest first, capped at 8).
VerificationReport verify(int n, const std::string& claim, const VerifyOptions& options = {});

}  // namespace coxamida
