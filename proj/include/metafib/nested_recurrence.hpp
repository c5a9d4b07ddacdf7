#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "metafib/integer.hpp"

namespace metafib {

/// Nested recurrence M(n) = sum_{i=1..K} c_i * M(n - M(n-i)) with start index
/// n0 and the convention M(p) = 0 for every p < n0.
class MetaFibRecurrence {
 public:
  MetaFibRecurrence(Index n0, std::vector<Int> coeffs);

  Index n0() const { return n0_; }
  /// Maximum inner offset K; coeffs() holds c_1..c_K.
  Index max_offset() const { return static_cast<Index>(coeffs_.size()); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

 private:
  Index n0_;
  std::vector<Int> coeffs_;
};

/// Finite prefix seeding evaluation: values[t] = M(start + t). Values are
/// nonnegative; the zero convention gives no meaning to negative terms.
class InitialCondition {
 public:
  InitialCondition(Index start, std::vector<Int> values);

  Index start() const { return start_; }
  const std::vector<Int>& values() const { return values_; }
  Index size() const { return static_cast<Index>(values_.size()); }

 private:
  Index start_;
  std::vector<Int> values_;
};

/// Nonrecoverable failure: computing M(n) needs M(argument) with argument >= n.
/// `offset` is the index n-i whose value produced the forward reference, so
/// inner_value = M(offset) and argument = n - inner_value.
struct Death {
  Index n = 0;
  Index offset = 0;
  Int inner_value;
  Int argument;
};

struct EvalResult {
  std::vector<Int> values;
  std::optional<Death> death;

  bool died() const { return death.has_value(); }
};

/// Left-to-right evaluator over a growable dense table. Death is sticky: once
/// the sequence dies, extending further returns the same truncated prefix.
class NestedEvaluator {
 public:
  NestedEvaluator(MetaFibRecurrence rec, InitialCondition init);

  const MetaFibRecurrence& recurrence() const { return rec_; }
  const std::vector<Int>& values() const { return values_; }
  const std::optional<Death>& death() const { return death_; }

  /// Grows the table to n_terms values (fewer if the sequence dies first).
  void extend(Index n_terms);

 private:
  MetaFibRecurrence rec_;
  InitialCondition init_;
  std::vector<Int> values_;
  std::optional<Death> death_;
};

/// M(n0 .. n0+n_terms-1), or the prefix up to the death point. Initial values
/// are returned verbatim; later terms follow the recurrence, with references
/// below n0 contributing 0.
EvalResult eval_prefix(const MetaFibRecurrence& rec, const InitialCondition& init, Index n_terms);

struct OracleLimits {
  Index max_depth = 10'000;
};

/// Raised when the oracle's recursion budget is exhausted. Signals that the
/// oracle is inapplicable, not that the sequence died.
struct oracle_budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Same function as eval_prefix, computed by naive top-down recursion with a
/// memo table and an explicit in-progress set. Independent of the iterative
/// evaluator; used to cross-check it.
EvalResult eval_oracle(const MetaFibRecurrence& rec, const InitialCondition& init, Index n_terms,
                       OracleLimits limits = {});

/// seq[offset], seq[offset+stride], ... (empty when offset is past the end).
std::vector<Int> extract_subsequence(std::span<const Int> seq, Index stride, Index offset);

}  // namespace metafib
