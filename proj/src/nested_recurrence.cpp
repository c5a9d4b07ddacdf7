#include "metafib/nested_recurrence.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace metafib {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

MetaFibRecurrence::MetaFibRecurrence(Index n0, std::vector<Int> coeffs)
    : n0_(n0), coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), "maximum offset K must be at least 1 (empty coefficient list)");
  Int sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    require(coeffs_[i] >= 0, "coefficients must be nonnegative (c_" + std::to_string(i + 1) +
                                 " = " + coeffs_[i].get_str() + ")");
    sum += coeffs_[i];
  }
  require(sum >= 1, "at least one coefficient must be positive");
}

InitialCondition::InitialCondition(Index start, std::vector<Int> values)
    : start_(start), values_(std::move(values)) {
  require(!values_.empty(), "initial condition must be nonempty");
  for (std::size_t t = 0; t < values_.size(); ++t) {
    require(values_[t] >= 0, "initial values must be nonnegative (value at index " +
                                 std::to_string(start_ + static_cast<Index>(t)) + " is " +
                                 values_[t].get_str() + ")");
  }
}

namespace {

void check_eval_preconditions(const MetaFibRecurrence& rec, const InitialCondition& init) {
  require(init.start() == rec.n0(), "initial condition starts at " + std::to_string(init.start()) +
                                        " but the recurrence starts at " + std::to_string(rec.n0()));
  require(init.size() >= rec.max_offset(),
          "initial condition has " + std::to_string(init.size()) + " values but the maximum inner offset is " +
              std::to_string(rec.max_offset()));
}

}  // namespace

NestedEvaluator::NestedEvaluator(MetaFibRecurrence rec, InitialCondition init)
    : rec_(std::move(rec)), init_(std::move(init)) {
  check_eval_preconditions(rec_, init_);
  values_ = init_.values();
}

void NestedEvaluator::extend(Index n_terms) {
  if (n_terms < 0) throw std::invalid_argument("n_terms must be nonnegative");
  const Index n0 = rec_.n0();
  const Index K = rec_.max_offset();
  const auto& coeffs = rec_.coeffs();
  while (!death_ && static_cast<Index>(values_.size()) < n_terms) {
    const std::size_t t = values_.size();
    const Index n = n0 + static_cast<Index>(t);
    Int total = 0;
    for (Index i = 1; i <= K; ++i) {
      const Int& c = coeffs[static_cast<std::size_t>(i - 1)];
      if (c == 0) continue;
      const Int& inner = values_[t - static_cast<std::size_t>(i)];
      Int argument = n - inner;
      if (argument >= n) {
        death_ = Death{n, n - i, inner, std::move(argument)};
        return;
      }
      if (argument >= n0) {
        // In range: the argument fits an Index because n0 <= argument < n.
        total += c * values_[static_cast<std::size_t>(argument.get_si() - n0)];
      }
    }
    values_.push_back(std::move(total));
  }
}

EvalResult eval_prefix(const MetaFibRecurrence& rec, const InitialCondition& init, Index n_terms) {
  if (n_terms < 0) throw std::invalid_argument("n_terms must be nonnegative");
  NestedEvaluator eval(rec, init);
  eval.extend(n_terms);
  std::vector<Int> values = eval.values();
  if (static_cast<Index>(values.size()) > n_terms) values.resize(static_cast<std::size_t>(n_terms));
  return EvalResult{std::move(values), eval.death()};
}

namespace {

// Unwinds the oracle's recursion when the sequence dies.
struct DeathSignal {
  Death death;
};

class Oracle {
 public:
  Oracle(const MetaFibRecurrence& rec, const InitialCondition& init, OracleLimits limits)
      : rec_(rec), init_(init), limits_(limits) {}

  Int eval(Index n, Index depth) {
    if (depth > limits_.max_depth) {
      throw oracle_budget_exceeded("oracle recursion budget (" + std::to_string(limits_.max_depth) +
                                   ") exceeded at index " + std::to_string(n));
    }
    const Index n0 = rec_.n0();
    if (n < n0) return 0;
    if (n < n0 + init_.size()) return init_.values()[static_cast<std::size_t>(n - n0)];
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    if (in_progress_.count(n) != 0) {
      // A cycle means the value is needed to compute itself.
      throw DeathSignal{Death{n, n, 0, Int(n)}};
    }
    in_progress_.insert(n);
    Int total = 0;
    const auto& coeffs = rec_.coeffs();
    for (Index i = 1; i <= rec_.max_offset(); ++i) {
      const Int& c = coeffs[static_cast<std::size_t>(i - 1)];
      if (c == 0) continue;
      Int inner = eval(n - i, depth + 1);
      Int argument = n - inner;
      if (argument >= n) {
        throw DeathSignal{Death{n, n - i, std::move(inner), std::move(argument)}};
      }
      // References below n0 contribute 0; anything else fits an Index.
      if (argument >= n0) total += c * eval(argument.get_si(), depth + 1);
    }
    in_progress_.erase(n);
    auto [it, inserted] = memo_.emplace(n, std::move(total));
    return it->second;
  }

 private:
  const MetaFibRecurrence& rec_;
  const InitialCondition& init_;
  OracleLimits limits_;
  std::unordered_map<Index, Int> memo_;
  std::unordered_set<Index> in_progress_;
};

}  // namespace

EvalResult eval_oracle(const MetaFibRecurrence& rec, const InitialCondition& init, Index n_terms,
                       OracleLimits limits) {
  if (n_terms < 0) throw std::invalid_argument("n_terms must be nonnegative");
  check_eval_preconditions(rec, init);
  Oracle oracle(rec, init, limits);
  EvalResult result;
  result.values.reserve(static_cast<std::size_t>(n_terms));
  for (Index t = 0; t < n_terms; ++t) {
    try {
      result.values.push_back(oracle.eval(rec.n0() + t, 0));
    } catch (DeathSignal& signal) {
      result.death = std::move(signal.death);
      break;
    }
  }
  return result;
}

std::vector<Int> extract_subsequence(std::span<const Int> seq, Index stride, Index offset) {
  if (stride < 1) throw std::invalid_argument("stride must be positive");
  if (offset < 0) throw std::invalid_argument("offset must be nonnegative");
  std::vector<Int> out;
  for (std::size_t i = static_cast<std::size_t>(offset); i < seq.size();
       i += static_cast<std::size_t>(stride)) {
    out.push_back(seq[i]);
  }
  return out;
}

}  // namespace metafib
