#include "metafib/linear_recurrence.hpp"

#include <string>
#include <utility>

namespace metafib {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

LinearRecurrence::LinearRecurrence(std::vector<Int> coeffs, std::vector<Int> initial)
    : coeffs_(std::move(coeffs)), initial_(std::move(initial)) {
  require(!coeffs_.empty(), "order k must be at least 1 (empty coefficient list)");
  require(initial_.size() == coeffs_.size(),
          "length(initial) = " + std::to_string(initial_.size()) +
              " does not match k = " + std::to_string(coeffs_.size()));
  Int sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    require(coeffs_[i] >= 0, "coefficients must be nonnegative (b_" + std::to_string(i + 1) +
                                 " = " + coeffs_[i].get_str() + ")");
    sum += coeffs_[i];
  }
  require(sum >= 2, "coefficient sum must be at least 2 (got " + sum.get_str() + ")");
  for (std::size_t i = 0; i < initial_.size(); ++i) {
    require(initial_[i] >= 1, "initial terms must be positive (a_" + std::to_string(i) + " = " +
                                  initial_[i].get_str() + ")");
  }
}

RotatedRecurrence::RotatedRecurrence(LinearRecurrence base, Index r)
    : base_(std::move(base)), r_(r) {
  const Index k = base_.k();
  require(0 <= r && r < k, "rotation index r = " + std::to_string(r) + " out of range [0, " +
                               std::to_string(k) + ")");
  // Coefficient b_i lands at lag i-r for i > r and at lag k+i-r for i <= r,
  // i.e. the lag-d coefficient is b_{d+r} (wrapping past k).
  coeff_by_lag_.resize(static_cast<std::size_t>(k));
  for (Index d = 1; d <= k; ++d) {
    const Index i = d + r <= k ? d + r : d + r - k;
    coeff_by_lag_[static_cast<std::size_t>(d - 1)] = base_.coeffs()[static_cast<std::size_t>(i - 1)];
  }
}

Index RotatedRecurrence::lag_of_coeff(Index i) const {
  const Index k = base_.k();
  require(1 <= i && i <= k, "coefficient index i = " + std::to_string(i) + " out of range [1, " +
                                std::to_string(k) + "]");
  return i > r_ ? i - r_ : k + i - r_;
}

std::vector<std::pair<Index, Index>> RotatedRecurrence::effective_lags() const {
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(static_cast<std::size_t>(base_.k()));
  for (Index i = 1; i <= base_.k(); ++i) pairs.emplace_back(i, lag_of_coeff(i));
  return pairs;
}

RotatedRecurrence rotate(const LinearRecurrence& rec, Index r) { return RotatedRecurrence(rec, r); }

void extend_prefix(const RotatedRecurrence& rec, std::vector<Int>& terms, Index n_terms) {
  const Index k = rec.k();
  const auto& initial = rec.initial();
  while (static_cast<Index>(terms.size()) < n_terms && static_cast<Index>(terms.size()) < k) {
    terms.push_back(initial[terms.size()]);
  }
  while (static_cast<Index>(terms.size()) < n_terms) {
    const std::size_t n = terms.size();
    Int next = 0;
    for (Index d = 1; d <= k; ++d) {
      next += rec.coeff_at_lag(d) * terms[n - static_cast<std::size_t>(d)];
    }
    terms.push_back(std::move(next));
  }
}

std::vector<Int> prefix(const RotatedRecurrence& rec, Index n_terms) {
  require(n_terms >= 0, "n_terms must be nonnegative");
  std::vector<Int> terms;
  terms.reserve(static_cast<std::size_t>(n_terms));
  extend_prefix(rec, terms, n_terms);
  return terms;
}

std::vector<Int> prefix(const LinearRecurrence& rec, Index n_terms) {
  return prefix(RotatedRecurrence(rec, 0), n_terms);
}

namespace {

// min(terms[n], ..., terms[n-k+1])
Int window_min(const std::vector<Int>& terms, Index n, Index k) {
  Int best = terms[static_cast<std::size_t>(n)];
  for (Index i = n - k + 1; i < n; ++i) {
    const Int& t = terms[static_cast<std::size_t>(i)];
    if (t < best) best = t;
  }
  return best;
}

// Smallest n >= k-1 with L(n) >= 2(n+k+2)k. From there the doubling of the
// window minimum outruns the linear target for good.
Index find_n_star(const RotatedRecurrence& rec, std::vector<Int>& terms, Index scan_limit) {
  const Index k = rec.k();
  for (Index n = k - 1;; ++n) {
    if (n >= scan_limit) {
      throw search_limit_error("growth threshold not reached within " +
                               std::to_string(scan_limit) + " terms (rotation r=" +
                               std::to_string(rec.r()) + ")");
    }
    extend_prefix(rec, terms, n + 1);
    if (window_min(terms, n, k) >= 2 * (n + k + 2) * k) return n;
  }
}

Int growth_bound(Index m, Index k) { return Int(2 * (m + 1) * k); }

}  // namespace

GrowthResult growth_certificate(const RotatedRecurrence& rec, Index m0, Index scan_limit) {
  if (m0 < 1) throw std::invalid_argument("m0 must be at least 1");
  const Index k = rec.k();
  std::vector<Int> terms;
  const Index n_star = find_n_star(rec, terms, scan_limit);
  extend_prefix(rec, terms, n_star + 1);
  for (Index m = m0; m <= n_star + 1; ++m) {
    const Int bound = growth_bound(m, k);
    const Int& term = terms[static_cast<std::size_t>(m - 1)];
    if (term < bound) {
      return GrowthResult{std::nullopt, GrowthViolation{m, term, bound}};
    }
  }
  return GrowthResult{GrowthCertificate{m0, n_star, window_min(terms, n_star, k)}, std::nullopt};
}

Index minimal_certified_m0(const RotatedRecurrence& rec, Index scan_limit) {
  const Index k = rec.k();
  std::vector<Int> terms;
  const Index n_star = find_n_star(rec, terms, scan_limit);
  // Indices past n_star are covered by the window-minimum argument, so the
  // last bound failure at or below n_star+1 decides the minimal m0.
  Index m0 = 1;
  for (Index m = 1; m <= n_star + 1; ++m) {
    if (terms[static_cast<std::size_t>(m - 1)] < growth_bound(m, k)) m0 = m + 1;
  }
  return m0;
}

}  // namespace metafib
