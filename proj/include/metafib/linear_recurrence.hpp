#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metafib/integer.hpp"

namespace metafib {

/// Order-k linear recurrence a(n) = sum_{i=1..k} b_i * a(n-i), indexed from 0.
///
/// Coefficients are nonnegative and sum to at least 2; initial terms are
/// positive. Under these constraints every term is positive and the sequence
/// grows superlinearly.
class LinearRecurrence {
 public:
  LinearRecurrence(std::vector<Int> coeffs, std::vector<Int> initial);

  Index k() const { return static_cast<Index>(coeffs_.size()); }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const std::vector<Int>& initial() const { return initial_; }

 private:
  std::vector<Int> coeffs_;
  std::vector<Int> initial_;
};

/// The r-th cyclic rotation of a linear recurrence: coefficient b_i moves to
/// lag i-r when i > r and to lag k+i-r when i <= r. Rotations share the base
/// recurrence's initial terms; rotation 0 is the base recurrence itself.
class RotatedRecurrence {
 public:
  RotatedRecurrence(LinearRecurrence base, Index r);

  Index k() const { return base_.k(); }
  Index r() const { return r_; }
  const LinearRecurrence& base() const { return base_; }
  const std::vector<Int>& initial() const { return base_.initial(); }

  /// Coefficient applied at lag d, 1 <= d <= k.
  const Int& coeff_at_lag(Index d) const { return coeff_by_lag_.at(static_cast<std::size_t>(d - 1)); }
  /// Coefficients indexed by lag-1 (element 0 is the lag-1 coefficient).
  const std::vector<Int>& coeffs_by_lag() const { return coeff_by_lag_; }
  /// Lag carrying coefficient b_i: i-r for i > r, k+i-r for i <= r.
  Index lag_of_coeff(Index i) const;
  /// (coefficient index i, lag) pairs for i = 1..k.
  std::vector<std::pair<Index, Index>> effective_lags() const;

 private:
  LinearRecurrence base_;
  Index r_;
  std::vector<Int> coeff_by_lag_;
};

RotatedRecurrence rotate(const LinearRecurrence& rec, Index r);

/// First n_terms of the sequence, computed iteratively. For m >= k the
/// recurrence holds exactly; indices below k return the initial terms.
std::vector<Int> prefix(const LinearRecurrence& rec, Index n_terms);
std::vector<Int> prefix(const RotatedRecurrence& rec, Index n_terms);

/// Grows `terms` (which must be a prefix of the rotated sequence, possibly
/// empty) until it holds n_terms values. Lets callers keep incremental tables.
void extend_prefix(const RotatedRecurrence& rec, std::vector<Int>& terms, Index n_terms);

/// Proof object for "a(m-1) >= 2(m+1)k for all m >= m0": every m in
/// [m0, n_star+1] was checked directly, and from n_star on the window minimum
/// L(n) = min(a(n), ..., a(n-k+1)) dominates the linear target because L is
/// nondecreasing and doubles every k steps.
struct GrowthCertificate {
  Index m0 = 0;
  Index n_star = 0;
  Int window_min;
};

/// First directly checked index that breaks the growth bound.
struct GrowthViolation {
  Index m = 0;
  Int term;
  Int bound;
};

struct GrowthResult {
  std::optional<GrowthCertificate> certificate;
  std::optional<GrowthViolation> violation;

  bool ok() const { return certificate.has_value(); }
};

/// Raised when an internal scan exceeds its term ceiling. Signals a bug or an
/// absurd input, not a mathematical failure.
struct search_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr Index kDefaultScanLimit = 1'000'000;

/// Certifies a(m-1) >= 2(m+1)k for all m >= m0, or reports the first directly
/// checked m where the bound fails.
GrowthResult growth_certificate(const RotatedRecurrence& rec, Index m0,
                                Index scan_limit = kDefaultScanLimit);

/// Smallest m0 for which growth_certificate succeeds. Always exists: the
/// sequence grows superlinearly while the target is linear.
Index minimal_certified_m0(const RotatedRecurrence& rec, Index scan_limit = kDefaultScanLimit);

}  // namespace metafib
