#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "metafib/construction.hpp"

namespace metafib {

struct Mismatch {
  Index n = 0;
  Slot slot;  // decomposition of the mismatched q-position
  Int expected;
  Int got;
};

struct TheoremReport {
  bool pass = false;
  Index checked = 0;
  std::optional<Mismatch> first_mismatch;
  std::optional<Death> death;
};

/// How a term of the nested recurrence resolves at a particular index.
enum class SlotClass {
  VanishesNegative,  // argument below the start index, contributes 0
  LandsOddSlot,
  LandsEvenSlot,
};

struct TraceTerm {
  Index offset = 0;  // inner offset i of the term c_i * R(n - R(n-i))
  Int coeff;
  Int inner_value;  // R(n - offset)
  Int argument;     // n - inner_value
  SlotClass cls = SlotClass::VanishesNegative;
  Int contribution;     // coeff * R(argument), 0 when the argument vanishes
  Slot landed;          // decomposition of the argument; valid when it lands
};

/// Term-by-term breakdown of the nested recurrence at one index, with the
/// odd/even case pattern checked: odd n resolves through the offset-2 term
/// alone (landing on an odd slot with the same j), even n drops the offset-2
/// term and reproduces the rotated recurrence for a^(j)_m on even slots.
struct CaseTrace {
  Index n = 0;
  Slot slot;
  std::vector<TraceTerm> terms;
  Int value;  // R(n)
  bool pattern_ok = false;
  std::string violation;  // names the violated clause when !pattern_ok
  std::optional<Death> death;
};

struct SweepReport {
  Index from = 0;
  Index to = 0;
  Index traced = 0;
  Index violations = 0;
  std::optional<CaseTrace> first_violation;
};

/// Checks a construction against its own interleaved sequence. Keeps the
/// evaluated prefix and rotation tables cached so repeated checks and traces
/// share work.
class TheoremVerifier {
 public:
  explicit TheoremVerifier(Construction c);

  const Construction& construction() const { return c_; }

  /// Compares R(n) with q_n for 0 <= n < N. Requires N > h.
  TheoremReport check_theorem(Index n_terms);

  /// Compares R(2kn) with a_n for 0 <= n < N, using the evaluated R.
  TheoremReport check_subsequence(Index n_count);

  /// Breakdown of R's recurrence at n. Requires n > h.
  CaseTrace trace_case(Index n);

  /// Traces every n in (from, to] and counts case-pattern violations.
  SweepReport sweep_cases(Index from, Index to);

 private:
  const Int& q_at(Index n);
  void ensure_q(Index n_terms);
  CaseTrace trace_from_table(Index n);

  Construction c_;
  NestedEvaluator eval_;
  std::vector<std::vector<Int>> rotation_terms_;
  std::vector<Int> odd_values_;  // 2k(k-j) for j = 0..k-1
};

TheoremReport check_theorem(const Construction& c, Index n_terms);
TheoremReport check_subsequence(const Construction& c, Index n_count);
CaseTrace trace_case(const Construction& c, Index n);
SweepReport sweep_cases(const Construction& c, Index from, Index to);

}  // namespace metafib
