#include "metafib/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace metafib {

TheoremVerifier::TheoremVerifier(Construction c)
    : c_(std::move(c)),
      eval_(c_.target, c_.initial),
      rotation_terms_(c_.rotations.size()) {
  const Index k = c_.input.k();
  odd_values_.reserve(static_cast<std::size_t>(k));
  for (Index j = 0; j < k; ++j) odd_values_.emplace_back(2 * k * (k - j));
}

void TheoremVerifier::ensure_q(Index n_terms) {
  if (n_terms <= 0) return;
  const Index k = c_.input.k();
  const Index m_max = (n_terms - 1) / (2 * k);
  for (Index j = 0; j < k; ++j) {
    extend_prefix(c_.rotations[static_cast<std::size_t>(j)],
                  rotation_terms_[static_cast<std::size_t>(j)], m_max + 1);
  }
}

const Int& TheoremVerifier::q_at(Index n) {
  const Slot slot = q_slot(n, c_.input.k());
  if (slot.odd) return odd_values_[static_cast<std::size_t>(slot.j)];
  return rotation_terms_[static_cast<std::size_t>(slot.j)][static_cast<std::size_t>(slot.m)];
}

TheoremReport TheoremVerifier::check_theorem(Index n_terms) {
  if (n_terms <= c_.h) {
    throw std::invalid_argument("n_terms = " + std::to_string(n_terms) +
                                " must exceed h = " + std::to_string(c_.h));
  }
  eval_.extend(n_terms);
  const std::vector<Int>& r = eval_.values();
  const Index available = std::min<Index>(n_terms, static_cast<Index>(r.size()));
  ensure_q(available);
  TheoremReport report;
  for (Index n = 0; n < available; ++n) {
    const Int& expected = q_at(n);
    if (r[static_cast<std::size_t>(n)] != expected) {
      report.first_mismatch =
          Mismatch{n, q_slot(n, c_.input.k()), expected, r[static_cast<std::size_t>(n)]};
      break;
    }
    report.checked = n + 1;
  }
  if (eval_.death() && eval_.death()->n < n_terms) report.death = eval_.death();
  report.pass = !report.first_mismatch && !report.death && report.checked == n_terms;
  return report;
}

TheoremReport TheoremVerifier::check_subsequence(Index n_count) {
  if (n_count < 1) throw std::invalid_argument("n_count must be at least 1");
  const Index k = c_.input.k();
  const Index r_terms = 2 * k * (n_count - 1) + 1;
  eval_.extend(r_terms);
  const std::vector<Int>& r = eval_.values();
  extend_prefix(c_.rotations[0], rotation_terms_[0], n_count);
  TheoremReport report;
  for (Index n = 0; n < n_count; ++n) {
    const Index pos = 2 * k * n;
    if (pos >= static_cast<Index>(r.size())) break;  // evaluation died earlier
    const Int& expected = rotation_terms_[0][static_cast<std::size_t>(n)];
    if (r[static_cast<std::size_t>(pos)] != expected) {
      report.first_mismatch = Mismatch{n, q_slot(pos, k), expected, r[static_cast<std::size_t>(pos)]};
      break;
    }
    report.checked = n + 1;
  }
  if (eval_.death() && eval_.death()->n < r_terms) report.death = eval_.death();
  report.pass = !report.first_mismatch && !report.death && report.checked == n_count;
  return report;
}

CaseTrace TheoremVerifier::trace_case(Index n) {
  if (n <= c_.h) {
    throw std::invalid_argument("trace index n = " + std::to_string(n) +
                                " must exceed h = " + std::to_string(c_.h));
  }
  eval_.extend(n + 1);
  if (eval_.death() && eval_.death()->n <= n) {
    CaseTrace trace;
    trace.n = n;
    trace.slot = q_slot(n, c_.input.k());
    trace.death = eval_.death();
    trace.pattern_ok = false;
    trace.violation = "evaluation died at index " + std::to_string(eval_.death()->n);
    return trace;
  }
  return trace_from_table(n);
}

CaseTrace TheoremVerifier::trace_from_table(Index n) {
  const Index k = c_.input.k();
  const std::vector<Int>& r = eval_.values();
  CaseTrace trace;
  trace.n = n;
  trace.slot = q_slot(n, k);
  trace.value = r[static_cast<std::size_t>(n)];
  trace.pattern_ok = true;

  auto violate = [&trace](const std::string& message) {
    if (trace.pattern_ok) {
      trace.pattern_ok = false;
      trace.violation = message;
    }
  };

  const auto& coeffs = c_.target.coeffs();
  bool saw_offset_two = false;
  Int total = 0;
  for (Index i = 1; i <= c_.target.max_offset(); ++i) {
    const Int& coeff = coeffs[static_cast<std::size_t>(i - 1)];
    if (coeff == 0) continue;
    TraceTerm term;
    term.offset = i;
    term.coeff = coeff;
    term.inner_value = r[static_cast<std::size_t>(n - i)];
    term.argument = n - term.inner_value;
    if (term.argument < 0) {
      term.cls = SlotClass::VanishesNegative;
      term.contribution = 0;
    } else {
      // The argument is < n (otherwise evaluation would have died), so it
      // fits an Index and lands on an already evaluated slot.
      const Index pos = term.argument.get_si();
      term.landed = q_slot(pos, k);
      term.cls = term.landed.odd ? SlotClass::LandsOddSlot : SlotClass::LandsEvenSlot;
      term.contribution = coeff * r[static_cast<std::size_t>(pos)];
    }
    total += term.contribution;

    if (i == 2) {
      saw_offset_two = true;
      if (trace.slot.odd) {
        if (term.cls != SlotClass::LandsOddSlot) {
          violate("odd case: offset-2 term does not land on an odd slot at n = " +
                  std::to_string(n));
        } else if (term.landed.j != trace.slot.j) {
          violate("odd case: offset-2 term lands on j = " + std::to_string(term.landed.j) +
                  ", expected j = " + std::to_string(trace.slot.j));
        }
      } else if (term.cls != SlotClass::VanishesNegative) {
        violate("even case: offset-2 term does not vanish at n = " + std::to_string(n));
      }
    } else if (i % 2 == 0) {
      violate("unexpected active even offset " + std::to_string(i));
    } else {
      // Odd offset 2i-1 carries the input coefficient b_{(offset+1)/2}.
      const Index b_index = (i + 1) / 2;
      if (trace.slot.odd) {
        if (term.cls != SlotClass::VanishesNegative) {
          violate("odd case: weighted term at offset " + std::to_string(i) +
                  " does not vanish at n = " + std::to_string(n));
        }
      } else {
        if (term.cls != SlotClass::LandsEvenSlot) {
          violate("even case: weighted term at offset " + std::to_string(i) +
                  " does not land on an even slot at n = " + std::to_string(n));
        } else if (term.landed.j != trace.slot.j) {
          violate("even case: weighted term at offset " + std::to_string(i) + " lands on j = " +
                  std::to_string(term.landed.j) + ", expected j = " + std::to_string(trace.slot.j));
        } else {
          // The landing must replay the rotated recurrence for a^(j)_m.
          const Index j = trace.slot.j;
          const Index lag = c_.rotations[static_cast<std::size_t>(j)].lag_of_coeff(b_index);
          if (term.landed.m != trace.slot.m - lag) {
            violate("even case: weighted term at offset " + std::to_string(i) + " lands on m = " +
                    std::to_string(term.landed.m) + ", expected m - lag = " +
                    std::to_string(trace.slot.m - lag));
          }
        }
      }
    }
    trace.terms.push_back(std::move(term));
  }

  if (!saw_offset_two) violate("offset-2 term is inactive");
  if (total != trace.value) {
    violate("trace contributions sum to " + total.get_str() + " but the evaluated value is " +
            trace.value.get_str());
  }
  return trace;
}

SweepReport TheoremVerifier::sweep_cases(Index from, Index to) {
  SweepReport report;
  report.from = std::max(from, c_.h);
  report.to = to;
  if (to <= report.from) return report;
  eval_.extend(to + 1);
  const Index evaluated = static_cast<Index>(eval_.values().size());
  for (Index n = report.from + 1; n <= to; ++n) {
    if (n >= evaluated) {
      // The sequence died before n; report it once and stop.
      CaseTrace trace = trace_case(n);
      report.traced += 1;
      report.violations += 1;
      if (!report.first_violation) report.first_violation = std::move(trace);
      break;
    }
    CaseTrace trace = trace_from_table(n);
    report.traced += 1;
    if (!trace.pattern_ok) {
      report.violations += 1;
      if (!report.first_violation) report.first_violation = std::move(trace);
    }
  }
  return report;
}

TheoremReport check_theorem(const Construction& c, Index n_terms) {
  return TheoremVerifier(c).check_theorem(n_terms);
}

TheoremReport check_subsequence(const Construction& c, Index n_count) {
  return TheoremVerifier(c).check_subsequence(n_count);
}

CaseTrace trace_case(const Construction& c, Index n) { return TheoremVerifier(c).trace_case(n); }

SweepReport sweep_cases(const Construction& c, Index from, Index to) {
  return TheoremVerifier(c).sweep_cases(from, to);
}

}  // namespace metafib
