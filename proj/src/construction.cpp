#include "metafib/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace metafib {

MetaFibRecurrence build_meta_recurrence(const LinearRecurrence& rec) {
  const Index k = rec.k();
  const Index max_offset = std::max<Index>(2, 2 * k - 1);
  std::vector<Int> coeffs(static_cast<std::size_t>(max_offset), Int(0));
  coeffs[1] += 1;  // offset 2 carries the odd/even bookkeeping term
  for (Index i = 1; i <= k; ++i) {
    coeffs[static_cast<std::size_t>(2 * i - 2)] += rec.coeffs()[static_cast<std::size_t>(i - 1)];
  }
  return MetaFibRecurrence(0, std::move(coeffs));
}

namespace {

std::vector<RotatedRecurrence> all_rotations(const LinearRecurrence& rec) {
  std::vector<RotatedRecurrence> rotations;
  rotations.reserve(static_cast<std::size_t>(rec.k()));
  for (Index r = 0; r < rec.k(); ++r) rotations.emplace_back(rec, r);
  return rotations;
}

std::vector<Int> interleave(Index k, const std::vector<RotatedRecurrence>& rotations,
                            Index n_terms) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n_terms));
  if (n_terms <= 0) return out;
  std::vector<std::vector<Int>> tables(static_cast<std::size_t>(k));
  const Index m_max = (n_terms - 1) / (2 * k);
  for (Index j = 0; j < k; ++j) {
    extend_prefix(rotations[static_cast<std::size_t>(j)], tables[static_cast<std::size_t>(j)],
                  m_max + 1);
  }
  for (Index n = 0; n < n_terms; ++n) {
    const Slot slot = q_slot(n, k);
    if (slot.odd) {
      out.emplace_back(2 * k * (k - slot.j));
    } else {
      out.push_back(tables[static_cast<std::size_t>(slot.j)][static_cast<std::size_t>(slot.m)]);
    }
  }
  return out;
}

}  // namespace

HValidity is_valid_h(const LinearRecurrence& rec, const std::vector<RotatedRecurrence>& rotations,
                     Index h) {
  if (h < 0) throw std::invalid_argument("h must be nonnegative");
  const Index k = rec.k();
  if (h < 2) {
    return HValidity{false, "h = " + std::to_string(h) + " violates h >= 2", {}};
  }
  const Index floor_h = 2 * k * k - 1;
  if (h < floor_h) {
    return HValidity{false, "h = " + std::to_string(h) + " violates h >= 2k^2-1 = " +
                                std::to_string(floor_h) + " for k = " + std::to_string(k),
                     {}};
  }
  // Indices above h decompose with m >= floor((h+1)/(2k)); the growth bound
  // must hold from there for every rotation.
  const Index m0 = (h + 1) / (2 * k);
  std::vector<GrowthCertificate> certificates;
  certificates.reserve(rotations.size());
  for (const RotatedRecurrence& rot : rotations) {
    GrowthResult result = growth_certificate(rot, m0);
    if (!result.ok()) {
      const GrowthViolation& v = *result.violation;
      return HValidity{false,
                       "growth bound fails for rotation r = " + std::to_string(rot.r()) +
                           " at m = " + std::to_string(v.m) + ": a(m-1) = " + v.term.get_str() +
                           " < 2(m+1)k = " + v.bound.get_str(),
                       {}};
    }
    certificates.push_back(*result.certificate);
  }
  return HValidity{true, "", std::move(certificates)};
}

HValidity is_valid_h(const LinearRecurrence& rec, Index h) {
  return is_valid_h(rec, all_rotations(rec), h);
}

Index find_h(const LinearRecurrence& rec) {
  const Index k = rec.k();
  // Validity is monotone in h, and the certificate clause depends on h only
  // through m0 = floor((h+1)/(2k)), so the minimal h follows from the minimal
  // certifiable m0 across rotations.
  Index m0 = 1;
  for (const RotatedRecurrence& rot : all_rotations(rec)) {
    m0 = std::max(m0, minimal_certified_m0(rot));
  }
  return std::max<Index>({2, 2 * k * k - 1, 2 * k * m0 - 1});
}

Slot q_slot(Index n, Index k) {
  if (n < 0) throw std::invalid_argument("interleaved positions are nonnegative");
  const Index half = n / 2;
  return Slot{half / k, half % k, n % 2 != 0};
}

Int interleaved_term(const Construction& c, Index n) {
  const Index k = c.input.k();
  const Slot slot = q_slot(n, k);
  if (slot.odd) return Int(2 * k * (k - slot.j));
  std::vector<Int> terms = prefix(c.rotations[static_cast<std::size_t>(slot.j)], slot.m + 1);
  return terms.back();
}

std::vector<Int> interleaved_prefix(const Construction& c, Index n_terms) {
  if (n_terms < 0) throw std::invalid_argument("n_terms must be nonnegative");
  return interleave(c.input.k(), c.rotations, n_terms);
}

Construction assemble(LinearRecurrence input, Index s, Index h, MetaFibRecurrence target,
                      InitialCondition initial) {
  if (s != 2 * input.k()) {
    throw std::invalid_argument("quasi-period s = " + std::to_string(s) + " must equal 2k = " +
                                std::to_string(2 * input.k()));
  }
  if (initial.size() != h + 1) {
    throw std::invalid_argument("initial condition has " + std::to_string(initial.size()) +
                                " values; expected h+1 = " + std::to_string(h + 1));
  }
  if (target.n0() != 0) {
    throw std::invalid_argument("the constructed recurrence starts at 0 (got n0 = " +
                                std::to_string(target.n0()) + ")");
  }
  std::vector<RotatedRecurrence> rotations = all_rotations(input);
  return Construction{std::move(input),  std::move(rotations), s, h,
                      std::move(target), std::move(initial),   {}};
}

namespace {

Construction build_with_h(const LinearRecurrence& rec, Index h, HValidity validity) {
  const Index k = rec.k();
  std::vector<RotatedRecurrence> rotations = all_rotations(rec);
  InitialCondition initial(0, interleave(k, rotations, h + 1));
  Construction c = assemble(rec, 2 * k, h, build_meta_recurrence(rec), std::move(initial));
  c.certificates = std::move(validity.certificates);
  return c;
}

}  // namespace

Construction build(const LinearRecurrence& rec) {
  const Index h = find_h(rec);
  HValidity validity = is_valid_h(rec, h);
  if (!validity.ok) {
    throw std::logic_error("find_h returned an invalid h: " + validity.diagnostic);
  }
  return build_with_h(rec, h, std::move(validity));
}

Construction build(const LinearRecurrence& rec, Index h) {
  HValidity validity = is_valid_h(rec, h);
  if (!validity.ok) throw std::invalid_argument("invalid h: " + validity.diagnostic);
  return build_with_h(rec, h, std::move(validity));
}

}  // namespace metafib
