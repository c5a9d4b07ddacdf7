#pragma once

#include <string>
#include <vector>

#include "metafib/integer.hpp"
#include "metafib/linear_recurrence.hpp"
#include "metafib/nested_recurrence.hpp"

namespace metafib {

/// Everything needed to realize a linear recurrent sequence as the stride-2k
/// subsequence of a meta-Fibonacci sequence: the input recurrence, its k
/// rotations, the interleaved target sequence q, the nested recurrence it
/// eventually satisfies, and the explicit initial condition q_0..q_h.
struct Construction {
  LinearRecurrence input;
  std::vector<RotatedRecurrence> rotations;
  Index s;  // quasi-period, always 2k
  Index h;  // initial condition covers indices 0..h
  MetaFibRecurrence target;
  InitialCondition initial;
  // One certificate per rotation when the construction was built or its h
  // validated in-process; empty for bundles loaded from disk.
  std::vector<GrowthCertificate> certificates;
};

/// Nested recurrence over offsets 1..max(2, 2k-1): coefficient 1 at offset 2
/// and coefficient b_i at offset 2i-1. Even and odd offsets never collide.
MetaFibRecurrence build_meta_recurrence(const LinearRecurrence& rec);

struct HValidity {
  bool ok = false;
  std::string diagnostic;  // names the first failed clause when !ok
  std::vector<GrowthCertificate> certificates;
};

/// h is valid when h >= 2, h >= 2k^2-1, and every rotation satisfies the
/// growth bound a(m-1) >= 2(m+1)k for all m >= floor((h+1)/(2k)) — every m
/// reachable from an index above h.
HValidity is_valid_h(const LinearRecurrence& rec, Index h);
HValidity is_valid_h(const LinearRecurrence& rec, const std::vector<RotatedRecurrence>& rotations, Index h);

/// Minimal valid h. Any larger value is also valid (validity is monotone).
Index find_h(const LinearRecurrence& rec);

/// Position n of the interleaved sequence decomposed as 2mk+2j (even) or
/// 2mk+2j+1 (odd) with m >= 0 and 0 <= j < k.
struct Slot {
  Index m = 0;
  Index j = 0;
  bool odd = false;
};

Slot q_slot(Index n, Index k);

/// q_n: rotation term a^(j)_m at even positions, the constant 2k(k-j) at odd
/// positions.
Int interleaved_term(const Construction& c, Index n);
std::vector<Int> interleaved_prefix(const Construction& c, Index n_terms);

/// Assembles rotations, minimal h, target recurrence, and the initial
/// condition q_0..q_h for a valid input recurrence.
Construction build(const LinearRecurrence& rec);

/// Same, with an explicit h. Any h at or above the minimal one is accepted;
/// an invalid h is rejected with the failed clause.
Construction build(const LinearRecurrence& rec, Index h);

/// Assembles a construction from explicit parts without validating h. Used
/// when loading serialized bundles; such constructions are only ever checked
/// numerically.
Construction assemble(LinearRecurrence input, Index s, Index h, MetaFibRecurrence target,
                      InitialCondition initial);

}  // namespace metafib
