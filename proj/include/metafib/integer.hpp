#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace metafib {

// Sequence values are exact unbounded integers; they grow exponentially, so
// fixed-width arithmetic is never used for terms.
using Int = mpz_class;

// Sequence positions. Tables are addressed by 64-bit indices even though
// values themselves are unbounded.
using Index = std::int64_t;

}  // namespace metafib
