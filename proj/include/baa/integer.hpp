#pragma once

#include <gmpxx.h>

namespace baa {

// Arbitrary precision integer used by every exact computation.
using Integer = mpz_class;

static_assert(sizeof(long) == 8, "line coordinates assume a 64-bit long");

inline Integer to_integer(long x) { return Integer(x); }

inline bool fits_long(const Integer& z) { return z.fits_slong_p(); }

}  // namespace baa
