#pragma once

#include <span>

#include "lgrowth/numerics.hpp"

namespace lgrowth {

// Closed-polyline sums used by the M-function and the harmonic moments.
// Each segment is integrated exactly with |Im z'| linear along it (segments
// crossing the real axis are split). The parallel versions sum fixed chunks
// and combine them in order, so results do not depend on the thread count.

/// Integral of |Im z'| dz' / (z' - z) over the closed polyline.
cplx cauchy_polyline(std::span<const cplx> trace, cplx z);
cplx cauchy_polyline_serial(std::span<const cplx> trace, cplx z);

/// Integral of |Im z'| z'^(-k) dz' over the closed polyline, k >= 2.
/// The polyline must not pass through 0.
cplx moment_polyline(std::span<const cplx> trace, int k);
cplx moment_polyline_serial(std::span<const cplx> trace, int k);

}  // namespace lgrowth
