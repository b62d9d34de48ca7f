#pragma once

/*
 * Certified enclosures of elementary real functions.
 *
 * Every function returns an interval that provably contains the exact value;
 * `prec` controls the target width (roughly 2^-prec for well-conditioned
 * inputs).  Enclosures are computed from truncated series with explicit
 * rational tail bounds -- no floating point is involved anywhere.
 */

#include "flagsolve/interval.hpp"

namespace flagsolve {

/// Enclosure of pi (Machin's formula).  Cached per precision.
RatInterval pi_enclosure(unsigned prec);

/// Enclosure of log 2.  Cached per precision.
RatInterval log2_enclosure(unsigned prec);

/// Enclosure of sqrt over x; requires x.lo() >= 0.
RatInterval sqrt_enclosure(const RatInterval& x, unsigned prec);

/// Enclosure of log over x; requires x.lo() > 0.
RatInterval log_enclosure(const RatInterval& x, unsigned prec);

/// Enclosure of arctan over x.
RatInterval atan_enclosure(const RatInterval& x, unsigned prec);

/// Enclosure of atan2(y, x), principal value in (-pi, pi].  Throws
/// std::domain_error if the box cannot be placed in a half-plane well enough
/// to resolve the branch (e.g. it contains the origin); callers should refine
/// the box and retry.
RatInterval atan2_enclosure(const RatInterval& y, const RatInterval& x, unsigned prec);

/// Principal branch of log z; requires |z|^2 provably positive and the box
/// not to straddle the branch cut (throws std::domain_error otherwise).
ComplexBox complex_log_enclosure(const ComplexBox& z, unsigned prec);

}  // namespace flagsolve
