#pragma once

/*
 * Guaranteed enclosures of the constants and the one transcendental
 * function the evaluation pipeline needs.
 *
 * pi comes from Machin's formula pi = 16 atan(1/5) - 4 atan(1/239); each
 * arctangent is bracketed by consecutive partial sums of its alternating
 * series, so refining the precision yields nested enclosures.
 *
 * exp is a degree-`terms` Taylor polynomial evaluated in rectangle
 * arithmetic, inflated by the explicit remainder majorant
 *   s^(terms+1)/(terms+1)! * 1/(1 - s/(terms+2)),   s >= sup|z|,
 * which is finite whenever s < terms + 2.
 */

#include "enzeros/enclosure.hpp"

namespace enz {

// Enclosure of pi with width <= 2^-bits.  Requires bits >= 8.
RealEnclosure enclose_pi(unsigned bits);

// Enclosure of sqrt(3) with width <= 2^-bits.  Requires bits >= 8.
RealEnclosure enclose_sqrt3(unsigned bits);

// Sound enclosure of e^z.  Throws RemainderDiverges when sup|z| >= terms+2.
// `round_bits` controls outward rounding of intermediates (0 = exact).
ComplexEnclosure exp_enclosure(const ComplexEnclosure& z, unsigned terms,
                               unsigned round_bits = 0);

}  // namespace enz
