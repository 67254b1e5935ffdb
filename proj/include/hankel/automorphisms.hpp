#pragma once

// Symmetries that permute finite-rank Hankel operators: dilations of the
// half-line / line / circle pictures, the inversion lambda -> -1/lambda, and
// the parity flip of the moment sequence.  All act by exact arithmetic and
// preserve both counts.

#include "hankel/kernel.hpp"
#include "hankel/representations.hpp"
#include "hankel/scalar.hpp"

namespace hankel {

/// h(t) -> h(t/rho) up to the canonical exponent scaling: the term
/// P(t) e^{-alpha t} maps to P(t/rho) e^{-(alpha/rho) t}.  Requires rho > 0.
HankelKernel dilate_kernel(const HankelKernel& k, const Rational& rho);

/// phi(lambda) -> rho * phi(rho * lambda); the exact companion of
/// dilate_kernel (the squares with kernel_to_line_symbol commute).
LineSymbol dilate_line_symbol(const LineSymbol& phi, const Rational& rho);

/// phi(lambda) -> -phi(-1/lambda), reprojected onto the canonical pole terms;
/// an involution exchanging the poles alpha <-> 1/alpha.
LineSymbol involute_line_symbol(const LineSymbol& phi);

/// The disc automorphism conjugate to dilate_line_symbol:
/// omega -> rho * (m(z)/z) * omega(m(z)) with m(z) = (z + t)/(t z + 1),
/// t = (rho - 1)/(rho + 1), reprojected canonically.  Requires rho > 0.
CircleSymbol circle_dilation(const CircleSymbol& omega, const Rational& rho);

/// kappa_n -> (-1)^n kappa_n: tau_n -> (-1)^n tau_n and q -> -q.
SequenceRep sequence_parity(const SequenceRep& kappa);

}  // namespace hankel
