#pragma once

// Kernel model: finite sums h(t) = sum_m P_m(t) e^{-alpha_m t} on the
// half-line, restricted to the self-adjoint class. Canonical storage keeps
// real-exponent terms and one representative per conjugate pair (Im alpha > 0,
// the partner being implicit), so the represented kernel is always real.

#include "hankel/polynomial.hpp"
#include "hankel/scalar.hpp"

#include <complex>
#include <vector>

namespace hankel {

/// One summand P(t) e^{-alpha t}; requires Re(alpha) > 0.
struct KernelTerm {
    Complex alpha;
    Poly poly;

    friend bool operator==(const KernelTerm& a, const KernelTerm& b) {
        return a.alpha == b.alpha && a.poly == b.poly;
    }
};

class HankelKernel {
  public:
    HankelKernel() = default;

    /// Normalizes an explicit term list: merges duplicate exponents, drops
    /// zero polynomials, pairs complex exponents with their conjugates, and
    /// orders terms deterministically. Throws Error(InvalidExponent) or
    /// Error(NotSelfAdjoint).
    static HankelKernel canonicalize(const std::vector<KernelTerm>& terms);

    const std::vector<KernelTerm>& real_terms() const { return real_; }
    const std::vector<KernelTerm>& pair_terms() const { return pair_; }
    bool empty() const { return real_.empty() && pair_.empty(); }

    /// Operator rank: sum over all terms (pair members counted separately)
    /// of deg P + 1.
    unsigned rank() const;

    /// K_m-th derivative of P_m (= K_m! times the top coefficient), real
    /// terms first, then pair representatives.
    std::vector<Complex> leading_coefficients() const;

    /// Full term list with conjugate partners made explicit.
    std::vector<KernelTerm> expanded_terms() const;

    /// Floating-point spot evaluation of h(t) (includes implicit partners).
    std::complex<double> evaluate(double t) const;

    friend bool operator==(const HankelKernel& a, const HankelKernel& b) {
        return a.real_ == b.real_ && a.pair_ == b.pair_;
    }
    friend bool operator!=(const HankelKernel& a, const HankelKernel& b) { return !(a == b); }

  private:
    std::vector<KernelTerm> real_;  // Im(alpha) = 0, real coefficients
    std::vector<KernelTerm> pair_;  // Im(alpha) > 0, conjugate partner implicit
};

/// Kernel scaled by a real constant c (c = 0 gives the empty kernel).
HankelKernel scale_kernel(const HankelKernel& k, const Rational& c);

}  // namespace hankel
