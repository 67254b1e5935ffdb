#pragma once

// The four equivalent descriptions of a finite-rank self-adjoint Hankel
// operator and the exact conversions between them:
//   kernel on the half-line  <->  rational symbol on the line
//                            <->  rational symbol on the circle
//                            <->  moment sequence kappa_n.
// Symbols are stored canonically: no component in the complementary Hardy
// class (line: bounded-analytic in the lower half-plane parts are dropped,
// including constants; circle: poles inside the closed unit disc are dropped,
// constants are kept since the complementary class decays at infinity).

#include "hankel/inertia.hpp"
#include "hankel/kernel.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scalar.hpp"

#include <vector>

namespace hankel {

/// One term Q(z) (alpha - iz)^{-K-1} with deg Q <= K and Q(-i alpha) != 0.
struct LineTerm {
    Complex alpha;
    unsigned K = 0;
    Poly Q;

    friend bool operator==(const LineTerm& a, const LineTerm& b) {
        return a.alpha == b.alpha && a.K == b.K && a.Q == b.Q;
    }
};

class LineSymbol {
  public:
    LineSymbol() = default;
    /// Accepts the full term list (conjugate partners explicit), merges
    /// duplicate poles, trims degenerate leading data, verifies the
    /// self-adjointness relations, and orders terms deterministically.
    static LineSymbol canonicalize(const std::vector<LineTerm>& terms);

    const std::vector<LineTerm>& real_terms() const { return real_; }
    const std::vector<LineTerm>& pair_terms() const { return pair_; }
    bool empty() const { return real_.empty() && pair_.empty(); }
    std::vector<LineTerm> expanded_terms() const;

    friend bool operator==(const LineSymbol& a, const LineSymbol& b) {
        return a.real_ == b.real_ && a.pair_ == b.pair_;
    }
    friend bool operator!=(const LineSymbol& a, const LineSymbol& b) { return !(a == b); }

  private:
    std::vector<LineTerm> real_;  // alpha real; coefficients q_j with conj(q_j) = (-1)^j q_j
    std::vector<LineTerm> pair_;  // Im(alpha) > 0; partner (conj alpha, conj-reflected Q) implicit
};

/// One pole term R(z) (z - gamma)^{-K-1} with |gamma| > 1, deg R <= K,
/// R(gamma) != 0.
struct CirclePole {
    Complex gamma;
    unsigned K = 0;
    Poly R;

    friend bool operator==(const CirclePole& a, const CirclePole& b) {
        return a.gamma == b.gamma && a.K == b.K && a.R == b.R;
    }
};

class CircleSymbol {
  public:
    CircleSymbol() = default;
    static CircleSymbol canonicalize(const Poly& polynomial_part,
                                     const std::vector<CirclePole>& poles);

    const Poly& polynomial_part() const { return poly_; }
    const std::vector<CirclePole>& real_poles() const { return real_; }
    const std::vector<CirclePole>& pair_poles() const { return pair_; }
    bool empty() const { return poly_.is_zero() && real_.empty() && pair_.empty(); }
    std::vector<CirclePole> expanded_poles() const;

    /// Value of the symbol at a point (float; used for tail-sum checks).
    std::complex<double> evaluate(std::complex<double> zeta) const;

    friend bool operator==(const CircleSymbol& a, const CircleSymbol& b) {
        return a.poly_ == b.poly_ && a.real_ == b.real_ && a.pair_ == b.pair_;
    }
    friend bool operator!=(const CircleSymbol& a, const CircleSymbol& b) { return !(a == b); }

  private:
    Poly poly_;                      // real coefficients
    std::vector<CirclePole> real_;   // gamma real, R real
    std::vector<CirclePole> pair_;   // Im(gamma) < 0; partner (conj gamma, conj R) implicit
};

/// One geometric term T(n) q^n with 0 < |q| < 1; the degree of T is exact.
struct GeometricTerm {
    Complex q;
    Poly T;  // polynomial in n

    friend bool operator==(const GeometricTerm& a, const GeometricTerm& b) {
        return a.q == b.q && a.T == b.T;
    }
};

class SequenceRep {
  public:
    SequenceRep() = default;
    static SequenceRep canonicalize(const std::vector<Rational>& tau,
                                    const std::vector<GeometricTerm>& geometric);

    const std::vector<Rational>& tau() const { return tau_; }
    const std::vector<GeometricTerm>& real_terms() const { return real_; }
    const std::vector<GeometricTerm>& pair_terms() const { return pair_; }
    bool empty() const { return tau_.empty() && real_.empty() && pair_.empty(); }
    std::vector<GeometricTerm> expanded_terms() const;

    friend bool operator==(const SequenceRep& a, const SequenceRep& b) {
        return a.tau_ == b.tau_ && a.real_ == b.real_ && a.pair_ == b.pair_;
    }
    friend bool operator!=(const SequenceRep& a, const SequenceRep& b) { return !(a == b); }

  private:
    std::vector<Rational> tau_;        // finite head, trailing zeros trimmed
    std::vector<GeometricTerm> real_;  // q real, T real
    std::vector<GeometricTerm> pair_;  // Im(q) > 0; partner (conj q, conj T) implicit
};

HankelKernel line_symbol_to_kernel(const LineSymbol& phi);
LineSymbol kernel_to_line_symbol(const HankelKernel& k);
LineSymbol circle_to_line(const CircleSymbol& omega);
CircleSymbol line_to_circle(const LineSymbol& phi);
SequenceRep circle_to_sequence(const CircleSymbol& omega);
CircleSymbol sequence_to_circle(const SequenceRep& kappa);

/// kappa_n evaluated exactly.
Complex sequence_element(const SequenceRep& kappa, unsigned long n);
/// kappa_n in floating point (for large-n numeric work).
double sequence_element_f(const SequenceRep& kappa, unsigned long n);

/// Convenience compositions of the primitive conversions.
HankelKernel circle_to_kernel(const CircleSymbol& omega);
HankelKernel sequence_to_kernel(const SequenceRep& kappa);
CircleSymbol kernel_to_circle(const HankelKernel& k);
SequenceRep kernel_to_sequence(const HankelKernel& k);

/// Counts from the representation's native leading data (no conversion to the
/// kernel), cross-checked internally against the kernel route.
InertiaReport inertia_in_representation(const LineSymbol& phi);
InertiaReport inertia_in_representation(const CircleSymbol& omega);
InertiaReport inertia_in_representation(const SequenceRep& kappa);

}  // namespace hankel
