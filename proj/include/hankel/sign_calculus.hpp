#pragma once

// Sign calculus: the distributional sign-function of a finite-rank kernel is
// a finite combination of shifted delta-derivatives; its action on jets of
// test functions is encoded by finite Hermitian "sign-matrix" blocks. This
// header provides the forward maps (kernel -> atoms -> blocks), the exact
// quadratic-form evaluations, and the inverse maps back to kernel terms.

#include "hankel/kernel.hpp"
#include "hankel/matrix.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scalar.hpp"

#include <complex>
#include <vector>

namespace hankel {

/// One atom q_0 delta(x-beta) + ... + q_K delta^{(K)}(x-beta). The location
/// is kept exactly through alpha = e^{-beta}; beta itself is derived display
/// data. q.back() != 0.
struct SignAtom {
    Complex alpha;
    std::vector<Complex> q;

    /// -log(alpha), principal branch (float display metadata).
    std::complex<double> beta() const;
};

struct SignMatrixBlock {
    enum class Kind { Real, Pair };
    Kind kind;
    CMat entries;  // order K+1 (Real) or 2K+2 (Pair); Hermitian

    /// Degree parameter K recovered from the stored order.
    unsigned degree() const {
        std::size_t n = entries.rows();
        return kind == Kind::Real ? static_cast<unsigned>(n - 1)
                                  : static_cast<unsigned>(n / 2 - 1);
    }
};

struct SignMatrix {
    std::vector<SignMatrixBlock> blocks;

    unsigned total_order() const;
    /// Dense block-diagonal assembly (for numeric cross-checks).
    CMat dense() const;
};

/// Per-atom jet vectors u(beta), u'(beta), ..., u^{(K)}(beta), aligned with
/// the atom list of sign_distribution (pair terms contribute two consecutive
/// atoms, at beta and conj(beta)).
using JetSet = std::vector<std::vector<Complex>>;

/// Coefficients of (1-z)(2-z)...(k-z) in powers of z; [1] for k=0.
std::vector<Integer> nu_coefficients(unsigned k);

/// q_k = sum_{l=k}^{K} nu_{k,l} alpha^{-1-l} p_l for k = 0..K.
std::vector<Complex> q_coefficients(const Poly& P, const Complex& alpha);

/// All atoms of the kernel's sign-function, in canonical term order; each
/// pair term yields atoms at alpha and conj(alpha) with conjugate q-vectors.
std::vector<SignAtom> sign_distribution(const HankelKernel& k);

/// Skew-triangular symmetric block for a real term: entries
/// s_{j,l} = (-1)^{j+l} C(j+l, j) q_{j+l} for j+l <= K, zero otherwise.
SignMatrixBlock sign_matrix_real(const Poly& P, const Complex& alpha);

/// Hermitian block [[0, S*],[S, 0]] of order 2K+2 for a conjugate pair, with
/// S built from (P, alpha) exactly as in sign_matrix_real.
SignMatrixBlock sign_matrix_pair(const Poly& P, const Complex& alpha);

/// Block-diagonal sign-matrix of the kernel, real blocks first.
SignMatrix sign_matrix(const HankelKernel& k);

/// Quadratic form sum_m (S_m J_m u, J_m u); pair blocks consume the two
/// consecutive jet vectors at beta and conj(beta).
Complex evaluate_sign_form(const SignMatrix& S, const JetSet& jets);

/// The same form evaluated straight from the delta-derivative pairing
/// <s, |u|^2>; must agree exactly with evaluate_sign_form.
Complex distribution_pairing(const std::vector<SignAtom>& atoms, const JetSet& jets);

/// Exact inverse of q_coefficients (unique polynomial with the given q).
Poly recover_polynomial(const std::vector<Complex>& q, const Complex& alpha);

/// Validates the factorial-weighted anti-diagonal consistency of a block and
/// reconstructs its kernel term. Pair blocks are read through their
/// lower-left inner matrix S(P, alpha).
KernelTerm sign_matrix_to_kernel(const SignMatrixBlock& S, const Complex& alpha);

/// Closed-form evaluation of h(t) = int e^{-t e^{-x}} e^{-x} s(x) dx for a
/// self-adjoint atom family, by symbolic differentiation of the integrand;
/// exact inverse of sign_distribution.
HankelKernel reconstruct_kernel_from_sign(const std::vector<SignAtom>& atoms);

}  // namespace hankel
