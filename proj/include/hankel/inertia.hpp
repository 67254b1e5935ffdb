#pragma once

// Inertia computations: closed-form counts for sign-matrix blocks and whole
// kernels, an exact congruence-based Hermitian inertia (no eigenvalues), and
// a float eigensolver fallback used for cross-checks.

#include "hankel/kernel.hpp"
#include "hankel/matrix.hpp"
#include "hankel/sign_calculus.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace hankel {

/// Per-term contribution to the totals.
struct TermInertia {
    enum class Kind { Real, Pair };
    Kind kind;
    unsigned K;
    long n_plus;
    long n_minus;
};

struct InertiaReport {
    long n_plus = 0;
    long n_minus = 0;
    long n_zero = 0;
    std::string method;  // "closed-form" | "numeric" | "oracle"
    std::vector<TermInertia> breakdown;

    long rank() const { return n_plus + n_minus; }
};

/// Counts for one real term of degree K with sign(p) = p_sign in {+1,-1}:
/// odd K -> ((K+1)/2, (K+1)/2); even K -> (K/2+1, K/2) or (K/2, K/2+1).
std::pair<long, long> real_term_counts(unsigned K, int p_sign);

struct SkewDiagonalResult {
    std::vector<double> eigenvalues;  // +-|s_{j,K-j}| (and the center for even K)
    InertiaReport report;
};

/// Inertia of a Hermitian matrix supported on the anti-diagonal only.
SkewDiagonalResult skew_diagonal_inertia(const CMat& S0);

/// Closed-form inertia of a Hermitian skew-triangular matrix with nonzero
/// anti-diagonal: determined by the parity of K and, for even K, the sign of
/// the central entry. No eigen-decomposition.
InertiaReport skew_triangular_inertia(const CMat& S);

/// (K+1, K+1) for a pair block with invertible inner matrix.
InertiaReport pair_block_inertia(const SignMatrixBlock& block);

/// Closed-form operator counts with per-term breakdown; method="closed-form".
InertiaReport kernel_inertia(const HankelKernel& k);

/// Float eigensolve counts with a relative zero threshold; method="numeric".
InertiaReport numeric_inertia(const Eigen::MatrixXcd& M, double zero_tol = 1e-9);

/// Exact inertia of a Hermitian rational matrix by congruence with 1x1 and
/// 2x2 pivots (Sylvester); no tolerances. method is left empty.
InertiaReport exact_hermitian_inertia(const CMat& A);

/// Predicted negative count of the Carleman operator perturbed by v.
long perturbed_negative_count(const HankelKernel& v);

}  // namespace hankel
