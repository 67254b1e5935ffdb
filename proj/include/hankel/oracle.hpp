#pragma once

// Independent finite-rank reference model: expand the kernel over the basis
// t^a e^{-alpha t}, carry the quadratic form's coefficient matrix A exactly,
// and read the counts from A by Sylvester's law.  Shares nothing with the
// closed-form counting path except the kernel type itself.

#include "hankel/inertia.hpp"
#include "hankel/kernel.hpp"
#include "hankel/matrix.hpp"
#include "hankel/scalar.hpp"

#include <utility>
#include <vector>

namespace hankel {

/// Basis function t^a e^{-alpha t} on the half-line.
struct BasisFunction {
    unsigned a = 0;
    Complex alpha;
};

struct SeparableExpansion {
    std::vector<BasisFunction> basis;
    CMat A;  // Hermitian coefficient matrix of the quadratic form
};

/// Exact bilinear expansion of the kernel: (H f, f) = sum A_ij conj(v_i) v_j
/// where v_i integrates f against the i-th basis function.
SeparableExpansion separable_expansion(const HankelKernel& k);

/// Exact Gram matrix <b_j, b_i> = (a_i + a_j)! / (conj(alpha_i) + alpha_j)^{a_i+a_j+1};
/// verified positive definite.
CMat gram_matrix(const std::vector<BasisFunction>& basis);

/// Exact counts of the operator via the expansion matrix A.
InertiaReport oracle_inertia(const HankelKernel& k);

/// All nonzero eigenvalues of the operator, ascending (floating point).
std::vector<double> nonzero_spectrum(const HankelKernel& k);

}  // namespace hankel
