#pragma once

// Seeded random model generators. Drawing uses only mt19937_64 outputs with
// explicit arithmetic, so a given seed produces the same models on every
// platform.

#include "hankel/kernel.hpp"
#include "hankel/scalar.hpp"

#include <random>

namespace hankel {

struct KernelBounds {
    unsigned max_real_terms = 3;
    unsigned max_pair_terms = 2;
    unsigned max_degree = 4;
    long max_numerator = 9;  // coefficient numerators drawn from [-9, 9]
};

/// Random self-adjoint kernel with at least one term, distinct exponents.
HankelKernel random_kernel(std::mt19937_64& rng, const KernelBounds& bounds = {});

/// Random non-negative kernel: positive combination of plain decaying
/// exponentials (every term has degree 0 and a positive coefficient).
HankelKernel random_positive_kernel(std::mt19937_64& rng, unsigned max_terms = 5);

}  // namespace hankel
