#pragma once

// Finite sections of the (unbounded, non-negative) moment matrix of 1/t
// perturbed by a finite-rank kernel.  The negative spectrum of the truncations
// is controlled by the negative count of the perturbation alone.

#include "hankel/kernel.hpp"
#include "hankel/representations.hpp"
#include "hankel/scalar.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hankel {

/// Moment sequence of the unperturbed part: 2/(n+1) for even n, 0 for odd n.
Rational carleman_element(unsigned long n);

/// N x N section of the perturbed moment matrix: entry (i, j) is
/// carleman_element(i + j) + kappa_{i+j} for the perturbation's sequence.
Eigen::MatrixXd truncated_matrix(const SequenceRep& perturbation, unsigned n);

struct TruncationExperiment {
    std::vector<unsigned> sizes;
    std::vector<long> counts;  // eigenvalues below -tol * ||section|| per size
    long predicted = 0;        // negative count of the perturbation kernel
};

/// Runs the truncation sizes in ascending order and compares against the
/// closed-form prediction for the perturbation.
TruncationExperiment negative_count_experiment(const HankelKernel& perturbation,
                                               const std::vector<unsigned>& sizes,
                                               double tol = 1e-9);

}  // namespace hankel
