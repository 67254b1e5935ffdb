#include "hankel/carleman.hpp"

#include "hankel/error.hpp"
#include "hankel/inertia.hpp"

#include <algorithm>
#include <cmath>

namespace hankel {

Rational carleman_element(unsigned long n) {
    if (n % 2 != 0) return Rational(0);
    return Rational(2) / Rational(n + 1);
}

Eigen::MatrixXd truncated_matrix(const SequenceRep& perturbation, unsigned n) {
    if (n == 0) {
        throw Error(ErrorCode::ShapeViolation, "truncation size must be positive");
    }
    std::vector<double> moments(2 * static_cast<std::size_t>(n) - 1);
    for (std::size_t m = 0; m < moments.size(); ++m) {
        moments[m] = to_double(carleman_element(m)) + sequence_element_f(perturbation, m);
    }
    Eigen::MatrixXd M(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) M(i, j) = moments[static_cast<std::size_t>(i) + j];
    return M;
}

TruncationExperiment negative_count_experiment(const HankelKernel& perturbation,
                                               const std::vector<unsigned>& sizes,
                                               double tol) {
    if (sizes.empty() || !std::is_sorted(sizes.begin(), sizes.end())) {
        throw Error(ErrorCode::MalformedInput, "sizes must be non-empty and ascending");
    }
    const SequenceRep seq = kernel_to_sequence(perturbation);

    TruncationExperiment out;
    out.sizes = sizes;
    out.predicted = perturbed_negative_count(perturbation);
    for (unsigned n : sizes) {
        const Eigen::MatrixXd M = truncated_matrix(seq, n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw Error(ErrorCode::IllConditioned, "eigensolver failed on a truncation");
        }
        const auto& ev = solver.eigenvalues();
        const double norm = std::max(std::abs(ev[0]), std::abs(ev[ev.size() - 1]));
        long count = 0;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev[i] < -tol * norm) ++count;
        }
        out.counts.push_back(count);
    }
    return out;
}

}  // namespace hankel
