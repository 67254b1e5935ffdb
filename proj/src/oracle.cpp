#include "hankel/oracle.hpp"

#include "hankel/error.hpp"

#include <map>

namespace hankel {

namespace {

Complex int_c(const Integer& n) { return Complex(Rational(n)); }

struct ComplexLess {
    bool operator()(const Complex& a, const Complex& b) const { return lex_less(a, b); }
};

CMat multiply(const CMat& A, const CMat& B) {
    CMat C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Complex& a = A.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) {
                if (B.at(k, j).is_zero()) continue;
                C.at(i, j) += a * B.at(k, j);
            }
        }
    }
    return C;
}

}  // namespace

SeparableExpansion separable_expansion(const HankelKernel& k) {
    const std::vector<KernelTerm> terms = k.expanded_terms();

    SeparableExpansion E;
    std::vector<std::size_t> offset(terms.size(), 0);
    std::map<Complex, std::size_t, ComplexLess> term_of_alpha;
    for (std::size_t m = 0; m < terms.size(); ++m) {
        offset[m] = E.basis.size();
        term_of_alpha[terms[m].alpha] = m;
        const unsigned K = static_cast<unsigned>(terms[m].poly.degree());
        for (unsigned a = 0; a <= K; ++a) E.basis.push_back({a, terms[m].alpha});
    }

    E.A = CMat(E.basis.size(), E.basis.size());
    for (std::size_t m = 0; m < terms.size(); ++m) {
        // Rows live on the conjugate exponent's basis block.
        const auto it = term_of_alpha.find(conj(terms[m].alpha));
        if (it == term_of_alpha.end()) {
            throw Error(ErrorCode::NotSelfAdjoint, "term list is not conjugation-closed");
        }
        const std::size_t row_block = offset[it->second];
        const std::size_t col_block = offset[m];
        const unsigned K = static_cast<unsigned>(terms[m].poly.degree());
        for (unsigned kk = 0; kk <= K; ++kk) {
            const Complex p = terms[m].poly.coeff(kk);
            if (p.is_zero()) continue;
            for (unsigned a = 0; a <= kk; ++a) {
                E.A.at(row_block + a, col_block + (kk - a)) += int_c(binomial(kk, a)) * p;
            }
        }
    }
    if (!E.A.is_hermitian()) {
        throw Error(ErrorCode::NotSelfAdjoint, "expansion matrix is not Hermitian");
    }
    return E;
}

CMat gram_matrix(const std::vector<BasisFunction>& basis) {
    const std::size_t n = basis.size();
    CMat G(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (basis[i].alpha.re <= 0) {
            throw Error(ErrorCode::InvalidExponent, "basis exponent must have positive real part");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const unsigned s = basis[i].a + basis[j].a;
            G.at(i, j) =
                int_c(factorial(s)) / pow(conj(basis[i].alpha) + basis[j].alpha,
                                          static_cast<long>(s) + 1);
        }
    }
    const InertiaReport r = exact_hermitian_inertia(G);
    if (r.n_plus != static_cast<long>(n)) {
        throw Error(ErrorCode::SingularBlock, "Gram matrix is not positive definite");
    }
    return G;
}

InertiaReport oracle_inertia(const HankelKernel& k) {
    InertiaReport r = exact_hermitian_inertia(separable_expansion(k).A);
    r.method = "oracle";
    return r;
}

std::vector<double> nonzero_spectrum(const HankelKernel& k) {
    const SeparableExpansion E = separable_expansion(k);
    const std::size_t n = E.basis.size();
    if (n == 0) return {};

    const CMat G = gram_matrix(E.basis);
    CMat W(n, n);  // bilinear pairing of the basis functions (no conjugation)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const unsigned s = E.basis[i].a + E.basis[j].a;
            W.at(i, j) = int_c(factorial(s)) /
                         pow(E.basis[i].alpha + E.basis[j].alpha, static_cast<long>(s) + 1);
        }
    }
    const CMat B = multiply(multiply(W.adjoint(), E.A), W);

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        B.to_eigen(), G.to_eigen(), Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::IllConditioned, "generalized eigensolver failed");
    }
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace hankel
