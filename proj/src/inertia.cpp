#include "hankel/inertia.hpp"

#include "hankel/error.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace hankel {

namespace {

double abs_c(const Complex& z) { return std::sqrt(to_double(norm2(z))); }

// Validates the Hermitian skew-triangular shape (zero strictly below the
// anti-diagonal, nonzero on it) and returns the order.
std::size_t check_skew_triangular(const CMat& S) {
    const std::size_t n = S.rows();
    if (n == 0 || S.cols() != n) {
        throw Error(ErrorCode::ShapeViolation, "matrix must be square and non-empty");
    }
    if (!S.is_hermitian()) {
        throw Error(ErrorCode::NonHermitian, "matrix is not Hermitian");
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            if (j + l >= n && !S.at(j, l).is_zero()) {
                throw Error(ErrorCode::ShapeViolation,
                            "nonzero entry below the anti-diagonal");
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (S.at(j, n - 1 - j).is_zero()) {
            throw Error(ErrorCode::SingularSkewDiagonal, "anti-diagonal entry vanishes");
        }
    }
    return n;
}

// Counts for an order-n Hermitian matrix whose anti-diagonal is nonzero and
// which is congruent to its pure anti-diagonal part.
std::pair<long, long> skew_counts(const CMat& S, std::size_t n) {
    const long pairs = static_cast<long>(n / 2);
    long p = pairs, m = pairs;
    if (n % 2 == 1) {
        const Complex& center = S.at(n / 2, n / 2);
        // Hermitian diagonal entry: exactly real.
        if (center.re > 0) {
            ++p;
        } else {
            ++m;
        }
    }
    return {p, m};
}

}  // namespace

std::pair<long, long> real_term_counts(unsigned K, int p_sign) {
    if (K % 2 == 1) {
        const long half = (static_cast<long>(K) + 1) / 2;
        return {half, half};
    }
    if (p_sign > 0) return {static_cast<long>(K) / 2 + 1, static_cast<long>(K) / 2};
    if (p_sign < 0) return {static_cast<long>(K) / 2, static_cast<long>(K) / 2 + 1};
    throw Error(ErrorCode::DegenerateLeading, "leading coefficient sign must be nonzero");
}

SkewDiagonalResult skew_diagonal_inertia(const CMat& S0) {
    const std::size_t n = S0.rows();
    if (n == 0 || S0.cols() != n) {
        throw Error(ErrorCode::ShapeViolation, "matrix must be square and non-empty");
    }
    if (!S0.is_hermitian()) {
        throw Error(ErrorCode::NonHermitian, "matrix is not Hermitian");
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            if (j + l != n - 1 && !S0.at(j, l).is_zero()) {
                throw Error(ErrorCode::ShapeViolation, "entry off the anti-diagonal is nonzero");
            }
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (S0.at(j, n - 1 - j).is_zero()) {
            throw Error(ErrorCode::SingularSkewDiagonal, "anti-diagonal entry vanishes");
        }
    }

    SkewDiagonalResult result;
    for (std::size_t j = 0; j < n / 2; ++j) {
        const double a = abs_c(S0.at(j, n - 1 - j));
        result.eigenvalues.push_back(a);
        result.eigenvalues.push_back(-a);
    }
    if (n % 2 == 1) result.eigenvalues.push_back(to_double(S0.at(n / 2, n / 2).re));
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end());

    auto [p, m] = skew_counts(S0, n);
    result.report.n_plus = p;
    result.report.n_minus = m;
    result.report.method = "closed-form";
    return result;
}

InertiaReport skew_triangular_inertia(const CMat& S) {
    const std::size_t n = check_skew_triangular(S);
    auto [p, m] = skew_counts(S, n);
    InertiaReport r;
    r.n_plus = p;
    r.n_minus = m;
    r.method = "closed-form";
    return r;
}

InertiaReport pair_block_inertia(const SignMatrixBlock& block) {
    if (block.kind != SignMatrixBlock::Kind::Pair) {
        throw Error(ErrorCode::ShapeViolation, "block is not a conjugate-pair block");
    }
    const std::size_t n2 = block.entries.rows();
    if (n2 == 0 || n2 % 2 != 0 || block.entries.cols() != n2) {
        throw Error(ErrorCode::ShapeViolation, "pair block must have even positive order");
    }
    const std::size_t n = n2 / 2;
    CMat inner(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inner.at(i, j) = block.entries.at(n + i, j);
    const CMat adj = inner.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!block.entries.at(i, j).is_zero() || !block.entries.at(n + i, n + j).is_zero() ||
                block.entries.at(i, n + j) != adj.at(i, j)) {
                throw Error(ErrorCode::ShapeViolation, "block is not of the form [[0, S*],[S, 0]]");
            }
        }
    }
    // Exact invertibility of the inner matrix via Gaussian elimination.
    CMat W = inner;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && W.at(piv, col).is_zero()) ++piv;
        if (piv == n) {
            throw Error(ErrorCode::SingularBlock, "inner matrix of the pair block is singular");
        }
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) std::swap(W.at(piv, j), W.at(col, j));
        for (std::size_t i = col + 1; i < n; ++i) {
            const Complex f = W.at(i, col) / W.at(col, col);
            for (std::size_t j = col; j < n; ++j) W.at(i, j) -= f * W.at(col, j);
        }
    }

    InertiaReport r;
    r.n_plus = static_cast<long>(n);
    r.n_minus = static_cast<long>(n);
    r.method = "closed-form";
    r.breakdown.push_back(
        {TermInertia::Kind::Pair, block.degree(), static_cast<long>(n), static_cast<long>(n)});
    return r;
}

InertiaReport kernel_inertia(const HankelKernel& k) {
    InertiaReport r;
    r.method = "closed-form";
    for (const auto& t : k.real_terms()) {
        const unsigned K = static_cast<unsigned>(t.poly.degree());
        const Rational lead = t.poly.leading().re;  // canonical real term
        const int sign = lead > 0 ? 1 : (lead < 0 ? -1 : 0);
        auto [p, m] = real_term_counts(K, sign);
        r.n_plus += p;
        r.n_minus += m;
        r.breakdown.push_back({TermInertia::Kind::Real, K, p, m});
    }
    for (const auto& t : k.pair_terms()) {
        const unsigned K = static_cast<unsigned>(t.poly.degree());
        const long c = static_cast<long>(K) + 1;
        r.n_plus += c;
        r.n_minus += c;
        r.breakdown.push_back({TermInertia::Kind::Pair, K, c, c});
    }
    return r;
}

InertiaReport numeric_inertia(const Eigen::MatrixXcd& M, double zero_tol) {
    if (M.rows() != M.cols()) {
        throw Error(ErrorCode::ShapeViolation, "matrix must be square");
    }
    const double scale = M.norm();
    if ((M - M.adjoint()).norm() > 1e-12 * std::max(1.0, scale)) {
        throw Error(ErrorCode::NonHermitian, "matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        ((M + M.adjoint()) / 2.0).eval(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::IllConditioned, "eigensolver failed to converge");
    }
    const auto& ev = solver.eigenvalues();
    double top = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) top = std::max(top, std::abs(ev[i]));
    const double cut = zero_tol * top;
    InertiaReport r;
    r.method = "numeric";
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > cut) {
            ++r.n_plus;
        } else if (ev[i] < -cut) {
            ++r.n_minus;
        } else {
            ++r.n_zero;
        }
    }
    return r;
}

InertiaReport exact_hermitian_inertia(const CMat& A) {
    const std::size_t n = A.rows();
    if (A.cols() != n) {
        throw Error(ErrorCode::ShapeViolation, "matrix must be square");
    }
    if (!A.is_hermitian()) {
        throw Error(ErrorCode::NonHermitian, "matrix is not Hermitian");
    }
    CMat W = A;
    InertiaReport r;

    auto swap_sym = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(W.at(a, j), W.at(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(W.at(i, a), W.at(i, b));
    };

    std::size_t off = 0;
    while (off < n) {
        // Prefer a nonzero diagonal pivot in the active block.
        std::size_t piv = n;
        for (std::size_t i = off; i < n; ++i) {
            if (!W.at(i, i).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv != n) {
            swap_sym(off, piv);
            const Rational d = W.at(off, off).re;  // Hermitian diagonal is real
            if (d > 0) {
                ++r.n_plus;
            } else {
                ++r.n_minus;
            }
            const Complex pivot = W.at(off, off);
            for (std::size_t i = off + 1; i < n; ++i) {
                if (W.at(i, off).is_zero()) continue;
                const Complex f = W.at(i, off) / pivot;
                for (std::size_t j = off + 1; j < n; ++j) {
                    W.at(i, j) -= f * W.at(off, j);
                }
                W.at(i, off) = Complex(0);
            }
            for (std::size_t j = off + 1; j < n; ++j) W.at(off, j) = Complex(0);
            ++off;
            continue;
        }
        // All active diagonal entries are zero: find any off-diagonal entry.
        std::size_t bi = n, bj = n;
        for (std::size_t i = off; i < n && bi == n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!W.at(i, j).is_zero()) {
                    bi = i;
                    bj = j;
                    break;
                }
            }
        }
        if (bi == n) {
            r.n_zero += static_cast<long>(n - off);
            break;
        }
        swap_sym(off, bi);
        swap_sym(off + 1, bj == off ? bi : bj);
        // Active 2x2 corner is [[0, c],[conj(c), 0]]: one positive and one
        // negative direction; eliminate with its exact inverse.
        const Complex c = W.at(off, off + 1);
        ++r.n_plus;
        ++r.n_minus;
        const Complex cbar = conj(c);
        for (std::size_t i = off + 2; i < n; ++i) {
            const Complex u = W.at(i, off);      // column against row `off`
            const Complex v = W.at(i, off + 1);  // column against row `off+1`
            if (u.is_zero() && v.is_zero()) continue;
            for (std::size_t j = off + 2; j < n; ++j) {
                // Schur complement of the 2x2 pivot.
                W.at(i, j) -= v * W.at(off, j) / c + u * W.at(off + 1, j) / cbar;
            }
            W.at(i, off) = Complex(0);
            W.at(i, off + 1) = Complex(0);
        }
        for (std::size_t j = off + 2; j < n; ++j) {
            W.at(off, j) = Complex(0);
            W.at(off + 1, j) = Complex(0);
        }
        off += 2;
    }
    return r;
}

long perturbed_negative_count(const HankelKernel& v) { return kernel_inertia(v).n_minus; }

}  // namespace hankel
