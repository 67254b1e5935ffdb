#include "hankel/sign_calculus.hpp"

#include "hankel/error.hpp"

#include <complex>
#include <map>
#include <utility>

namespace hankel {

namespace {

Complex integer_c(const Integer& n) { return Complex(Rational(n)); }

// Inner (K+1)x(K+1) skew-triangular matrix built from the atom coefficients.
CMat inner_sign_matrix(const std::vector<Complex>& q) {
    const std::size_t n = q.size();
    const unsigned K = static_cast<unsigned>(n - 1);
    CMat S(n, n);
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned l = 0; l < n; ++l) {
            if (j + l > K) continue;
            Complex v = integer_c(binomial(j + l, j)) * q[j + l];
            S.at(j, l) = ((j + l) % 2 == 0) ? v : -v;
        }
    }
    return S;
}

// Splits a validated skew-triangular matrix back into atom coefficients.
std::vector<Complex> q_from_inner_matrix(const CMat& S) {
    const std::size_t n = S.rows();
    if (n == 0 || S.cols() != n) {
        throw Error(ErrorCode::ShapeViolation, "sign-matrix block must be square and non-empty");
    }
    const unsigned K = static_cast<unsigned>(n - 1);
    std::vector<Complex> q(n);
    for (unsigned k = 0; k <= K; ++k) {
        q[k] = (k % 2 == 0) ? S.at(0, k) : -S.at(0, k);
    }
    // Factorial-weighted entries must be constant along anti-diagonals and
    // vanish strictly below the skew diagonal.
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned l = 0; l < n; ++l) {
            Complex expected;
            if (j + l <= K) {
                expected = integer_c(binomial(j + l, j)) * q[j + l];
                if ((j + l) % 2 != 0) expected = -expected;
            }
            if (S.at(j, l) != expected) {
                throw Error(ErrorCode::NotSignMatrix,
                            "entries are not skew-triangular with binomial anti-diagonals");
            }
        }
    }
    if (q.back().is_zero()) {
        throw Error(ErrorCode::SingularSkewDiagonal, "skew-diagonal entry vanishes");
    }
    return q;
}

}  // namespace

std::complex<double> SignAtom::beta() const { return -std::log(to_std_complex(alpha)); }

unsigned SignMatrix::total_order() const {
    unsigned n = 0;
    for (const auto& b : blocks) n += static_cast<unsigned>(b.entries.rows());
    return n;
}

CMat SignMatrix::dense() const {
    const unsigned n = total_order();
    CMat D(n, n);
    unsigned off = 0;
    for (const auto& b : blocks) {
        const std::size_t m = b.entries.rows();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) D.at(off + i, off + j) = b.entries.at(i, j);
        off += static_cast<unsigned>(m);
    }
    return D;
}

std::vector<Integer> nu_coefficients(unsigned k) {
    std::vector<Integer> c{1};
    for (unsigned i = 1; i <= k; ++i) {
        // Multiply by (i - z).
        std::vector<Integer> next(c.size() + 1, Integer(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j] += Integer(i) * c[j];
            next[j + 1] -= c[j];
        }
        c = std::move(next);
    }
    return c;
}

std::vector<Complex> q_coefficients(const Poly& P, const Complex& alpha) {
    if (P.is_zero()) {
        throw Error(ErrorCode::DegenerateLeading, "zero polynomial has no atom coefficients");
    }
    if (alpha.re <= 0) {
        throw Error(ErrorCode::InvalidExponent, "exponent must have positive real part");
    }
    const unsigned K = static_cast<unsigned>(P.degree());
    std::vector<Complex> q(K + 1, Complex(0));
    for (unsigned l = 0; l <= K; ++l) {
        if (P.coeff(l).is_zero()) continue;
        const Complex w = pow(alpha, -1 - static_cast<long>(l)) * P.coeff(l);
        const std::vector<Integer> nu = nu_coefficients(l);
        for (unsigned k = 0; k <= l; ++k) q[k] += integer_c(nu[k]) * w;
    }
    return q;
}

std::vector<SignAtom> sign_distribution(const HankelKernel& k) {
    std::vector<SignAtom> atoms;
    for (const auto& t : k.real_terms()) atoms.push_back({t.alpha, q_coefficients(t.poly, t.alpha)});
    for (const auto& t : k.pair_terms()) {
        std::vector<Complex> q = q_coefficients(t.poly, t.alpha);
        std::vector<Complex> qc(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) qc[i] = conj(q[i]);
        atoms.push_back({t.alpha, std::move(q)});
        atoms.push_back({conj(t.alpha), std::move(qc)});
    }
    return atoms;
}

SignMatrixBlock sign_matrix_real(const Poly& P, const Complex& alpha) {
    if (!alpha.is_real() || !P.has_real_coeffs()) {
        throw Error(ErrorCode::NotReal, "real block requires a real exponent and polynomial");
    }
    return {SignMatrixBlock::Kind::Real, inner_sign_matrix(q_coefficients(P, alpha))};
}

SignMatrixBlock sign_matrix_pair(const Poly& P, const Complex& alpha) {
    if (alpha.is_real()) {
        throw Error(ErrorCode::InvalidExponent, "pair block requires a non-real exponent");
    }
    const CMat S = inner_sign_matrix(q_coefficients(P, alpha));
    const CMat Sa = S.adjoint();
    const std::size_t n = S.rows();
    CMat B(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            B.at(i, n + j) = Sa.at(i, j);
            B.at(n + i, j) = S.at(i, j);
        }
    }
    return {SignMatrixBlock::Kind::Pair, std::move(B)};
}

SignMatrix sign_matrix(const HankelKernel& k) {
    SignMatrix S;
    for (const auto& t : k.real_terms()) S.blocks.push_back(sign_matrix_real(t.poly, t.alpha));
    for (const auto& t : k.pair_terms()) S.blocks.push_back(sign_matrix_pair(t.poly, t.alpha));
    return S;
}

Complex evaluate_sign_form(const SignMatrix& S, const JetSet& jets) {
    std::size_t idx = 0;
    Complex total(0);
    for (const auto& block : S.blocks) {
        const std::size_t n = static_cast<std::size_t>(block.degree()) + 1;
        if (block.kind == SignMatrixBlock::Kind::Real) {
            if (idx >= jets.size() || jets[idx].size() != n) {
                throw Error(ErrorCode::DimensionMismatch, "jet does not match block order");
            }
            const auto& x = jets[idx++];
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    total += conj(x[j]) * block.entries.at(j, l) * x[l];
        } else {
            if (idx + 1 >= jets.size() || jets[idx].size() != n || jets[idx + 1].size() != n) {
                throw Error(ErrorCode::DimensionMismatch, "jet pair does not match block order");
            }
            const auto& x1 = jets[idx];
            const auto& x2 = jets[idx + 1];
            idx += 2;
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t l = 0; l < n; ++l) {
                    // Concatenated vector (x1; x2) against [[0, S*],[S, 0]].
                    total += conj(x1[j]) * block.entries.at(j, n + l) * x2[l];
                    total += conj(x2[j]) * block.entries.at(n + j, l) * x1[l];
                }
            }
        }
    }
    if (idx != jets.size()) {
        throw Error(ErrorCode::DimensionMismatch, "jet count does not match block structure");
    }
    return total;
}

Complex distribution_pairing(const std::vector<SignAtom>& atoms, const JetSet& jets) {
    if (atoms.size() != jets.size()) {
        throw Error(ErrorCode::DimensionMismatch, "one jet per atom required");
    }
    // Action of one atom: sum_k q_k (-1)^k d^k/dx^k [u(x) ubar(x)] at the
    // atom's location, where ubar(x) = conj(u(conj x)); `self` holds the jet
    // at the location, `mirror` the jet at its conjugate.
    auto atom_action = [](const SignAtom& a, const std::vector<Complex>& self,
                          const std::vector<Complex>& mirror) {
        if (self.size() != a.q.size() || mirror.size() != a.q.size()) {
            throw Error(ErrorCode::DimensionMismatch, "jet does not match atom order");
        }
        Complex acc(0);
        for (std::size_t k = 0; k < a.q.size(); ++k) {
            Complex leibniz(0);
            for (std::size_t l = 0; l <= k; ++l) {
                leibniz += integer_c(binomial(static_cast<unsigned>(k), static_cast<unsigned>(l))) *
                           self[l] * conj(mirror[k - l]);
            }
            acc += (k % 2 == 0 ? a.q[k] : -a.q[k]) * leibniz;
        }
        return acc;
    };

    Complex total(0);
    std::size_t i = 0;
    while (i < atoms.size()) {
        if (atoms[i].alpha.is_real()) {
            total += atom_action(atoms[i], jets[i], jets[i]);
            i += 1;
        } else {
            if (i + 1 >= atoms.size() || atoms[i + 1].alpha != conj(atoms[i].alpha)) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "non-real atom lacks an adjacent conjugate partner");
            }
            total += atom_action(atoms[i], jets[i], jets[i + 1]);
            total += atom_action(atoms[i + 1], jets[i + 1], jets[i]);
            i += 2;
        }
    }
    return total;
}

Poly recover_polynomial(const std::vector<Complex>& q, const Complex& alpha) {
    if (q.empty()) {
        throw Error(ErrorCode::ShapeViolation, "empty coefficient vector");
    }
    if (q.back().is_zero()) {
        throw Error(ErrorCode::DegenerateLeading, "top atom coefficient vanishes");
    }
    if (alpha.re <= 0) {
        throw Error(ErrorCode::InvalidExponent, "exponent must have positive real part");
    }
    const unsigned K = static_cast<unsigned>(q.size() - 1);
    std::vector<Complex> p(K + 1, Complex(0));
    std::vector<std::vector<Integer>> nu(K + 1);
    for (unsigned l = 0; l <= K; ++l) nu[l] = nu_coefficients(l);
    for (unsigned k = K + 1; k-- > 0;) {
        Complex acc = q[k];
        for (unsigned l = k + 1; l <= K; ++l) {
            acc -= integer_c(nu[l][k]) * pow(alpha, -1 - static_cast<long>(l)) * p[l];
        }
        Complex v = pow(alpha, 1 + static_cast<long>(k)) * acc;
        p[k] = (k % 2 == 0) ? v : -v;
    }
    return Poly(std::move(p));
}

KernelTerm sign_matrix_to_kernel(const SignMatrixBlock& S, const Complex& alpha) {
    if (alpha.re <= 0) {
        throw Error(ErrorCode::InvalidExponent, "exponent must have positive real part");
    }
    if (S.kind == SignMatrixBlock::Kind::Real) {
        if (!alpha.is_real()) {
            throw Error(ErrorCode::NotReal, "real block paired with non-real exponent");
        }
        std::vector<Complex> q = q_from_inner_matrix(S.entries);
        return {alpha, recover_polynomial(q, alpha)};
    }
    if (alpha.is_real()) {
        throw Error(ErrorCode::InvalidExponent, "pair block paired with real exponent");
    }
    const std::size_t n2 = S.entries.rows();
    if (n2 == 0 || n2 % 2 != 0 || S.entries.cols() != n2) {
        throw Error(ErrorCode::ShapeViolation, "pair block must have even positive order");
    }
    const std::size_t n = n2 / 2;
    CMat inner(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inner.at(i, j) = S.entries.at(n + i, j);
    const CMat adj = inner.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (S.entries.at(i, j) != Complex(0) || S.entries.at(n + i, n + j) != Complex(0) ||
                S.entries.at(i, n + j) != adj.at(i, j)) {
                throw Error(ErrorCode::NotSignMatrix,
                            "pair block is not of the form [[0, S*],[S, 0]]");
            }
        }
    }
    std::vector<Complex> q = q_from_inner_matrix(inner);
    return {alpha, recover_polynomial(q, alpha)};
}

HankelKernel reconstruct_kernel_from_sign(const std::vector<SignAtom>& atoms) {
    std::vector<KernelTerm> terms;
    for (const auto& atom : atoms) {
        if (atom.q.empty() || atom.q.back().is_zero()) {
            throw Error(ErrorCode::DegenerateLeading, "atom with vanishing top coefficient");
        }
        // Symbolic monomials c * t^a w^b e^{-t w}; the generating term is
        // w e^{-t w}, and each application of (-w d/dw) maps
        // t^a w^b -> -b t^a w^b + t^{a+1} w^{b+1}.
        std::map<std::pair<unsigned, unsigned>, Complex> mono{{{0u, 1u}, Complex(1)}};
        std::vector<Complex> coeffs(atom.q.size(), Complex(0));
        for (std::size_t k = 0; k < atom.q.size(); ++k) {
            const Complex scale = (k % 2 == 0) ? atom.q[k] : -atom.q[k];
            for (const auto& [ab, c] : mono) {
                coeffs[ab.first] += scale * c * pow(atom.alpha, ab.second);
            }
            std::map<std::pair<unsigned, unsigned>, Complex> next;
            for (const auto& [ab, c] : mono) {
                next[{ab.first, ab.second}] -= Complex(Rational(ab.second)) * c;
                next[{ab.first + 1, ab.second + 1}] += c;
            }
            mono = std::move(next);
        }
        terms.push_back({atom.alpha, Poly(std::move(coeffs))});
    }
    return HankelKernel::canonicalize(terms);
}

}  // namespace hankel
