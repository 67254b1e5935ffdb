#include "hankel/automorphisms.hpp"

#include "hankel/error.hpp"

#include <utility>
#include <vector>

namespace hankel {

namespace {

const Complex kI(Rational(0), Rational(1));

void require_positive(const Rational& rho) {
    if (rho <= 0) {
        throw Error(ErrorCode::InvalidSymbol, "dilation parameter must be positive");
    }
}

Poly poly_pow(const Poly& p, unsigned n) {
    Poly r = Poly::constant(Complex(1));
    for (unsigned i = 0; i < n; ++i) r = r * p;
    return r;
}

Poly homogenize(const Poly& p, const Poly& A, const Poly& B, unsigned n) {
    Poly out;
    for (unsigned j = 0; j <= n; ++j) {
        const Complex c = p.coeff(j);
        if (c.is_zero()) continue;
        out = out + c * (poly_pow(A, j) * poly_pow(B, n - j));
    }
    return out;
}

Poly divide_root(const Poly& p, const Complex& z0) {
    const auto& c = p.coeffs();
    std::vector<Complex> quot(c.size() > 0 ? c.size() - 1 : 0, Complex(0));
    Complex carry(0);
    for (std::size_t k = c.size(); k-- > 1;) {
        carry = c[k] + carry * z0;
        quot[k - 1] = carry;
    }
    return Poly(std::move(quot));
}

Poly poly_from_shifted(const std::vector<Complex>& w, const Complex& z0) {
    const Poly shift(std::vector<Complex>{-z0, Complex(1)});
    Poly out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_zero()) continue;
        out = out + w[j] * poly_pow(shift, static_cast<unsigned>(j));
    }
    return out;
}

std::vector<Complex> series_div_linear(const std::vector<Complex>& m, const Complex& a) {
    std::vector<Complex> g(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        Complex num = m[k];
        if (k > 0) num -= g[k - 1];
        g[k] = num / a;
    }
    return g;
}

LineTerm line_term_from_expansion(const Complex& alpha, unsigned K,
                                  const std::vector<Complex>& taylor) {
    std::vector<Complex> w(K + 1, Complex(0));
    const Complex scale = pow(-kI, static_cast<long>(K) + 1);
    for (unsigned j = 0; j <= K && j < taylor.size(); ++j) w[j] = scale * taylor[j];
    return {alpha, K, poly_from_shifted(w, -kI * alpha)};
}

CirclePole pole_from_proper(const Poly& M, const Complex& gamma, unsigned K) {
    std::vector<Complex> m = M.taylor_at(gamma);
    m.resize(K + 1, Complex(0));
    const std::vector<Complex> g = series_div_linear(m, gamma);
    return {gamma, K, poly_from_shifted(g, gamma)};
}

}  // namespace

HankelKernel dilate_kernel(const HankelKernel& k, const Rational& rho) {
    require_positive(rho);
    const Complex inv_rho(Rational(1) / rho);
    std::vector<KernelTerm> terms;
    for (const auto& t : k.expanded_terms()) {
        terms.push_back({t.alpha * inv_rho, t.poly.compose_affine(inv_rho, Complex(0))});
    }
    return HankelKernel::canonicalize(terms);
}

LineSymbol dilate_line_symbol(const LineSymbol& phi, const Rational& rho) {
    require_positive(rho);
    const Complex rho_c{rho};
    const Complex inv_rho(Rational(1) / rho);
    std::vector<LineTerm> terms;
    for (const auto& t : phi.expanded_terms()) {
        const Complex scale = pow(rho_c, -static_cast<long>(t.K));
        terms.push_back({t.alpha * inv_rho, t.K,
                         scale * t.Q.compose_affine(rho_c, Complex(0))});
    }
    return LineSymbol::canonicalize(terms);
}

LineSymbol involute_line_symbol(const LineSymbol& phi) {
    std::vector<LineTerm> terms;
    for (const auto& t : phi.expanded_terms()) {
        const Complex alpha_new = inverse(t.alpha);
        // Numerator lambda^{K+1} Q(-1/lambda), a polynomial of degree <= K+1.
        std::vector<Complex> n0(t.K + 2, Complex(0));
        for (unsigned j = 0; j <= t.K; ++j) {
            const Complex q = t.Q.coeff(j);
            if (q.is_zero()) continue;
            n0[t.K + 1 - j] = (j % 2 == 0) ? q : -q;
        }
        const Complex sigma = Complex(0) - pow(t.alpha, -(static_cast<long>(t.K) + 1));
        const Poly N = sigma * Poly(std::move(n0));
        terms.push_back(line_term_from_expansion(alpha_new, t.K, N.taylor_at(-kI * alpha_new)));
    }
    return LineSymbol::canonicalize(terms);
}

CircleSymbol circle_dilation(const CircleSymbol& omega, const Rational& rho) {
    require_positive(rho);
    if (rho == 1) return omega;
    const Complex tau{(rho - 1) / (rho + 1)};
    const Complex rho_c{rho};
    const Poly zeta_plus_tau(std::vector<Complex>{tau, Complex(1)});   // zeta + tau
    const Poly tau_zeta_one(std::vector<Complex>{Complex(1), tau});    // tau zeta + 1

    Poly poly_part;
    std::vector<CirclePole> poles;

    if (!omega.polynomial_part().is_zero()) {
        // Transported polynomial part: a pole at -1/tau of order d+1 (plus a
        // dropped residue at zero).
        const Poly& R1 = omega.polynomial_part();
        const unsigned d = static_cast<unsigned>(R1.degree());
        const Complex pole = Complex(0) - inverse(tau);
        const Poly Rt = homogenize(R1, zeta_plus_tau, tau_zeta_one, d);
        // rho * Rt * (zeta + tau) / [zeta * tau^{d+1} * (zeta + 1/tau)^{d+1}]
        const Complex scale = rho_c * pow(tau, -(static_cast<long>(d) + 1));
        const Poly U = scale * (Rt * zeta_plus_tau);
        poles.push_back(pole_from_proper(U, pole, d));
    }
    for (const auto& p : omega.expanded_poles()) {
        const unsigned Kp = static_cast<unsigned>(p.R.degree());
        const Poly Rt = homogenize(p.R, zeta_plus_tau, tau_zeta_one, Kp);
        if (tau * p.gamma == Complex(1)) {
            // The image pole sits at infinity: the term becomes polynomial.
            const Complex scale = rho_c * pow(tau - p.gamma, -(static_cast<long>(p.K) + 1));
            const Poly U =
                scale * (Rt * poly_pow(tau_zeta_one, p.K - Kp) * zeta_plus_tau);
            poly_part = poly_part + divide_root(U - Poly::constant(U(Complex(0))), Complex(0));
        } else {
            const Complex gamma_new = (p.gamma - tau) / (Complex(1) - tau * p.gamma);
            const Complex scale =
                rho_c * pow(Complex(1) - p.gamma * tau, -(static_cast<long>(p.K) + 1));
            const Poly M = scale * (Rt * poly_pow(tau_zeta_one, p.K - Kp) * zeta_plus_tau);
            poles.push_back(pole_from_proper(M, gamma_new, p.K));
        }
    }
    return CircleSymbol::canonicalize(poly_part, poles);
}

SequenceRep sequence_parity(const SequenceRep& kappa) {
    std::vector<Rational> tau = kappa.tau();
    for (std::size_t n = 1; n < tau.size(); n += 2) tau[n] = -tau[n];
    std::vector<GeometricTerm> geos;
    for (const auto& g : kappa.expanded_terms()) geos.push_back({Complex(0) - g.q, g.T});
    return SequenceRep::canonicalize(tau, geos);
}

}  // namespace hankel
