#include "hankel/representations.hpp"

#include "hankel/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace hankel {

namespace {

const Complex kI(Rational(0), Rational(1));

Complex int_c(long n) { return Complex(Rational(n)); }

Poly poly_pow(const Poly& p, unsigned n) {
    Poly r = Poly::constant(Complex(1));
    for (unsigned i = 0; i < n; ++i) r = r * p;
    return r;
}

// sum_j p_j A(z)^j B(z)^{n-j} for linear A, B and n >= deg p.
Poly homogenize(const Poly& p, const Poly& A, const Poly& B, unsigned n) {
    Poly out;
    for (unsigned j = 0; j <= n; ++j) {
        const Complex c = p.coeff(j);
        if (c.is_zero()) continue;
        out = out + c * (poly_pow(A, j) * poly_pow(B, n - j));
    }
    return out;
}

// Quotient of p by (z - z0); requires p(z0) == 0.
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

// Polynomial sum_j w_j (z - z0)^j.
Poly poly_from_shifted(const std::vector<Complex>& w, const Complex& z0) {
    const Poly shift(std::vector<Complex>{-z0, Complex(1)});
    Poly out;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_zero()) continue;
        out = out + w[j] * poly_pow(shift, static_cast<unsigned>(j));
    }
    return out;
}

// Truncated series of (sum_k m_k u^k) / (a + u); a != 0.
std::vector<Complex> series_div_linear(const std::vector<Complex>& m, const Complex& a) {
    std::vector<Complex> g(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        Complex num = m[k];
        if (k > 0) num -= g[k - 1];
        g[k] = num / a;
    }
    return g;
}

// Builds the canonical line term for the strictly proper part of
// N(lambda) / (lambda + i*alpha)^{K+1}, where `taylor` expands N at -i*alpha.
// The u^{K+1} coefficient (the constant term of the quotient) is dropped.
LineTerm line_term_from_expansion(const Complex& alpha, unsigned K,
                                  const std::vector<Complex>& taylor) {
    std::vector<Complex> w(K + 1, Complex(0));
    const Complex scale = pow(-kI, static_cast<long>(K) + 1);
    for (unsigned j = 0; j <= K && j < taylor.size(); ++j) w[j] = scale * taylor[j];
    return {alpha, K, poly_from_shifted(w, -kI * alpha)};
}

// Builds the canonical circle pole for the strictly proper part of
// M(zeta) / (zeta (zeta - gamma)^{K+1}); the residue at zero is dropped.
CirclePole pole_from_proper(const Poly& M, const Complex& gamma, unsigned K) {
    std::vector<Complex> m = M.taylor_at(gamma);
    m.resize(K + 1, Complex(0));
    const std::vector<Complex> g = series_div_linear(m, gamma);
    return {gamma, K, poly_from_shifted(g, gamma)};
}

// Reflection Q(z) -> conj-coefficients of Q(-z); the conjugate-pair relation
// for line terms.
Poly reflect_conj(const Poly& q) {
    std::vector<Complex> c(q.coeffs());
    for (std::size_t b = 0; b < c.size(); ++b) {
        c[b] = (b % 2 == 0) ? conj(c[b]) : -conj(c[b]);
    }
    return Poly(std::move(c));
}

bool is_reflection_symmetric(const Poly& q) {
    const auto& c = q.coeffs();
    for (std::size_t b = 0; b < c.size(); ++b) {
        const Complex want = (b % 2 == 0) ? conj(c[b]) : -conj(c[b]);
        if (c[b] != want) return false;
    }
    return true;
}

struct ComplexLess {
    bool operator()(const Complex& a, const Complex& b) const { return lex_less(a, b); }
};

// Exact dense linear solve (small systems); the callers' matrices are
// provably invertible.
std::vector<Complex> solve_dense(CMat A, std::vector<Complex> b) {
    const std::size_t n = A.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::logic_error("singular system in representation conversion");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            if (A.at(i, col).is_zero()) continue;
            const Complex f = A.at(i, col) / A.at(col, col);
            for (std::size_t j = col; j < n; ++j) A.at(i, j) -= f * A.at(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<Complex> x(n, Complex(0));
    for (std::size_t i = n; i-- > 0;) {
        Complex acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= A.at(i, j) * x[j];
        x[i] = acc / A.at(i, i);
    }
    return x;
}

// Binomial-coefficient polynomial C(n - j + K, K) in the variable n.
Poly rising_binomial(unsigned K, long j) {
    Poly prod = Poly::constant(Complex(1));
    for (unsigned i = 1; i <= K; ++i) {
        prod = prod * Poly(std::vector<Complex>{int_c(static_cast<long>(i) - j), Complex(1)});
    }
    return Complex(Rational(1) / Rational(factorial(K))) * prod;
}

std::complex<double> float_pow(std::complex<double> z, unsigned long n) {
    std::complex<double> r = 1.0;
    while (n > 0) {
        if (n & 1ul) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

LineSymbol LineSymbol::canonicalize(const std::vector<LineTerm>& terms) {
    std::map<Complex, std::pair<unsigned, Poly>, ComplexLess> merged;
    for (const auto& t : terms) {
        if (t.alpha.re <= 0) {
            throw Error(ErrorCode::InvalidExponent,
                        "symbol pole must have positive real part, got " + to_string(t.alpha));
        }
        if (t.Q.degree() > static_cast<int>(t.K)) {
            throw Error(ErrorCode::InvalidSymbol, "numerator degree exceeds pole order");
        }
        if (t.Q.is_zero()) continue;
        auto it = merged.find(t.alpha);
        if (it == merged.end()) {
            merged.emplace(t.alpha, std::make_pair(t.K, t.Q));
        } else {
            // Rebase both numerators to the larger order.
            const Poly lin(std::vector<Complex>{t.alpha, -kI});  // alpha - i z
            unsigned K = std::max(it->second.first, t.K);
            Poly a = poly_pow(lin, K - it->second.first) * it->second.second;
            Poly b = poly_pow(lin, K - t.K) * t.Q;
            it->second = {K, a + b};
        }
    }
    // Trim: reduce the order while the numerator vanishes at the pole.
    for (auto it = merged.begin(); it != merged.end();) {
        unsigned K = it->second.first;
        Poly Q = it->second.second;
        const Complex z0 = -kI * it->first;
        while (!Q.is_zero() && Q(z0).is_zero()) {
            Q = kI * divide_root(Q, z0);
            if (K == 0) throw std::logic_error("numerator order underflow");
            --K;
        }
        if (Q.is_zero()) {
            it = merged.erase(it);
        } else {
            it->second = {K, std::move(Q)};
            ++it;
        }
    }

    LineSymbol s;
    for (const auto& [alpha, kq] : merged) {
        if (alpha.is_real()) {
            if (!is_reflection_symmetric(kq.second)) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "real pole " + to_string(alpha) +
                                " has a numerator without conjugation symmetry");
            }
            s.real_.push_back({alpha, kq.first, kq.second});
        } else if (alpha.im > 0) {
            auto partner = merged.find(conj(alpha));
            if (partner == merged.end() || partner->second.first != kq.first ||
                partner->second.second != reflect_conj(kq.second)) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "pole " + to_string(alpha) + " lacks a matching conjugate partner");
            }
            s.pair_.push_back({alpha, kq.first, kq.second});
        }
    }
    for (const auto& [alpha, kq] : merged) {
        if (alpha.im < 0 && merged.find(conj(alpha)) == merged.end()) {
            throw Error(ErrorCode::NotSelfAdjoint,
                        "pole " + to_string(alpha) + " lacks a conjugate partner");
        }
    }
    return s;
}

std::vector<LineTerm> LineSymbol::expanded_terms() const {
    std::vector<LineTerm> out = real_;
    for (const auto& t : pair_) {
        out.push_back(t);
        out.push_back({conj(t.alpha), t.K, reflect_conj(t.Q)});
    }
    return out;
}

CircleSymbol CircleSymbol::canonicalize(const Poly& polynomial_part,
                                        const std::vector<CirclePole>& poles) {
    if (!polynomial_part.has_real_coeffs()) {
        throw Error(ErrorCode::NotSelfAdjoint, "polynomial part must have real coefficients");
    }
    std::map<Complex, std::pair<unsigned, Poly>, ComplexLess> merged;
    for (const auto& p : poles) {
        const Rational n2 = norm2(p.gamma);
        if (n2 == 1) {
            throw Error(ErrorCode::PoleOnBoundary,
                        "pole " + to_string(p.gamma) + " lies on the unit circle");
        }
        if (n2 < 1) {
            throw Error(ErrorCode::InvalidSymbol,
                        "pole " + to_string(p.gamma) + " lies inside the unit disc");
        }
        if (p.R.degree() > static_cast<int>(p.K)) {
            throw Error(ErrorCode::InvalidSymbol, "numerator degree exceeds pole order");
        }
        if (p.R.is_zero()) continue;
        auto it = merged.find(p.gamma);
        if (it == merged.end()) {
            merged.emplace(p.gamma, std::make_pair(p.K, p.R));
        } else {
            const Poly lin(std::vector<Complex>{-p.gamma, Complex(1)});  // zeta - gamma
            unsigned K = std::max(it->second.first, p.K);
            Poly a = poly_pow(lin, K - it->second.first) * it->second.second;
            Poly b = poly_pow(lin, K - p.K) * p.R;
            it->second = {K, a + b};
        }
    }
    for (auto it = merged.begin(); it != merged.end();) {
        unsigned K = it->second.first;
        Poly R = it->second.second;
        while (!R.is_zero() && R(it->first).is_zero()) {
            R = divide_root(R, it->first);
            if (K == 0) throw std::logic_error("numerator order underflow");
            --K;
        }
        if (R.is_zero()) {
            it = merged.erase(it);
        } else {
            it->second = {K, std::move(R)};
            ++it;
        }
    }

    CircleSymbol s;
    s.poly_ = polynomial_part;
    for (const auto& [gamma, kr] : merged) {
        if (gamma.is_real()) {
            if (!kr.second.has_real_coeffs()) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "real pole " + to_string(gamma) + " has a non-real numerator");
            }
            s.real_.push_back({gamma, kr.first, kr.second});
        } else if (gamma.im < 0) {
            auto partner = merged.find(conj(gamma));
            if (partner == merged.end() || partner->second.first != kr.first ||
                partner->second.second != kr.second.conj_coeffs()) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "pole " + to_string(gamma) + " lacks a matching conjugate partner");
            }
            s.pair_.push_back({gamma, kr.first, kr.second});
        }
    }
    for (const auto& [gamma, kr] : merged) {
        if (gamma.im > 0 && merged.find(conj(gamma)) == merged.end()) {
            throw Error(ErrorCode::NotSelfAdjoint,
                        "pole " + to_string(gamma) + " lacks a conjugate partner");
        }
    }
    return s;
}

std::vector<CirclePole> CircleSymbol::expanded_poles() const {
    std::vector<CirclePole> out = real_;
    for (const auto& p : pair_) {
        out.push_back(p);
        out.push_back({conj(p.gamma), p.K, p.R.conj_coeffs()});
    }
    return out;
}

std::complex<double> CircleSymbol::evaluate(std::complex<double> zeta) const {
    std::complex<double> v = 0.0;
    const auto& pc = poly_.coeffs();
    for (auto it = pc.rbegin(); it != pc.rend(); ++it) v = v * zeta + to_std_complex(*it);
    for (const auto& p : expanded_poles()) {
        std::complex<double> r = 0.0;
        for (auto it = p.R.coeffs().rbegin(); it != p.R.coeffs().rend(); ++it)
            r = r * zeta + to_std_complex(*it);
        v += r / float_pow(zeta - to_std_complex(p.gamma), p.K + 1);
    }
    return v;
}

SequenceRep SequenceRep::canonicalize(const std::vector<Rational>& tau,
                                      const std::vector<GeometricTerm>& geometric) {
    SequenceRep s;
    s.tau_ = tau;
    while (!s.tau_.empty() && s.tau_.back() == 0) s.tau_.pop_back();

    std::map<Complex, Poly, ComplexLess> merged;
    for (const auto& g : geometric) {
        if (g.q.is_zero()) {
            throw Error(ErrorCode::InvalidSymbol, "geometric ratio must be nonzero");
        }
        const Rational n2 = norm2(g.q);
        if (n2 == 1) {
            throw Error(ErrorCode::PoleOnBoundary,
                        "geometric ratio " + to_string(g.q) + " lies on the unit circle");
        }
        if (n2 > 1) {
            throw Error(ErrorCode::InvalidSymbol,
                        "geometric ratio " + to_string(g.q) + " lies outside the unit disc");
        }
        merged[g.q] = merged[g.q] + g.T;
    }
    for (auto it = merged.begin(); it != merged.end();) {
        it = it->second.is_zero() ? merged.erase(it) : std::next(it);
    }
    for (const auto& [q, T] : merged) {
        if (q.is_real()) {
            if (!T.has_real_coeffs()) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "real ratio " + to_string(q) + " has a non-real coefficient");
            }
            s.real_.push_back({q, T});
        } else if (q.im > 0) {
            auto partner = merged.find(conj(q));
            if (partner == merged.end() || partner->second != T.conj_coeffs()) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "ratio " + to_string(q) + " lacks a matching conjugate partner");
            }
            s.pair_.push_back({q, T});
        }
    }
    for (const auto& [q, T] : merged) {
        if (q.im < 0 && merged.find(conj(q)) == merged.end()) {
            throw Error(ErrorCode::NotSelfAdjoint,
                        "ratio " + to_string(q) + " lacks a conjugate partner");
        }
    }
    return s;
}

std::vector<GeometricTerm> SequenceRep::expanded_terms() const {
    std::vector<GeometricTerm> out = real_;
    for (const auto& g : pair_) {
        out.push_back(g);
        out.push_back({conj(g.q), g.T.conj_coeffs()});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kernel <-> line symbol
// ---------------------------------------------------------------------------

LineSymbol kernel_to_line_symbol(const HankelKernel& k) {
    std::vector<LineTerm> terms;
    for (const auto& t : k.expanded_terms()) {
        const unsigned K = static_cast<unsigned>(t.poly.degree());
        const Poly lin(std::vector<Complex>{t.alpha, -kI});  // alpha - i z
        Poly Q;
        for (unsigned j = 0; j <= K; ++j) {
            const Complex c = Complex(Rational(factorial(K - j))) * t.poly.coeff(K - j);
            if (c.is_zero()) continue;
            Q = Q + c * poly_pow(lin, j);
        }
        terms.push_back({t.alpha, K, std::move(Q)});
    }
    return LineSymbol::canonicalize(terms);
}

HankelKernel line_symbol_to_kernel(const LineSymbol& phi) {
    std::vector<KernelTerm> terms;
    for (const auto& t : phi.expanded_terms()) {
        // Coefficients of Q in powers of (alpha - i z).
        const Poly shifted = t.Q.compose_affine(kI, -kI * t.alpha);
        std::vector<Complex> p(t.K + 1, Complex(0));
        for (unsigned j = 0; j <= t.K; ++j) {
            const Complex c = shifted.coeff(j);
            if (c.is_zero()) continue;
            p[t.K - j] = c / Complex(Rational(factorial(t.K - j)));
        }
        terms.push_back({t.alpha, Poly(std::move(p))});
    }
    return HankelKernel::canonicalize(terms);
}

// ---------------------------------------------------------------------------
// Circle <-> line
// ---------------------------------------------------------------------------

LineSymbol circle_to_line(const CircleSymbol& omega) {
    std::vector<LineTerm> terms;
    const Poly lm_i(std::vector<Complex>{-kI, Complex(1)});  // lambda - i
    const Poly lp_i(std::vector<Complex>{kI, Complex(1)});   // lambda + i

    if (!omega.polynomial_part().is_zero()) {
        const Poly& R1 = omega.polynomial_part();
        const unsigned d = static_cast<unsigned>(R1.degree());
        const Poly Rt = homogenize(R1, lm_i, lp_i, d);
        const Poly N = -(lm_i * Rt);
        terms.push_back(line_term_from_expansion(Complex(1), d, N.taylor_at(-kI)));
    }
    for (const auto& p : omega.expanded_poles()) {
        const Complex alpha = (p.gamma + Complex(1)) / (p.gamma - Complex(1));
        const unsigned Kp = static_cast<unsigned>(p.R.degree());
        const Poly Rt = homogenize(p.R, lm_i, lp_i, Kp);
        const Complex sigma = pow(Complex(1) - p.gamma, -(static_cast<long>(p.K) + 1));
        const Poly N = (-sigma) * (lm_i * Rt * poly_pow(lp_i, p.K - Kp));
        terms.push_back(line_term_from_expansion(alpha, p.K, N.taylor_at(-kI * alpha)));
    }
    return LineSymbol::canonicalize(terms);
}

CircleSymbol line_to_circle(const LineSymbol& phi) {
    Poly poly_part;
    std::vector<CirclePole> poles;
    const Poly A(std::vector<Complex>{kI, kI});           // i (1 + zeta)
    const Poly B(std::vector<Complex>{Complex(1), -1});   // 1 - zeta

    for (const auto& t : phi.expanded_terms()) {
        const unsigned Kp = static_cast<unsigned>(t.Q.degree());
        const Poly Qt = homogenize(t.Q, A, B, Kp);
        if (t.alpha == Complex(1)) {
            const Complex scale = Complex(0) - inverse(pow(Complex(2), static_cast<long>(t.K) + 1));
            const Poly W = scale * (Qt * poly_pow(B, t.K + 1 - Kp));
            // W(zeta)/zeta: the quotient joins the polynomial part, the
            // residue at zero is in the complementary class.
            poly_part = poly_part + divide_root(W - Poly::constant(W(Complex(0))), Complex(0));
        } else {
            const Complex gamma = (t.alpha + Complex(1)) / (t.alpha - Complex(1));
            const Complex sigma =
                Complex(0) - pow(Complex(0) - (t.alpha - Complex(1)), -(static_cast<long>(t.K) + 1));
            const Poly M = sigma * (Qt * poly_pow(B, t.K + 1 - Kp));
            poles.push_back(pole_from_proper(M, gamma, t.K));
        }
    }
    return CircleSymbol::canonicalize(poly_part, poles);
}

// ---------------------------------------------------------------------------
// Circle <-> sequence
// ---------------------------------------------------------------------------

SequenceRep circle_to_sequence(const CircleSymbol& omega) {
    std::vector<Rational> tau;
    for (const auto& c : omega.polynomial_part().coeffs()) tau.push_back(c.re);

    std::vector<GeometricTerm> geos;
    for (const auto& p : omega.expanded_poles()) {
        const Complex q = inverse(p.gamma);
        const Complex lead = (p.K % 2 == 0 ? Complex(-1) : Complex(1)) *
                             pow(q, static_cast<long>(p.K) + 1);  // (-1)^{K+1} q^{K+1}
        Poly T;
        for (unsigned j = 0; j <= p.K; ++j) {
            const Complex r = p.R.coeff(j);
            if (r.is_zero()) continue;
            T = T + (lead * r * pow(q, -static_cast<long>(j))) *
                        rising_binomial(p.K, static_cast<long>(j));
        }
        geos.push_back({q, T});
    }
    return SequenceRep::canonicalize(tau, geos);
}

CircleSymbol sequence_to_circle(const SequenceRep& kappa) {
    std::vector<Complex> pc;
    for (const auto& r : kappa.tau()) pc.emplace_back(r);
    Poly poly_part = Poly(std::move(pc));

    std::vector<CirclePole> poles;
    for (const auto& g : kappa.expanded_terms()) {
        const Complex gamma = inverse(g.q);
        const unsigned K = static_cast<unsigned>(g.T.degree());
        const Complex lead =
            (K % 2 == 0 ? Complex(-1) : Complex(1)) * pow(g.q, static_cast<long>(K) + 1);
        // Solve T = sum_j r_j * lead * q^{-j} * C(n - j + K, K) for the r_j.
        CMat Bmat(K + 1, K + 1);
        for (unsigned j = 0; j <= K; ++j) {
            const Poly basis = (lead * pow(g.q, -static_cast<long>(j))) *
                               rising_binomial(K, static_cast<long>(j));
            for (unsigned row = 0; row <= K; ++row) Bmat.at(row, j) = basis.coeff(row);
        }
        std::vector<Complex> rhs(K + 1, Complex(0));
        for (unsigned row = 0; row <= K; ++row) rhs[row] = g.T.coeff(row);
        std::vector<Complex> r = solve_dense(Bmat, rhs);
        poles.push_back({gamma, K, Poly(std::move(r))});
    }
    return CircleSymbol::canonicalize(poly_part, poles);
}

Complex sequence_element(const SequenceRep& kappa, unsigned long n) {
    Complex v(0);
    if (n < kappa.tau().size()) v += Complex(kappa.tau()[n]);
    for (const auto& g : kappa.expanded_terms()) {
        v += g.T(int_c(static_cast<long>(n))) * pow(g.q, static_cast<long>(n));
    }
    return v;
}

double sequence_element_f(const SequenceRep& kappa, unsigned long n) {
    double v = 0.0;
    if (n < kappa.tau().size()) v += to_double(kappa.tau()[n]);
    for (const auto& g : kappa.real_terms()) {
        double t = 0.0;
        for (auto it = g.T.coeffs().rbegin(); it != g.T.coeffs().rend(); ++it)
            t = t * static_cast<double>(n) + to_double(it->re);
        v += t * float_pow(to_std_complex(g.q), n).real();
    }
    for (const auto& g : kappa.pair_terms()) {
        std::complex<double> t = 0.0;
        for (auto it = g.T.coeffs().rbegin(); it != g.T.coeffs().rend(); ++it)
            t = t * static_cast<double>(n) + to_std_complex(*it);
        v += 2.0 * (t * float_pow(to_std_complex(g.q), n)).real();
    }
    return v;
}

// ---------------------------------------------------------------------------
// Compositions and representation-native counting
// ---------------------------------------------------------------------------

HankelKernel circle_to_kernel(const CircleSymbol& omega) {
    return line_symbol_to_kernel(circle_to_line(omega));
}

HankelKernel sequence_to_kernel(const SequenceRep& kappa) {
    return circle_to_kernel(sequence_to_circle(kappa));
}

CircleSymbol kernel_to_circle(const HankelKernel& k) {
    return line_to_circle(kernel_to_line_symbol(k));
}

SequenceRep kernel_to_sequence(const HankelKernel& k) {
    return circle_to_sequence(kernel_to_circle(k));
}

namespace {

int rational_sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

void check_against_kernel(const InertiaReport& native, const HankelKernel& k) {
    const InertiaReport via = kernel_inertia(k);
    if (native.n_plus != via.n_plus || native.n_minus != via.n_minus) {
        throw std::logic_error("representation-native counts disagree with the kernel route");
    }
}

void add_real(InertiaReport& r, unsigned K, int sign) {
    auto [p, m] = real_term_counts(K, sign);
    r.n_plus += p;
    r.n_minus += m;
    r.breakdown.push_back({TermInertia::Kind::Real, K, p, m});
}

void add_pair(InertiaReport& r, unsigned K) {
    const long c = static_cast<long>(K) + 1;
    r.n_plus += c;
    r.n_minus += c;
    r.breakdown.push_back({TermInertia::Kind::Pair, K, c, c});
}

}  // namespace

InertiaReport inertia_in_representation(const LineSymbol& phi) {
    InertiaReport r;
    r.method = "closed-form";
    for (const auto& t : phi.real_terms()) {
        const Complex p = t.Q(-kI * t.alpha);
        if (!p.is_real()) throw std::logic_error("leading value of a real term is not real");
        add_real(r, t.K, rational_sign(p.re));
    }
    for (const auto& t : phi.pair_terms()) add_pair(r, t.K);
    check_against_kernel(r, line_symbol_to_kernel(phi));
    return r;
}

InertiaReport inertia_in_representation(const CircleSymbol& omega) {
    InertiaReport r;
    r.method = "closed-form";
    if (!omega.polynomial_part().is_zero()) {
        const unsigned K = static_cast<unsigned>(omega.polynomial_part().degree());
        // K-th derivative of the polynomial part: K! times its top coefficient.
        add_real(r, K, rational_sign(omega.polynomial_part().leading().re));
    }
    for (const auto& p : omega.real_poles()) {
        const Complex value = p.R(p.gamma);
        const int gsign = p.gamma.re > 0 ? 1 : -1;
        add_real(r, p.K, -gsign * rational_sign(value.re));
    }
    for (const auto& p : omega.pair_poles()) add_pair(r, p.K);
    check_against_kernel(r, circle_to_kernel(omega));
    return r;
}

InertiaReport inertia_in_representation(const SequenceRep& kappa) {
    InertiaReport r;
    r.method = "closed-form";
    if (!kappa.tau().empty()) {
        const unsigned K = static_cast<unsigned>(kappa.tau().size() - 1);
        add_real(r, K, rational_sign(kappa.tau().back()));
    }
    for (const auto& g : kappa.real_terms()) {
        const unsigned K = static_cast<unsigned>(g.T.degree());
        add_real(r, K, rational_sign(g.T.leading().re));
    }
    for (const auto& g : kappa.pair_terms()) add_pair(r, static_cast<unsigned>(g.T.degree()));
    check_against_kernel(r, sequence_to_kernel(kappa));
    return r;
}

}  // namespace hankel
