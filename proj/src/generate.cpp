#include "hankel/generate.hpp"

#include <set>
#include <utility>
#include <vector>

namespace hankel {

namespace {

// Uniform draw from [lo, hi] using raw engine output (stable across
// platforms, unlike std::uniform_int_distribution).
long draw(std::mt19937_64& rng, long lo, long hi) {
    const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ull;
    return lo + static_cast<long>(rng() % span);
}

Rational draw_positive_rational(std::mt19937_64& rng, long max_num) {
    return Rational(draw(rng, 1, max_num)) / Rational(draw(rng, 1, 4));
}

Rational draw_coefficient(std::mt19937_64& rng, long max_num) {
    return Rational(draw(rng, -max_num, max_num)) / Rational(draw(rng, 1, 3));
}

struct ComplexLess {
    bool operator()(const Complex& a, const Complex& b) const { return lex_less(a, b); }
};

}  // namespace

HankelKernel random_kernel(std::mt19937_64& rng, const KernelBounds& bounds) {
    unsigned m0 = static_cast<unsigned>(draw(rng, 0, bounds.max_real_terms));
    unsigned m1 = static_cast<unsigned>(draw(rng, 0, bounds.max_pair_terms));
    if (m0 == 0 && m1 == 0) m0 = 1;

    std::set<Complex, ComplexLess> used;
    auto fresh_alpha = [&](bool real) {
        while (true) {
            Complex alpha{draw_positive_rational(rng, bounds.max_numerator)};
            if (!real) {
                Rational im = Rational(draw(rng, 1, 4)) / Rational(draw(rng, 1, 2));
                if (draw(rng, 0, 1) == 1) im = -im;
                alpha.im = im;
            }
            if (used.count(alpha) || used.count(conj(alpha))) continue;
            used.insert(alpha);
            if (!real) used.insert(conj(alpha));
            return alpha;
        }
    };
    auto draw_poly = [&](bool real, unsigned K) {
        std::vector<Complex> c(K + 1);
        for (unsigned k = 0; k <= K; ++k) {
            c[k] = Complex(draw_coefficient(rng, bounds.max_numerator));
            if (!real) c[k].im = draw_coefficient(rng, bounds.max_numerator);
        }
        while (c[K].is_zero()) {
            c[K] = Complex(draw_coefficient(rng, bounds.max_numerator));
            if (!real) c[K].im = draw_coefficient(rng, bounds.max_numerator);
        }
        return Poly(std::move(c));
    };

    std::vector<KernelTerm> terms;
    for (unsigned m = 0; m < m0; ++m) {
        const unsigned K = static_cast<unsigned>(draw(rng, 0, bounds.max_degree));
        terms.push_back({fresh_alpha(true), draw_poly(true, K)});
    }
    for (unsigned m = 0; m < m1; ++m) {
        const unsigned K = static_cast<unsigned>(draw(rng, 0, bounds.max_degree));
        const Complex alpha = fresh_alpha(false);
        const Poly P = draw_poly(false, K);
        terms.push_back({alpha, P});
        terms.push_back({conj(alpha), P.conj_coeffs()});
    }
    return HankelKernel::canonicalize(terms);
}

HankelKernel random_positive_kernel(std::mt19937_64& rng, unsigned max_terms) {
    const unsigned count = static_cast<unsigned>(draw(rng, 1, max_terms));
    std::set<Complex, ComplexLess> used;
    std::vector<KernelTerm> terms;
    while (terms.size() < count) {
        const Complex alpha{draw_positive_rational(rng, 9)};
        if (used.count(alpha)) continue;
        used.insert(alpha);
        terms.push_back({alpha, Poly::constant(Complex(draw_positive_rational(rng, 9)))});
    }
    return HankelKernel::canonicalize(terms);
}

}  // namespace hankel
