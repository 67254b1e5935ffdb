#include "hankel/kernel.hpp"

#include "hankel/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace hankel {

namespace {

// Deterministic key for grouping and ordering exponents.
struct ComplexLess {
    bool operator()(const Complex& a, const Complex& b) const { return lex_less(a, b); }
};

}  // namespace

HankelKernel HankelKernel::canonicalize(const std::vector<KernelTerm>& terms) {
    std::map<Complex, Poly, ComplexLess> merged;
    for (const auto& t : terms) {
        if (t.alpha.re <= 0) {
            throw Error(ErrorCode::InvalidExponent,
                        "exponent must have positive real part, got " + to_string(t.alpha));
        }
        merged[t.alpha] = merged[t.alpha] + t.poly;
    }
    for (auto it = merged.begin(); it != merged.end();) {
        it = it->second.is_zero() ? merged.erase(it) : std::next(it);
    }

    HankelKernel k;
    for (auto it = merged.begin(); it != merged.end(); ++it) {
        const Complex& alpha = it->first;
        const Poly& poly = it->second;
        if (alpha.is_real()) {
            if (!poly.has_real_coeffs()) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "real exponent " + to_string(alpha) +
                                " carries a non-real polynomial");
            }
            k.real_.push_back({alpha, poly});
        } else if (alpha.im > 0) {
            auto partner = merged.find(conj(alpha));
            if (partner == merged.end() || partner->second != poly.conj_coeffs()) {
                throw Error(ErrorCode::NotSelfAdjoint,
                            "exponent " + to_string(alpha) +
                                " lacks a conjugate partner with conjugated coefficients");
            }
            k.pair_.push_back({alpha, poly});
        }
        // Terms with Im(alpha) < 0 are the partners; validated via the
        // representative above (the pairing check is symmetric).
    }
    // A lower-half exponent whose mirror is absent must still be rejected.
    for (auto it = merged.begin(); it != merged.end(); ++it) {
        if (it->first.im < 0 && merged.find(conj(it->first)) == merged.end()) {
            throw Error(ErrorCode::NotSelfAdjoint,
                        "exponent " + to_string(it->first) + " lacks a conjugate partner");
        }
    }
    return k;
}

unsigned HankelKernel::rank() const {
    unsigned r = 0;
    for (const auto& t : real_) r += static_cast<unsigned>(t.poly.degree()) + 1;
    for (const auto& t : pair_) r += 2 * (static_cast<unsigned>(t.poly.degree()) + 1);
    return r;
}

std::vector<Complex> HankelKernel::leading_coefficients() const {
    std::vector<Complex> out;
    out.reserve(real_.size() + pair_.size());
    for (const auto& t : real_) {
        unsigned K = static_cast<unsigned>(t.poly.degree());
        out.push_back(Complex(Rational(factorial(K))) * t.poly.leading());
    }
    for (const auto& t : pair_) {
        unsigned K = static_cast<unsigned>(t.poly.degree());
        out.push_back(Complex(Rational(factorial(K))) * t.poly.leading());
    }
    return out;
}

std::vector<KernelTerm> HankelKernel::expanded_terms() const {
    std::vector<KernelTerm> out = real_;
    for (const auto& t : pair_) {
        out.push_back(t);
        out.push_back({conj(t.alpha), t.poly.conj_coeffs()});
    }
    return out;
}

std::complex<double> HankelKernel::evaluate(double t) const {
    std::complex<double> v = 0.0;
    for (const auto& term : expanded_terms()) {
        std::complex<double> p = 0.0;
        const auto& c = term.poly.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * t + to_std_complex(*it);
        v += p * std::exp(-to_std_complex(term.alpha) * t);
    }
    return v;
}

HankelKernel scale_kernel(const HankelKernel& k, const Rational& c) {
    if (c == 0) return HankelKernel();
    std::vector<KernelTerm> terms = k.expanded_terms();
    for (auto& t : terms) t.poly = Complex(c) * t.poly;
    return HankelKernel::canonicalize(terms);
}

}  // namespace hankel
