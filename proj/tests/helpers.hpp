#pragma once

// Shared construction shorthands for the test suite.

#include "hankel/error.hpp"
#include "hankel/kernel.hpp"
#include "hankel/matrix.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scalar.hpp"

#include <functional>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace testutil {

inline hankel::Rational rat(long n, long d = 1) {
    return hankel::Rational(n) / hankel::Rational(d);
}

inline hankel::Complex cpx(long re, long im = 0) {
    return {hankel::Rational(re), hankel::Rational(im)};
}

/// Polynomial with integer coefficients, constant first.
inline hankel::Poly ipoly(std::initializer_list<long> coeffs) {
    std::vector<hankel::Complex> c;
    for (long v : coeffs) c.emplace_back(hankel::Rational(v));
    return hankel::Poly(std::move(c));
}

inline hankel::Poly qpoly(std::initializer_list<hankel::Rational> coeffs) {
    std::vector<hankel::Complex> c;
    for (const auto& v : coeffs) c.emplace_back(v);
    return hankel::Poly(std::move(c));
}

/// Kernel with a single real term P(t) e^{-alpha t}.
inline hankel::HankelKernel real_kernel(const hankel::Rational& alpha,
                                        const hankel::Poly& poly) {
    return hankel::HankelKernel::canonicalize({{hankel::Complex(alpha), poly}});
}

/// Kernel 2 e^{-at} (P(t) cos(bt) - Im-part ...) given one pair representative:
/// the conjugate partner is added explicitly.
inline hankel::HankelKernel pair_kernel(const hankel::Complex& alpha,
                                        const hankel::Poly& poly) {
    return hankel::HankelKernel::canonicalize(
        {{alpha, poly}, {hankel::conj(alpha), poly.conj_coeffs()}});
}

/// True when fn() throws hankel::Error with exactly the given code.
inline bool throws_code(hankel::ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const hankel::Error& e) {
        return e.code() == code;
    } catch (...) {
        return false;
    }
    return false;
}

/// Small random rational in [-max, max] with denominator 1..3.
inline hankel::Rational random_rational(std::mt19937_64& rng, long max = 5) {
    const long num = static_cast<long>(rng() % (2 * max + 1)) - max;
    const long den = 1 + static_cast<long>(rng() % 3);
    return rat(num, den);
}

inline hankel::Complex random_complex(std::mt19937_64& rng, long max = 5) {
    return {random_rational(rng, max), random_rational(rng, max)};
}

/// Random Hermitian skew-triangular matrix of the given order with a
/// nowhere-vanishing anti-diagonal: entries (j, l) vanish for j + l > K.
inline hankel::CMat random_skew_triangular(std::mt19937_64& rng, unsigned order) {
    const unsigned K = order - 1;
    hankel::CMat S(order, order);
    for (unsigned j = 0; j < order; ++j) {
        for (unsigned l = j; j + l <= K && l < order; ++l) {
            hankel::Complex v;
            if (j == l) {
                v = hankel::Complex(random_rational(rng));
            } else {
                v = random_complex(rng);
            }
            if (j + l == K && v.is_zero()) {
                v = hankel::Complex(rat(1 + static_cast<long>(rng() % 4)));
            }
            if (j + l == K && j == l) {
                // center of the anti-diagonal: real and nonzero
                while (v.re == 0) v = hankel::Complex(random_rational(rng));
            }
            S.at(j, l) = v;
            S.at(l, j) = hankel::conj(v);
        }
    }
    return S;
}

/// Entries strictly inside the triangle (j + l < K) scaled by eps, exactly.
inline hankel::CMat scale_interior(const hankel::CMat& S, const hankel::Rational& eps) {
    const unsigned K = static_cast<unsigned>(S.rows()) - 1;
    hankel::CMat out = S;
    for (unsigned j = 0; j < S.rows(); ++j)
        for (unsigned l = 0; j + l < K && l < S.cols(); ++l)
            out.at(j, l) = hankel::Complex(eps) * S.at(j, l);
    return out;
}

}  // namespace testutil
