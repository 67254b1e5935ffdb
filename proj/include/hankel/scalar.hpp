#pragma once

// Exact scalar layer: arbitrary-precision rationals and Gaussian rationals
// (complex numbers with rational real/imaginary parts). All structural
// computations in the library run on these types; floating point appears only
// in the numeric back ends.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Renders a rational as "n" or "n/d" with d > 0.
std::string to_string(const Rational& r);

/// Parses "n" or "n/d" (optional sign, decimal digits). Throws
/// Error(MalformedInput) on anything else, including d == 0.
Rational parse_rational(const std::string& text);

/// Complex number with exact rational components.
struct Complex {
    Rational re;
    Rational im;

    Complex() = default;
    Complex(Rational r) : re(std::move(r)) {}               // NOLINT(google-explicit-constructor)
    Complex(int n) : re(n) {}                               // NOLINT(google-explicit-constructor)
    Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("division by zero complex rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex& operator+=(const Complex& b) { return *this = *this + b; }
    Complex& operator-=(const Complex& b) { return *this = *this - b; }
    Complex& operator*=(const Complex& b) { return *this = *this * b; }
    Complex& operator/=(const Complex& b) { return *this = *this / b; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Rational norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Complex inverse(const Complex& z) { return Complex(1) / z; }

/// z^n for any integer n (n < 0 requires z != 0).
Complex pow(const Complex& z, long n);

inline std::complex<double> to_std_complex(const Complex& z) {
    return {to_double(z.re), to_double(z.im)};
}

/// Strict ordering by (re, im); used only to fix deterministic term order.
inline bool lex_less(const Complex& a, const Complex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

std::string to_string(const Complex& z);

/// n! as an exact integer (n >= 0).
Integer factorial(unsigned n);

/// Binomial coefficient C(n, k) as an exact integer, 0 when k > n.
Integer binomial(unsigned n, unsigned k);

}  // namespace hankel
