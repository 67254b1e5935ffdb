#pragma once

// Dense univariate polynomials over the exact complex rationals, stored
// constant-coefficient first. The zero polynomial is the empty vector and has
// degree -1.

#include "hankel/scalar.hpp"

#include <vector>

namespace hankel {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Complex v) { return Poly(std::vector<Complex>{std::move(v)}); }
    /// The monomial z^n.
    static Poly monomial(unsigned n, Complex lead = Complex(1));

    const std::vector<Complex>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of z^k (0 beyond the stored degree).
    Complex coeff(unsigned k) const { return k < c_.size() ? c_[k] : Complex(0); }
    Complex leading() const { return c_.empty() ? Complex(0) : c_.back(); }

    Complex operator()(const Complex& z) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Complex& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    /// k-th derivative evaluated at z, exactly.
    Complex derivative_at(unsigned k, const Complex& z) const;

    /// Coefficients of the expansion in powers of (z - z0): result[j] = P^{(j)}(z0)/j!.
    std::vector<Complex> taylor_at(const Complex& z0) const;

    /// P(s*z + t) expanded back into powers of z.
    Poly compose_affine(const Complex& s, const Complex& t) const;

    /// Polynomial with conjugated coefficients: sum conj(c_k) z^k.
    Poly conj_coeffs() const;

    bool has_real_coeffs() const;

  private:
    void trim();
    std::vector<Complex> c_;
};

}  // namespace hankel
