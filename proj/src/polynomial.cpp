#include "hankel/polynomial.hpp"

#include <algorithm>

namespace hankel {

Poly Poly::monomial(unsigned n, Complex lead) {
    std::vector<Complex> c(n + 1, Complex(0));
    c[n] = std::move(lead);
    return Poly(std::move(c));
}

Complex Poly::operator()(const Complex& z) const {
    Complex v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * z + *it;
    return v;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Complex> c(std::max(a.c_.size(), b.c_.size()), Complex(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    std::vector<Complex> c = a.c_;
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Complex> c(a.c_.size() + b.c_.size() - 1, Complex(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const Complex& s, const Poly& a) {
    std::vector<Complex> c = a.c_;
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Complex> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = Complex(Rational(k)) * c_[k];
    return Poly(std::move(c));
}

Complex Poly::derivative_at(unsigned k, const Complex& z) const {
    Poly p = *this;
    for (unsigned i = 0; i < k && !p.is_zero(); ++i) p = p.derivative();
    return p(z);
}

std::vector<Complex> Poly::taylor_at(const Complex& z0) const {
    // Repeated synthetic division by (z - z0); remainder sequence is the
    // Taylor expansion.
    std::vector<Complex> work = c_;
    std::vector<Complex> out(c_.size(), Complex(0));
    if (work.empty()) return out;
    for (std::size_t j = 0; j < out.size(); ++j) {
        Complex rem(0);
        for (std::size_t k = work.size(); k-- > 0;) {
            Complex next = work[k] + rem * z0;
            rem = next;
            work[k] = next;
        }
        out[j] = work.front();
        work.erase(work.begin());
        // After dividing, `work` holds the quotient coefficients shifted down.
        if (work.empty()) break;
    }
    return out;
}

Poly Poly::compose_affine(const Complex& s, const Complex& t) const {
    // Horner in the affine argument.
    Poly arg(std::vector<Complex>{t, s});
    Poly v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * arg + Poly::constant(*it);
    return v;
}

Poly Poly::conj_coeffs() const {
    std::vector<Complex> c = c_;
    for (auto& v : c) v = conj(v);
    return Poly(std::move(c));
}

bool Poly::has_real_coeffs() const {
    for (const auto& v : c_) {
        if (!v.im.is_zero()) return false;
    }
    return true;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

}  // namespace hankel
