#include "hankel/scalar.hpp"

#include "hankel/error.hpp"

#include <sstream>

namespace hankel {

std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

Rational parse_rational(const std::string& text) {
    // cpp_rational's own parser accepts "a/b" and plain integers but throws
    // on anything else; normalize the failure mode.
    try {
        if (text.empty()) throw std::runtime_error("empty");
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw Error(ErrorCode::MalformedInput, "not a rational number: '" + text + "'");
    }
}

Complex pow(const Complex& z, long e) {
    if (e < 0) return inverse(pow(z, -e));
    Complex result{1, 0};
    Complex base = z;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1ul) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string to_string(const Complex& z) {
    std::string s = to_string(z.re);
    if (!z.im.is_zero()) {
        s += (z.im > 0 ? " + " : " - ");
        Rational a = z.im < 0 ? Rational(-z.im) : z.im;
        s += to_string(a) + "*i";
    }
    return s;
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

}  // namespace hankel
