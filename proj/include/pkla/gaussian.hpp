#pragma once

#include <string>

#include "pkla/rational.hpp"

namespace pkla {

/// Exact Gaussian rational a + b i.
struct Gauss {
    Scalar re;
    Scalar im;

    Gauss() : re(0), im(0) {}
    Gauss(Scalar r, Scalar i) : re(std::move(r)), im(std::move(i)) {}
    explicit Gauss(const Scalar& r) : re(r), im(0) {}
    Gauss(long r, long i) : re(rat(r)), im(rat(i)) {}

    static Gauss i_unit() { return Gauss(rat(0), rat(1)); }

    friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gauss operator-(const Gauss& a) { return {-a.re, -a.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gauss operator/(const Gauss& a, const Gauss& b) {
        Scalar n = b.re * b.re + b.im * b.im;
        if (is_zero(n)) throw PreconditionError("DivisionByZero", "division by zero Gaussian rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Gauss& operator+=(const Gauss& b) { return *this = *this + b; }
    Gauss& operator-=(const Gauss& b) { return *this = *this - b; }
    Gauss& operator*=(const Gauss& b) { return *this = *this * b; }

    friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
    /// Lexicographic order (re, then im); used only for canonical sorting.
    friend bool operator<(const Gauss& a, const Gauss& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    Gauss conj() const { return {re, -im}; }
    Scalar norm() const { return re * re + im * im; }
    bool is_real() const { return is_zero(im); }
    bool is_imaginary() const { return is_zero(re); }
};

inline bool is_zero(const Gauss& z) { return is_zero(z.re) && is_zero(z.im); }

/// Canonical string form "p/q+r/s i" (imaginary sign always explicit, single
/// space before the trailing i).
inline std::string gauss_to_string(const Gauss& z) {
    std::string s = scalar_to_string(z.re);
    s += (sgn(z.im) < 0) ? "-" : "+";
    s += scalar_to_string(abs(z.im));
    s += " i";
    return s;
}

/// Parses the canonical form; also accepts a plain rational "p/q" (imaginary
/// part zero).
inline Gauss parse_gauss(std::string s) {
    // Trim surrounding whitespace.
    while (!s.empty() && s.back() == ' ') s.pop_back();
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    if (s.empty()) throw SchemaError("empty Gaussian literal");
    if (s.back() != 'i') return Gauss(parse_scalar(s));
    s.pop_back();
    while (!s.empty() && s.back() == ' ') s.pop_back();
    // Find the sign splitting real and imaginary parts: the last '+' or '-'
    // not in position 0 (numerals and '/' contain no signs elsewhere).
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) throw SchemaError("malformed Gaussian literal: missing real part");
    Scalar re = parse_scalar(s.substr(0, split));
    Scalar im = parse_scalar(s.substr(split + 1));
    if (s[split] == '-') im = -im;
    return {re, im};
}

}  // namespace pkla
