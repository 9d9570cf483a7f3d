#pragma once

#include <complex>
#include <string>

#include "conecert/rational.hpp"

namespace conecert {

// Gaussian rational: exact complex number with rational real/imaginary parts.
struct ExactComplex {
    Rational re{0};
    Rational im{0};

    ExactComplex() = default;
    ExactComplex(long r) : re(rational_of(r)) {}  // NOLINT: implicit by design
    ExactComplex(Rational r) : re(std::move(r)) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static ExactComplex i_unit() { return ExactComplex(rational_of(0), rational_of(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ExactComplex conj() const { return ExactComplex(re, Rational(-im)); }
    // |v|^2 as an exact rational.
    Rational norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend ExactComplex operator-(const ExactComplex& a) {
        return {Rational(-a.re), Rational(-a.im)};
    }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        const Rational n2 = b.norm2();
        if (n2 == 0) throw std::domain_error("ExactComplex: division by zero");
        return {Rational((a.re * b.re + a.im * b.im) / n2),
                Rational((a.im * b.re - a.re * b.im) / n2)};
    }
    ExactComplex& operator+=(const ExactComplex& b) { re += b.re; im += b.im; return *this; }
    ExactComplex& operator-=(const ExactComplex& b) { re -= b.re; im -= b.im; return *this; }
    ExactComplex& operator*=(const ExactComplex& b) { *this = *this * b; return *this; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

// "a+bi" with rational or decimal parts: "3", "-5/2", "1+i", "2-3/4i", "0.5i".
ExactComplex parse_exact_complex(const std::string& text);

// Canonical form "<re>+<im>i" with rationals as "num/den", e.g. "3/1+0/1i".
std::string format_exact_complex(const ExactComplex& v);

// Pivot score for exact elimination: larger numerator wins.
inline std::size_t numerator_bits(const ExactComplex& v) {
    return std::max(numerator_bits(v.re), numerator_bits(v.im));
}

}  // namespace conecert
