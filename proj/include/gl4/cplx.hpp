#pragma once

// Minimal complex type templated on the real scalar so the same numeric
// kernels run in double and in double-double.  std::complex does not admit
// non-builtin scalars, hence this.

#include <complex>

#include "gl4/ddreal.hpp"

namespace gl4 {

template <class S>
struct cplx {
    S re{};
    S im{};

    cplx() = default;
    cplx(S r) : re(r) {}
    cplx(S r, S i) : re(r), im(i) {}
    template <class T = S, std::enable_if_t<!std::is_same_v<T, double>, int> = 0>
    cplx(double r) : re(fp<S>::from(r)) {}
    template <class T = S, std::enable_if_t<!std::is_same_v<T, double>, int> = 0>
    cplx(double r, double i) : re(fp<S>::from(r)), im(fp<S>::from(i)) {}
    cplx(int r) : re(fp<S>::from(r)) {}

    static cplx from_std(const std::complex<double>& z) {
        return cplx(fp<S>::from(z.real()), fp<S>::from(z.imag()));
    }
    std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }
};

template <class S> cplx<S> operator-(const cplx<S>& a) { return {-a.re, -a.im}; }

template <class S> cplx<S> operator+(const cplx<S>& a, const cplx<S>& b) { return {a.re + b.re, a.im + b.im}; }
template <class S> cplx<S> operator-(const cplx<S>& a, const cplx<S>& b) { return {a.re - b.re, a.im - b.im}; }
template <class S> cplx<S> operator*(const cplx<S>& a, const cplx<S>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class S> cplx<S> operator/(const cplx<S>& a, const cplx<S>& b) {
    using std::fabs;
    // Smith's algorithm
    if (fabs(b.re) >= fabs(b.im)) {
        S r = b.im / b.re;
        S d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    S r = b.re / b.im;
    S d = b.im + b.re * r;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

template <class S> cplx<S> operator+(const cplx<S>& a, const S& b) { return {a.re + b, a.im}; }
template <class S> cplx<S> operator+(const S& b, const cplx<S>& a) { return {a.re + b, a.im}; }
template <class S> cplx<S> operator-(const cplx<S>& a, const S& b) { return {a.re - b, a.im}; }
template <class S> cplx<S> operator-(const S& b, const cplx<S>& a) { return {b - a.re, -a.im}; }
template <class S> cplx<S> operator*(const cplx<S>& a, const S& b) { return {a.re * b, a.im * b}; }
template <class S> cplx<S> operator*(const S& b, const cplx<S>& a) { return {a.re * b, a.im * b}; }
template <class S> cplx<S> operator/(const cplx<S>& a, const S& b) { return {a.re / b, a.im / b}; }

template <class S, std::enable_if_t<!std::is_same_v<S, double>, int> = 0>
cplx<S> operator+(const cplx<S>& a, double b) { return a + fp<S>::from(b); }
template <class S, std::enable_if_t<!std::is_same_v<S, double>, int> = 0>
cplx<S> operator-(const cplx<S>& a, double b) { return a - fp<S>::from(b); }
template <class S, std::enable_if_t<!std::is_same_v<S, double>, int> = 0>
cplx<S> operator*(const cplx<S>& a, double b) { return a * fp<S>::from(b); }
template <class S, std::enable_if_t<!std::is_same_v<S, double>, int> = 0>
cplx<S> operator/(const cplx<S>& a, double b) { return a / fp<S>::from(b); }
template <class S, std::enable_if_t<!std::is_same_v<S, double>, int> = 0>
cplx<S> operator*(double b, const cplx<S>& a) { return a * fp<S>::from(b); }
template <class S, std::enable_if_t<!std::is_same_v<S, double>, int> = 0>
cplx<S> operator+(double b, const cplx<S>& a) { return a + fp<S>::from(b); }

template <class S> cplx<S>& operator+=(cplx<S>& a, const cplx<S>& b) { a = a + b; return a; }
template <class S> cplx<S>& operator-=(cplx<S>& a, const cplx<S>& b) { a = a - b; return a; }
template <class S> cplx<S>& operator*=(cplx<S>& a, const cplx<S>& b) { a = a * b; return a; }
template <class S> cplx<S>& operator/=(cplx<S>& a, const cplx<S>& b) { a = a / b; return a; }
template <class S> cplx<S>& operator+=(cplx<S>& a, const S& b) { a.re = a.re + b; return a; }
template <class S> cplx<S>& operator-=(cplx<S>& a, const S& b) { a.re = a.re - b; return a; }
template <class S> cplx<S>& operator*=(cplx<S>& a, const S& b) { a = a * b; return a; }

template <class S> bool operator==(const cplx<S>& a, const cplx<S>& b) { return a.re == b.re && a.im == b.im; }

template <class S> S real(const cplx<S>& a) { return a.re; }
template <class S> S imag(const cplx<S>& a) { return a.im; }
template <class S> cplx<S> conj(const cplx<S>& a) { return {a.re, -a.im}; }

template <class S> S norm(const cplx<S>& a) { return a.re * a.re + a.im * a.im; }

template <class S> S abs(const cplx<S>& a) {
    using std::sqrt;
    return sqrt(norm(a));
}

template <class S> S arg(const cplx<S>& a) {
    using std::atan2;
    return atan2(a.im, a.re);
}

template <class S> cplx<S> exp(const cplx<S>& a) {
    using std::exp;
    S e = exp(a.re);
    S s, c;
    if constexpr (std::is_same_v<S, double>) {
        s = std::sin(a.im);
        c = std::cos(a.im);
    } else {
        sincos(a.im, s, c);
    }
    return {e * c, e * s};
}

template <class S> cplx<S> log(const cplx<S>& a) {
    using std::log;
    return {log(norm(a)) / 2.0, arg(a)};
}

template <class S> cplx<S> sqrt(const cplx<S>& a) {
    return exp(log(a) / 2.0);
}

template <class S> cplx<S> pow(const cplx<S>& a, const cplx<S>& b) { return exp(b * log(a)); }
template <class S> cplx<S> pow(const cplx<S>& a, const S& b) { return exp(log(a) * b); }
template <class S> cplx<S> pow(const cplx<S>& a, double b) { return exp(log(a) * fp<S>::from(b)); }

// b^z for real b > 0
template <class S> cplx<S> pow_real_base(const S& b, const cplx<S>& z) {
    using std::log;
    return exp(z * log(b));
}

// e^{2 pi i theta}
template <class S> cplx<S> unit_phase(const S& theta) {
    S ang = fp<S>::two_pi() * theta;
    if constexpr (std::is_same_v<S, double>) {
        return {std::cos(ang), std::sin(ang)};
    } else {
        S s, c;
        sincos(ang, s, c);
        return {c, s};
    }
}

using Cplx = cplx<double>;
using CplxDD = cplx<DD>;

}  // namespace gl4
