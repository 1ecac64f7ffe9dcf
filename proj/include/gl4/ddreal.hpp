#pragma once

// Double-double arithmetic: an unevaluated sum of two doubles giving ~32
// significant digits.  Used as the extended-precision scalar behind the
// same templated interfaces as plain double (residue cross-checks need the
// headroom).  Algorithms follow the classical Dekker/Knuth error-free
// transformations and the QD library's transcendental recipes.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>

namespace gl4 {

namespace detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// assumes |a| >= |b|
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline void split(double a, double& hi, double& lo) {
    constexpr double splitter = 134217729.0;  // 2^27 + 1
    double t = splitter * a;
    hi = t - (t - a);
    lo = a - hi;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    double ahi, alo, bhi, blo;
    split(a, ahi, alo);
    split(b, bhi, blo);
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    return p;
}

}  // namespace detail

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(int h) : hi(h), lo(0.0) {}
    DD(long h) : hi(static_cast<double>(h)), lo(0.0) {}
    DD(long long h) : hi(static_cast<double>(h)), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

inline double to_double(const DD& a) { return a.hi + a.lo; }
inline double to_double(double a) { return a; }

inline DD dd_norm(double hi, double lo) {
    double e;
    double s = detail::quick_two_sum(hi, lo, e);
    return DD(s, e);
}

inline DD operator-(const DD& a) { return DD(-a.hi, -a.lo); }

inline DD operator+(const DD& a, const DD& b) {
    double s1, s2, t1, t2;
    s1 = detail::two_sum(a.hi, b.hi, s2);
    t1 = detail::two_sum(a.lo, b.lo, t2);
    s2 += t1;
    s1 = detail::quick_two_sum(s1, s2, s2);
    s2 += t2;
    s1 = detail::quick_two_sum(s1, s2, s2);
    return DD(s1, s2);
}

inline DD operator+(const DD& a, double b) {
    double s1, s2;
    s1 = detail::two_sum(a.hi, b, s2);
    s2 += a.lo;
    s1 = detail::quick_two_sum(s1, s2, s2);
    return DD(s1, s2);
}
inline DD operator+(double a, const DD& b) { return b + a; }

inline DD operator-(const DD& a, const DD& b) { return a + (-b); }
inline DD operator-(const DD& a, double b) { return a + (-b); }
inline DD operator-(double a, const DD& b) { return (-b) + a; }

inline DD operator*(const DD& a, const DD& b) {
    double p1, p2;
    p1 = detail::two_prod(a.hi, b.hi, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    p1 = detail::quick_two_sum(p1, p2, p2);
    return DD(p1, p2);
}

inline DD operator*(const DD& a, double b) {
    double p1, p2;
    p1 = detail::two_prod(a.hi, b, p2);
    p2 += a.lo * b;
    p1 = detail::quick_two_sum(p1, p2, p2);
    return DD(p1, p2);
}
inline DD operator*(double a, const DD& b) { return b * a; }

inline DD operator/(const DD& a, const DD& b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    double e;
    double s = detail::quick_two_sum(q1, q2, e);
    DD q = DD(s, e) + q3;
    return q;
}
inline DD operator/(const DD& a, double b) { return a / DD(b); }
inline DD operator/(double a, const DD& b) { return DD(a) / b; }

inline DD& operator+=(DD& a, const DD& b) { a = a + b; return a; }
inline DD& operator-=(DD& a, const DD& b) { a = a - b; return a; }
inline DD& operator*=(DD& a, const DD& b) { a = a * b; return a; }
inline DD& operator/=(DD& a, const DD& b) { a = a / b; return a; }

inline bool operator==(const DD& a, const DD& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(const DD& a, const DD& b) { return !(a == b); }
inline bool operator<(const DD& a, const DD& b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DD& a, const DD& b) { return b < a; }
inline bool operator<=(const DD& a, const DD& b) { return !(b < a); }
inline bool operator>=(const DD& a, const DD& b) { return !(a < b); }
inline bool operator<(const DD& a, double b) { return a < DD(b); }
inline bool operator>(const DD& a, double b) { return a > DD(b); }
inline bool operator<=(const DD& a, double b) { return a <= DD(b); }
inline bool operator>=(const DD& a, double b) { return a >= DD(b); }

inline DD fabs(const DD& a) { return a.hi < 0.0 ? -a : a; }
inline DD abs(const DD& a) { return fabs(a); }

inline bool isfinite(const DD& a) { return std::isfinite(a.hi); }
inline bool isnan(const DD& a) { return std::isnan(a.hi) || std::isnan(a.lo); }

// exact scaling by a power of two
inline DD ldexp(const DD& a, int n) { return DD(std::ldexp(a.hi, n), std::ldexp(a.lo, n)); }

inline DD floor(const DD& a) {
    double f = std::floor(a.hi);
    if (f == a.hi) {
        double g = std::floor(a.lo);
        double e;
        double s = detail::quick_two_sum(f, g, e);
        return DD(s, e);
    }
    return DD(f);
}

inline DD round(const DD& a) { return floor(a + DD(0.5)); }

// ---- constants ----------------------------------------------------------

namespace ddc {
inline const DD pi     (3.141592653589793116e+00, 1.224646799147353207e-16);
inline const DD two_pi (6.283185307179586232e+00, 2.449293598294706414e-16);
inline const DD half_pi(1.570796326794896558e+00, 6.123233995736766036e-17);
inline const DD ln2    (6.931471805599452862e-01, 2.319046813846299558e-17);
inline const DD e      (2.718281828459045091e+00, 1.445646891729250158e-16);
inline constexpr double eps = 4.93038065763132e-32;  // 2^-104
}  // namespace ddc

// ---- transcendentals ----------------------------------------------------

inline DD sqrt(const DD& a) {
    if (a.hi == 0.0 && a.lo == 0.0) return DD(0.0);
    double x = 1.0 / std::sqrt(a.hi);
    double ax = a.hi * x;
    DD r = DD(ax) + (a - DD(ax) * DD(ax)).hi * (x * 0.5);
    // one more Newton step: r <- r + (a - r^2) / (2 r)
    r = r + (a - r * r) / (r * 2.0);
    return r;
}

inline DD exp(const DD& a) {
    // e^a = 2^m * (e^r)^512 with r = (a - m ln2)/512 small.
    constexpr double k = 512.0;
    if (a.hi <= -709.0) return DD(0.0);
    if (a.hi >= 709.0) return DD(std::numeric_limits<double>::infinity());
    double m = std::floor(a.hi / ddc::ln2.hi + 0.5);
    DD r = (a - ddc::ln2 * m) * (1.0 / k);
    DD p = r * r;
    DD s = r + ldexp(p, -1);
    DD t = p * r;
    double fact = 6.0;  // 3!
    int n = 3;
    while (std::fabs(t.hi) > 1e-40) {
        s += t / fact;
        ++n;
        fact *= n;
        t = t * r;
        if (n > 18) break;
    }
    // 9 squarings: s <- 2 s + s^2
    for (int i = 0; i < 9; ++i) s = ldexp(s, 1) + s * s;
    s += 1.0;
    return ldexp(s, static_cast<int>(m));
}

inline DD log(const DD& a) {
    // Newton on y -> y + a e^{-y} - 1 from a double seed.
    DD y(std::log(a.hi));
    y = y + a * exp(-y) - 1.0;
    y = y + a * exp(-y) - 1.0;
    return y;
}

inline void sincos_taylor(const DD& z, DD& s, DD& c) {
    // |z| <= pi/4; factorials carried in double-double so the coefficients
    // are accurate to full working precision
    DD zz = z * z;
    DD term = z;
    DD fact(1.0);
    double sign = 1.0;
    s = z;
    for (int n = 1; n <= 17; ++n) {
        fact = fact * static_cast<double>((2 * n) * (2 * n + 1));
        sign = -sign;
        term = term * zz;
        DD add = term / fact * sign;
        s += add;
        if (std::fabs(add.hi) < 1e-40) break;
    }
    term = DD(1.0);
    fact = DD(1.0);
    sign = 1.0;
    c = DD(1.0);
    for (int n = 1; n <= 17; ++n) {
        fact = fact * static_cast<double>((2 * n - 1) * (2 * n));
        sign = -sign;
        term = term * zz;
        DD add = term / fact * sign;
        c += add;
        if (std::fabs(add.hi) < 1e-40) break;
    }
}

inline void sincos(const DD& a, DD& sin_a, DD& cos_a) {
    // reduce mod 2*pi, then to |z| <= pi/4 with quadrant bookkeeping
    DD x = a;
    double k = std::floor(x.hi / ddc::two_pi.hi + 0.5);
    x = x - ddc::two_pi * k;
    double q = std::floor(x.hi / ddc::half_pi.hi + 0.5);
    x = x - ddc::half_pi * q;
    int iq = static_cast<int>(q);  // in {-2,..,2}
    DD s, c;
    sincos_taylor(x, s, c);
    switch (((iq % 4) + 4) % 4) {
        case 0: sin_a = s;  cos_a = c;  break;
        case 1: sin_a = c;  cos_a = -s; break;
        case 2: sin_a = -s; cos_a = -c; break;
        default: sin_a = -c; cos_a = s; break;
    }
}

inline DD sin(const DD& a) { DD s, c; sincos(a, s, c); return s; }
inline DD cos(const DD& a) { DD s, c; sincos(a, s, c); return c; }

inline DD atan2(const DD& y, const DD& x) {
    if (x.hi == 0.0 && x.lo == 0.0 && y.hi == 0.0 && y.lo == 0.0) return DD(0.0);
    // Newton on f(t) = sin(t) x - cos(t) y, f' = cos(t) x + sin(t) y
    DD r = sqrt(x * x + y * y);
    DD t(std::atan2(to_double(y), to_double(x)));
    for (int i = 0; i < 2; ++i) {
        DD s, c;
        sincos(t, s, c);
        t = t - (s * x - c * y) / r;
    }
    return t;
}

inline DD atan(const DD& a) { return atan2(a, DD(1.0)); }

inline DD pow(const DD& a, const DD& b) { return exp(b * log(a)); }
inline DD pow(const DD& a, double b) { return exp(DD(b) * log(a)); }

inline DD powi(const DD& a, int n) {
    if (n == 0) return DD(1.0);
    bool neg = n < 0;
    unsigned k = neg ? -static_cast<unsigned>(n) : static_cast<unsigned>(n);
    DD base = a, r(1.0);
    while (k) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return neg ? DD(1.0) / r : r;
}

inline DD hypot(const DD& x, const DD& y) { return sqrt(x * x + y * y); }

inline std::string to_string(const DD& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17g", a.hi, a.lo);
    return buf;
}

// ---- scalar traits used by the templated numeric kernels ----------------

template <class S>
struct fp;

template <>
struct fp<double> {
    static double eps() { return 2.220446049250313e-16; }
    static double pi() { return 3.141592653589793238462643383279502884; }
    static double two_pi() { return 2 * pi(); }
    static double half_pi() { return pi() / 2; }
    static double from(double d) { return d; }
    // log-gamma: shift until Re(z) >= threshold, then asymptotic series
    static constexpr double lgamma_shift_threshold = 10.0;
    static constexpr int lgamma_terms = 10;
    static constexpr int newton_iters = 3;
};

template <>
struct fp<DD> {
    static DD eps() { return DD(ddc::eps); }
    static DD pi() { return ddc::pi; }
    static DD two_pi() { return ddc::two_pi; }
    static DD half_pi() { return ddc::half_pi; }
    static DD from(double d) { return DD(d); }
    static constexpr double lgamma_shift_threshold = 24.0;
    static constexpr int lgamma_terms = 15;
    static constexpr int newton_iters = 4;
};

}  // namespace gl4
