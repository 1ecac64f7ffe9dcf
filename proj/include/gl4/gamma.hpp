#pragma once

// Complex log-gamma (principal determination on the positive real axis) via
// the asymptotic series with upward recursion, plus the two-factor Stirling
// decomposition |Gamma(sigma+it)|^2 ~ 2 pi |t|^{2 sigma - 1} e^{-pi |t|}.

#include <array>
#include <stdexcept>

#include "gl4/cplx.hpp"

namespace gl4 {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

namespace detail {

// B_{2n} / (2n (2n-1)) for n = 1..15, as numerator/denominator pairs
struct BernTerm { long long num; long long den; };
inline constexpr std::array<BernTerm, 15> kStirlingCoeffs = {{
    {1LL, 12LL},                      // B2/(2*1)
    {-1LL, 360LL},                    // B4/(4*3)
    {1LL, 1260LL},                    // B6/(6*5)
    {-1LL, 1680LL},                   // B8/(8*7)
    {1LL, 1188LL},                    // B10/(10*9)
    {-691LL, 360360LL},               // B12/(12*11)
    {1LL, 156LL},                     // B14/(14*13)
    {-3617LL, 122400LL},              // B16/(16*15)
    {43867LL, 244188LL},              // B18/(18*17)
    {-174611LL, 125400LL},            // B20/(20*19)
    {77683LL, 5796LL},                // B22/(22*21)
    {-236364091LL, 1506960LL},        // B24/(24*23)
    {657931LL, 300LL},                // B26/(26*25)
    {-3392780147LL, 93960LL},         // B28/(28*27)
    {1723168255201LL, 2492028LL},     // B30/(30*29)
}};

}  // namespace detail

// distance from z to the nearest pole of Gamma (non-positive integers)
template <class S>
S gamma_pole_distance(const cplx<S>& z) {
    using std::fabs; using std::sqrt;
    if (to_double(z.re) > 0.5) return fabs(z.re);  // not near any pole
    double n = std::round(-to_double(z.re));
    if (n < 0) n = 0;
    S dre = z.re + fp<S>::from(n);
    return sqrt(dre * dre + z.im * z.im);
}

template <class S>
cplx<S> log_gamma(cplx<S> z) {
    using C = cplx<S>;
    using std::log;

    if (gamma_pole_distance(z) < S(1e-12))
        throw pole_error("log_gamma: argument at a pole of Gamma");

    const S thresh = fp<S>::from(fp<S>::lgamma_shift_threshold);
    C shift_log{};
    int guard = 0;
    while (to_double(z.re) < to_double(thresh)) {
        shift_log += gl4::log(z);
        z += S(1.0);
        if (++guard > 4000) throw std::runtime_error("log_gamma: shift runaway");
    }

    // Stirling series at Re(z) >= threshold
    static const S half_log_two_pi = [] {
        using std::log;
        return log(fp<S>::two_pi()) / S(2.0);
    }();
    C lz = gl4::log(z);
    C r = (z - S(0.5)) * lz - z + half_log_two_pi;
    C zinv = C(S(1.0)) / z;
    C zinv2 = zinv * zinv;
    C pw = zinv;
    for (int n = 0; n < fp<S>::lgamma_terms; ++n) {
        const auto& c = detail::kStirlingCoeffs[static_cast<size_t>(n)];
        r += pw * (fp<S>::from(static_cast<double>(c.num)) / fp<S>::from(static_cast<double>(c.den)));
        pw *= zinv2;
    }
    return r - shift_log;
}

template <class S>
cplx<S> tgamma(const cplx<S>& z) {
    return gl4::exp(log_gamma(z));
}

// |Gamma(sigma + it)| via log_gamma, as a real number (log scale available)
template <class S>
S log_abs_gamma(const cplx<S>& z) {
    return real(log_gamma(z));
}

// Two-factor Stirling decomposition of Gamma(sigma + i t), |t| >= 1:
//   |Gamma(sigma+it)| ~ exp(poly_log) * exp(-exp_rate)
// with poly_log = log(sqrt(2 pi) |t|^{sigma-1/2}) and exp_rate = (pi/2)|t|.
struct StirlingFactors {
    double poly_log;
    double exp_rate;
};

inline StirlingFactors stirling_factors(double sigma, double t) {
    if (std::fabs(t) < 1.0)
        throw std::domain_error("stirling_factors: requires |t| >= 1");
    StirlingFactors f;
    f.poly_log = 0.5 * std::log(2.0 * 3.141592653589793238462643) +
                 (sigma - 0.5) * std::log(std::fabs(t));
    f.exp_rate = 0.5 * 3.141592653589793238462643 * std::fabs(t);
    return f;
}

}  // namespace gl4
