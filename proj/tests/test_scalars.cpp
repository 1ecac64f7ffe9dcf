#include "doctest.h"

#include <cmath>
#include <random>

#include "gl4/cplx.hpp"
#include "gl4/ddreal.hpp"

using namespace gl4;

namespace {
double dd_err(const DD& a, double ref) { return std::fabs(to_double(a) - ref); }
}  // namespace

TEST_CASE("dd basic arithmetic keeps the low word") {
    DD a(1.0, 1e-20);
    DD b = a + DD(1e-25);
    CHECK(to_double(b - DD(1.0)) == doctest::Approx(1e-20 + 1e-25).epsilon(1e-10));

    // (1/3) * 3 - 1 should be ~1e-32, far below double eps
    DD third = DD(1.0) / DD(3.0);
    DD r = third * DD(3.0) - DD(1.0);
    CHECK(std::fabs(to_double(r)) < 1e-30);
}

TEST_CASE("dd sqrt/exp/log/sincos against identities") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(0.1, 20.0);
    for (int i = 0; i < 200; ++i) {
        double x = uni(rng);
        DD dx(x);

        DD s = gl4::sqrt(dx);
        CHECK(std::fabs(to_double(s * s - dx)) < 1e-29 * x);

        DD e = gl4::exp(dx);
        DD l = gl4::log(e);
        CHECK(std::fabs(to_double(l - dx)) < 1e-29 * x);

        DD si, co;
        gl4::sincos(dx, si, co);
        CHECK(std::fabs(to_double(si * si + co * co - DD(1.0))) < 1e-30);
    }
    // cross-check against double implementations at double accuracy
    for (double x : {0.3, 1.7, 4.2, 11.0}) {
        CHECK(dd_err(gl4::exp(DD(x)), std::exp(x)) < 1e-12 * std::exp(x));
        CHECK(dd_err(gl4::log(DD(x)), std::log(x)) < 1e-14);
        CHECK(dd_err(gl4::sin(DD(x)), std::sin(x)) < 1e-14);
        CHECK(dd_err(gl4::cos(DD(x)), std::cos(x)) < 1e-14);
    }
}

TEST_CASE("dd atan2 matches tan inverse") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        double y = uni(rng), x = uni(rng);
        if (std::fabs(x) + std::fabs(y) < 1e-3) continue;
        DD th = gl4::atan2(DD(y), DD(x));
        DD s, c;
        gl4::sincos(th, s, c);
        DD r = gl4::sqrt(DD(x) * DD(x) + DD(y) * DD(y));
        CHECK(std::fabs(to_double(s * r - DD(y))) < 1e-28 * to_double(r));
        CHECK(std::fabs(to_double(c * r - DD(x))) < 1e-28 * to_double(r));
        CHECK(dd_err(th, std::atan2(y, x)) < 1e-13);
    }
}

TEST_CASE("dd floor and comparisons") {
    CHECK(to_double(gl4::floor(DD(2.7))) == 2.0);
    CHECK(to_double(gl4::floor(DD(-2.7))) == -3.0);
    DD two_minus(2.0, -1e-20);
    CHECK(to_double(gl4::floor(two_minus)) == 1.0);
    CHECK(DD(1.0, 1e-20) > DD(1.0));
    CHECK(DD(1.0) < DD(1.0, 1e-20));
}

TEST_CASE("cplx arithmetic and elementary functions, double and dd") {
    auto run = [](auto tag) {
        using S = decltype(tag);
        using C = cplx<S>;
        double tol = std::is_same_v<S, double> ? 1e-14 : 1e-28;

        C z(fp<S>::from(0.7), fp<S>::from(-1.3));
        C w(fp<S>::from(-2.1), fp<S>::from(0.4));
        C p = z * w;
        C q = p / w;
        CHECK(to_double(abs(q - z)) < tol * 10);

        C lz = log(z);
        C ez = exp(lz);
        CHECK(to_double(abs(ez - z)) < tol * 10);

        // exp(i pi) = -1
        C ipi(S(0.0), fp<S>::pi());
        CHECK(to_double(abs(exp(ipi) + C(S(1.0)))) < tol * 10);

        // unit phase at 1/2 is -1
        C half = unit_phase(fp<S>::from(0.5));
        CHECK(to_double(abs(half + C(S(1.0)))) < tol * 10);
    };
    run(double{});
    run(DD{});
}
