#include "doctest.h"

#include <cmath>
#include <random>

#include "gl4/quadrature.hpp"

using namespace gl4;

TEST_CASE("gauss_legendre integrates polynomials exactly") {
    auto r = gauss_legendre<double>(8);
    double s = 0, s6 = 0;
    for (size_t i = 0; i < r.x.size(); ++i) {
        s += r.w[i];
        s6 += r.w[i] * std::pow(r.x[i], 6);
    }
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s6 == doctest::Approx(2.0 / 7.0).epsilon(1e-13));

    auto rd = gauss_legendre<DD>(12);
    DD sd(0.0);
    for (size_t i = 0; i < rd.x.size(); ++i) sd += rd.w[i] * powi(rd.x[i], 10);
    CHECK(std::fabs(to_double(sd) - 2.0 / 11.0) < 1e-28);
}

TEST_CASE("integrate_line: Gaussian on the imaginary axis gives sqrt(pi)") {
    LineQuadSpec<double> q;
    q.anchor = 0.0;
    q.half_height = 10.0;
    auto res = integrate_line([](Cplx z) { return Cplx(std::exp(-to_double(z.im) * to_double(z.im)), 0.0); }, q);
    CHECK(res.converged);
    CHECK(to_double(res.value.re) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
    CHECK(std::fabs(to_double(res.value.im)) < 1e-12);
    CHECK(res.abs_err < 1e-10);
}

TEST_CASE("integrate_line: zero function and linearity") {
    LineQuadSpec<double> q;
    q.anchor = 0.5;
    q.half_height = 6.0;
    auto zero = integrate_line([](Cplx) { return Cplx(0.0, 0.0); }, q);
    CHECK(to_double(abs(zero.value)) == 0.0);

    auto f = [](Cplx z) { return exp(Cplx(-to_double(z.im) * to_double(z.im), 0.3 * to_double(z.im))); };
    auto g = [](Cplx z) { double y = to_double(z.im); return Cplx(1.0 / (1 + y * y * y * y), 0.0); };
    auto If = integrate_line(f, q).value;
    auto Ig = integrate_line(g, q).value;
    auto Ifg = integrate_line([&](Cplx z) { return f(z) * 2.0 + g(z) * Cplx(0.0, 3.0); }, q).value;
    CHECK(to_double(abs(Ifg - (If * 2.0 + Ig * Cplx(0.0, 3.0)))) < 1e-9);
}

TEST_CASE("integrate_line error estimate bounds the doubling difference") {
    LineQuadSpec<double> q;
    q.anchor = 0.0;
    q.half_height = 8.0;
    q.nodes_per_panel = 8;
    auto f = [](Cplx z) {
        double y = to_double(z.im);
        return Cplx(std::exp(-0.5 * y * y) * std::cos(3 * y), std::exp(-y * y) * y);
    };
    auto lo = integrate_line(f, q);
    LineQuadSpec<double> q2 = q;
    q2.nodes_per_panel = 16;
    auto hi = integrate_line(f, q2);
    CHECK(to_double(abs(hi.value - lo.value)) <= lo.abs_err * 1.0001 + 1e-15);
}

TEST_CASE("integrate_line refinement hints resolve a nearby pole") {
    // f(y-line) with a pole at distance 0.3 from the line at height 2.
    auto f = [](Cplx z) {
        Cplx p(0.3, 2.0);
        return Cplx(1.0, 0.0) / ((z - p) * (z - p + Cplx(0.0, 4.0))) * exp(Cplx(-0.1 * to_double(z.im) * to_double(z.im), 0.0));
    };
    LineQuadSpec<double> coarse;
    coarse.anchor = 0.0;
    coarse.half_height = 12.0;
    coarse.nodes_per_panel = 12;
    LineQuadSpec<double> hint = coarse;
    hint.refine_centers = {2.0, -2.0};
    auto a = integrate_line(f, coarse);
    auto b = integrate_line(f, hint);
    // reference with very fine panels
    LineQuadSpec<double> fine = hint;
    fine.panel_width = 0.25;
    fine.nodes_per_panel = 24;
    auto ref = integrate_line(f, fine);
    CHECK(to_double(abs(b.value - ref.value)) <= to_double(abs(a.value - ref.value)) + 1e-14);
    CHECK(to_double(abs(b.value - ref.value)) < 1e-10);
}

TEST_CASE("integrate_adaptive on elementary integrals") {
    auto r1 = integrate_adaptive([](double) { return 1.0; }, 0.0, 10.0, 1e-10);
    CHECK(r1.value == doctest::Approx(10.0).epsilon(1e-12));

    auto r2 = integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 40.0, 1e-12);
    CHECK(r2.value == doctest::Approx(1.0).epsilon(1e-10));

    // kinked integrand with a breakpoint
    auto r3 = integrate_adaptive([](double x) { return std::fabs(x - 1.0); }, 0.0, 2.0, 1e-12, {1.0});
    CHECK(r3.value == doctest::Approx(1.0).epsilon(1e-12));
}
