#include "doctest.h"

#include <random>
#include <set>

#include "gl4/params.hpp"

using namespace gl4;

namespace {
Eigen::VectorXcd vec3(Cd a, Cd b, Cd c) {
    Eigen::VectorXcd v(3);
    v << a, b, c;
    return v;
}
}  // namespace

TEST_CASE("spectral_to_langlands matches the stated linear forms (n=4)") {
    // v = 0 -> alpha = 0
    auto a0 = spectral_to_langlands(SpectralParam(4, Eigen::VectorXcd::Zero(3)));
    for (int i = 0; i < 4; ++i) CHECK(std::abs(a0[i]) == 0.0);

    // generic v: alpha1 = 3v1+2v2+v3 and alpha4 = -v1-2v2-3v3
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
        Cd v1(u(rng), u(rng)), v2(u(rng), u(rng)), v3(u(rng), u(rng));
        auto a = spectral_to_langlands(SpectralParam(4, vec3(v1, v2, v3)));
        CHECK(std::abs(a[0] - (3.0 * v1 + 2.0 * v2 + v3)) < 1e-14);
        CHECK(std::abs(a[1] - (-v1 + 2.0 * v2 + v3)) < 1e-14);
        CHECK(std::abs(a[2] - (-v1 - 2.0 * v2 + v3)) < 1e-14);
        CHECK(std::abs(a[3] - (-v1 - 2.0 * v2 - 3.0 * v3)) < 1e-14);
        CHECK(std::abs(a.full().sum()) < 1e-14);
    }
}

TEST_CASE("langlands_to_spectral inverts, all ranks") {
    // hand-solved case: alpha = (3,-1,-1,-1) -> v = (1,0,0)
    Eigen::VectorXcd alpha(4);
    alpha << 3.0, -1.0, -1.0, -1.0;
    auto v = langlands_to_spectral(LanglandsParam::from_full(alpha));
    CHECK(std::abs(v.v(0) - Cd(1.0)) < 1e-15);
    CHECK(std::abs(v.v(1)) < 1e-15);
    CHECK(std::abs(v.v(2)) < 1e-15);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int n = 2; n <= 4; ++n) {
        for (int t = 0; t < 100; ++t) {
            Eigen::VectorXcd head(n - 1);
            for (int i = 0; i < n - 1; ++i) head(i) = Cd(u(rng), u(rng));
            LanglandsParam a(n, head);
            auto back = spectral_to_langlands(langlands_to_spectral(a));
            CHECK((back.full() - a.full()).cwiseAbs().maxCoeff() < 1e-13);
            auto sp = langlands_to_spectral(a);
            auto fwd = langlands_to_spectral(spectral_to_langlands(sp));
            CHECK((fwd.v - sp.v).cwiseAbs().maxCoeff() < 1e-13);
        }
    }
}

TEST_CASE("is_exponents reproduces the displayed exponent table") {
    auto e100 = is_exponents({Cd(1), Cd(0), Cd(0)});
    CHECK(e100[0] == Cd(1));
    CHECK(e100[1] == Cd(2));
    CHECK(e100[2] == Cd(3));
    auto e010 = is_exponents({Cd(0), Cd(1), Cd(0)});
    CHECK(e010[0] == Cd(2));
    CHECK(e010[1] == Cd(4));
    CHECK(e010[2] == Cd(2));
    auto e0 = is_exponents({Cd(0), Cd(0), Cd(0)});
    CHECK(std::abs(e0[0]) + std::abs(e0[1]) + std::abs(e0[2]) == 0.0);
}

TEST_CASE("laplace_eigenvalue") {
    CHECK(std::abs(laplace_eigenvalue(LanglandsParam(4, Eigen::VectorXcd::Zero(3))) - Cd(2.5)) < 1e-15);
    CHECK(std::abs(laplace_eigenvalue(LanglandsParam(3, Eigen::VectorXcd::Zero(2))) - Cd(1.0)) < 1e-15);
    for (double t : {0.3, 1.9}) {
        Eigen::VectorXcd head(1);
        head << Cd(0.0, t);
        CHECK(std::abs(laplace_eigenvalue(LanglandsParam(2, head)) - Cd(0.25 + t * t)) < 1e-14);
    }
}

TEST_CASE("weyl_orbit: 24 elements, sum zero, eigenvalue invariant") {
    Eigen::VectorXcd head(3);
    head << Cd(0.1, 0.9), Cd(-0.45, 0.2), Cd(0.7, -1.3);
    LanglandsParam a(4, head);  // derived fourth entry differs from all three
    auto orbit = weyl_orbit(a);
    REQUIRE(orbit.size() == 24);
    auto key = [](const LanglandsParam& p) {
        char buf[256];
        snprintf(buf, sizeof buf, "%.12g %.12g %.12g %.12g %.12g %.12g",
                 p[0].real(), p[0].imag(), p[1].real(), p[1].imag(), p[2].real(), p[2].imag());
        return std::string(buf);
    };
    std::set<std::string> distinct;
    Cd lam = laplace_eigenvalue(a);
    bool contains_self = false;
    for (const auto& b : orbit) {
        CHECK(std::abs(b.full().sum()) < 1e-13);
        CHECK(std::abs(laplace_eigenvalue(b) - lam) < 1e-12);
        distinct.insert(key(b));
        if ((b.full() - a.full()).cwiseAbs().maxCoeff() < 1e-15) contains_self = true;
    }
    CHECK(contains_self);
    CHECK(distinct.size() == 24);  // generic entries -> 24 distinct tuples

    // orbit of an orbit element is the same set
    auto orbit2 = weyl_orbit(orbit[5]);
    std::set<std::string> s1, s2;
    for (const auto& b : orbit) s1.insert(key(b));
    for (const auto& b : orbit2) s2.insert(key(b));
    CHECK(s1 == s2);

    // all-zero parameter: 24 copies of zero
    auto zorbit = weyl_orbit(LanglandsParam(4, Eigen::VectorXcd::Zero(3)));
    for (const auto& b : zorbit) CHECK(b.full().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("from_full validates the trace condition") {
    Eigen::VectorXcd bad(4);
    bad << 1.0, 1.0, 1.0, 1.0;
    CHECK_THROWS(LanglandsParam::from_full(bad));
    CHECK_THROWS(SpectralParam(5, Eigen::VectorXcd::Zero(4)));
}

TEST_CASE("relevant Weyl elements have determinant one and the right shapes") {
    const auto& ws = relevant_weyl_elements();
    REQUIRE(ws.size() == 8);
    for (const auto& w : ws) {
        Eigen::Matrix4i m = w.matrix();
        Eigen::Matrix4d md = m.cast<double>();
        CHECK(std::lround(md.determinant()) == 1);
        // exactly one nonzero entry per row/column, each +-1
        for (int i = 0; i < 4; ++i) {
            CHECK(m.row(i).cwiseAbs().sum() == 1);
            CHECK(m.col(i).cwiseAbs().sum() == 1);
        }
    }
    CHECK(weyl_element("w1").matrix() == Eigen::Matrix4i::Identity());
    // w8 is the long element (antidiagonal, all +1)
    Eigen::Matrix4i w8 = weyl_element("w8").matrix();
    for (int j = 0; j < 4; ++j) CHECK(w8(3 - j, j) == 1);
    CHECK_THROWS(weyl_element("w9"));
}
