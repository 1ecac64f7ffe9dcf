#pragma once

// Quadrature kernels: Gauss-Legendre panels for complex line integrals
// (the Mellin-Barnes contours), and an adaptive 1-D rule for the real
// integrals of the bound-verification harness.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "gl4/cplx.hpp"

namespace gl4 {

// ---- Gauss-Legendre nodes on [-1, 1] -------------------------------------

template <class S>
struct GaussRule {
    std::vector<S> x;
    std::vector<S> w;
};

template <class S>
GaussRule<S> gauss_legendre(int n) {
    static std::map<int, GaussRule<S>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    GaussRule<S> r;
    r.x.resize(static_cast<size_t>(n));
    r.w.resize(static_cast<size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev-like seed
        double seed = std::cos(3.141592653589793 * (i + 0.75) / (n + 0.5));
        S x = fp<S>::from(seed);
        S dp{};
        for (int it = 0; it < fp<S>::newton_iters + 2; ++it) {
            S p0 = fp<S>::from(1.0), p1 = x;
            for (int k = 2; k <= n; ++k) {
                S p2 = (x * p1 * fp<S>::from(2 * k - 1) - p0 * fp<S>::from(k - 1)) / fp<S>::from(k);
                p0 = p1;
                p1 = p2;
            }
            dp = (x * p1 - p0) * fp<S>::from(n) / (x * x - S(1.0));
            x = x - p1 / dp;
        }
        r.x[static_cast<size_t>(i)] = -x;
        r.x[static_cast<size_t>(n - 1 - i)] = x;
        S w = S(2.0) / ((S(1.0) - x * x) * dp * dp);
        r.w[static_cast<size_t>(i)] = w;
        r.w[static_cast<size_t>(n - 1 - i)] = w;
    }
    std::lock_guard<std::mutex> lk(mu);
    cache[n] = r;
    return r;
}

// ---- vertical-line integration -------------------------------------------

// Integrates f(anchor + i y) dy over y in [-H, H] (a real-parameter
// integral along the vertical line; multiply by i for the contour integral
// in dz).  Composite Gauss-Legendre panels; panels shrink near the
// ordinates listed in refine_centers (poles sitting laterally close to the
// line).  The reported error is the difference against a run with a higher
// node count on the same panels.
template <class S>
struct LineQuadSpec {
    S anchor{};             // real part of the line
    S half_height{};        // H
    double panel_width = 1.0;
    int nodes_per_panel = 20;
    std::vector<double> refine_centers;  // Im-positions needing finer panels
    double refine_halfwidth = 1.5;
    int refine_factor = 4;
};

template <class S>
struct LineQuadResult {
    cplx<S> value{};
    double abs_err = 0.0;
    bool converged = true;
    size_t evals = 0;
};

template <class S>
std::vector<std::pair<double, double>> make_panels(const LineQuadSpec<S>& q) {
    double H = to_double(q.half_height);
    std::vector<double> cuts;
    cuts.push_back(-H);
    double fine = q.panel_width / q.refine_factor;
    auto near_refine = [&](double y) {
        for (double c : q.refine_centers)
            if (std::fabs(y - c) <= q.refine_halfwidth) return true;
        return false;
    };
    double y = -H;
    while (y < H) {
        double step = near_refine(y) ? fine : q.panel_width;
        // do not step over a refine window
        for (double c : q.refine_centers) {
            double lo = c - q.refine_halfwidth;
            if (y < lo && y + step > lo) step = lo - y;
        }
        y = std::min(y + step, H);
        cuts.push_back(y);
    }
    std::vector<std::pair<double, double>> panels;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i] + 1e-15) panels.emplace_back(cuts[i], cuts[i + 1]);
    return panels;
}

template <class S, class F>
LineQuadResult<S> integrate_line(F&& f, const LineQuadSpec<S>& q) {
    auto panels = make_panels(q);
    auto run = [&](int nodes, size_t& evals) {
        auto rule = gauss_legendre<S>(nodes);
        cplx<S> total{};
        for (auto [a, b] : panels) {
            S mid = fp<S>::from(0.5 * (a + b));
            S hw = fp<S>::from(0.5 * (b - a));
            cplx<S> acc{};
            for (int i = 0; i < nodes; ++i) {
                S y = mid + hw * rule.x[static_cast<size_t>(i)];
                acc += f(cplx<S>(q.anchor, y)) * rule.w[static_cast<size_t>(i)];
                ++evals;
            }
            total += acc * hw;
        }
        return total;
    };
    LineQuadResult<S> res;
    cplx<S> coarse = run(q.nodes_per_panel, res.evals);
    cplx<S> fine = run(2 * q.nodes_per_panel, res.evals);
    res.value = fine;
    res.abs_err = to_double(abs(fine - coarse));
    double scale = std::max(1e-300, to_double(abs(fine)));
    res.converged = res.abs_err <= 1e-6 * scale + 1e-290;
    return res;
}

// ---- adaptive real quadrature ---------------------------------------------

struct AdaptiveResult {
    double value = 0.0;
    double abs_err = 0.0;
    bool converged = true;
    size_t evals = 0;
};

namespace detail {

inline void adapt_gk(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth, AdaptiveResult& out) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    out.evals += 2;
    double left = (fa + 4 * flm + fm) * (m - a) / 6.0;
    double right = (fm + 4 * frm + fb) * (b - m) / 6.0;
    double delta = left + right - whole;
    if (depth <= 0) {
        out.value += left + right;
        out.abs_err += std::fabs(delta);
        out.converged = false;
        return;
    }
    if (std::fabs(delta) <= 15.0 * tol) {
        out.value += left + right + delta / 15.0;
        out.abs_err += std::fabs(delta) / 15.0;
        return;
    }
    adapt_gk(f, a, m, fa, flm, fm, left, tol / 2, depth - 1, out);
    adapt_gk(f, m, b, fm, frm, fb, right, tol / 2, depth - 1, out);
}

}  // namespace detail

// Adaptive Simpson with optional interior breakpoints (kinks of |x - B_j|).
inline AdaptiveResult integrate_adaptive(const std::function<double(double)>& f,
                                         double a, double b, double tol,
                                         const std::vector<double>& breaks = {},
                                         int max_depth = 48) {
    std::vector<double> cuts{a, b};
    for (double c : breaks)
        if (c > a && c < b) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    AdaptiveResult out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        double x0 = cuts[i], x1 = cuts[i + 1];
        if (x1 - x0 < 1e-300) continue;
        double fm = f(0.5 * (x0 + x1));
        double f0 = f(x0), f1 = f(x1);
        out.evals += 3;
        double whole = (f0 + 4 * fm + f1) * (x1 - x0) / 6.0;
        detail::adapt_gk(f, x0, x1, f0, fm, f1, whole,
                         tol * std::max(1.0, std::fabs(whole)) /
                             static_cast<double>(cuts.size()),
                         max_depth, out);
    }
    return out;
}

}  // namespace gl4
