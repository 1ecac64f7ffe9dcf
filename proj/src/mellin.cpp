#include "gl4/mellin.hpp"

#include <atomic>

#include <Eigen/Dense>

#include "gl4/parallel.hpp"

namespace gl4 {

// ---- pole lattice ----------------------------------------------------------

std::vector<PoleSpec> pole_lattice(const LanglandsParam& alpha, int axis, int delta_max) {
    if (alpha.rank() != 4) throw std::invalid_argument("pole_lattice: rank 4 only");
    if (axis < 1 || axis > 3) throw std::invalid_argument("pole_lattice: axis must be 1, 2 or 3");
    std::vector<PoleSpec> out;
    for (int d = 0; d <= delta_max; ++d) {
        if (axis == 2) {
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) out.push_back({2, i, j, d});
        } else {
            for (int i = 0; i < 4; ++i) out.push_back({axis, i, 0, d});
        }
    }
    return out;
}

Cd pole_location(const LanglandsParam& alpha, const PoleSpec& p) {
    Cd shift(2.0 * p.shift, 0.0);
    switch (p.axis) {
        case 1: return -alpha[p.i] - shift;
        case 2: return -alpha[p.i] - alpha[p.j] - shift;
        case 3: return alpha[p.i] - shift;
        default: throw std::invalid_argument("pole_location: bad axis");
    }
}

ShiftDenominators shift_denominators(const LanglandsParam& alpha, const std::array<Cd, 3>& s) {
    ShiftDenominators b;
    b.B1 = 1.0;
    b.B3 = 1.0;
    for (int i = 0; i < 4; ++i) {
        b.B1 *= s[0] + alpha[i];
        b.B3 *= s[2] - alpha[i];
    }
    b.B2 = 1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) b.B2 *= s[1] + alpha[i] + alpha[j];
    return b;
}

// ---- closed-form residues ----------------------------------------------------

namespace {

template <class S>
void require_separated(const std::array<cplx<S>, 4>& a) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (to_double(abs(a[static_cast<size_t>(i)] - a[static_cast<size_t>(j)])) < 1e-6)
                throw pole_error("mellin_residue: alpha entries closer than 1e-6");
}

template <class S>
cplx<S> lG(const cplx<S>& x) {
    return log_gamma(cplx<S>(x * 0.5));
}

}  // namespace

template <class S>
cplx<S> mellin_residue(const std::array<cplx<S>, 4>& a, const PoleSpec& which,
                       const std::array<cplx<S>, 2>& s_rest) {
    using C = cplx<S>;
    if (which.shift != 0)
        throw std::invalid_argument("mellin_residue: closed forms implemented for delta = 0 only");
    require_separated(a);
    static const S pi = fp<S>::pi();
    const S quarter = fp<S>::from(0.25);

    if (which.axis == 1) {
        C ak = a[static_cast<size_t>(which.i)];
        const C& s2 = s_rest[0];
        const C& s3 = s_rest[1];
        C lg = -lG(s2 + s3 + ak);
        for (int j = 0; j < 4; ++j) {
            if (j == which.i) continue;
            C aj = a[static_cast<size_t>(j)];
            lg += lG(aj - ak) + lG(s2 + ak + aj) + lG(s3 - aj);
        }
        return pow_real_base(pi, ak - s2 - s3) * exp(lg) * quarter;
    }
    if (which.axis == 2) {
        C ai = a[static_cast<size_t>(which.i)];
        C aj = a[static_cast<size_t>(which.j)];
        const C& s1 = s_rest[0];
        const C& s3 = s_rest[1];
        C lg = lG(s1 + ai) + lG(s1 + aj);
        for (int b = 0; b < 4; ++b) {
            if (b == which.i || b == which.j) continue;
            C ab = a[static_cast<size_t>(b)];
            lg += lG(ab - ai) + lG(ab - aj) + lG(s3 - ab);
        }
        return pow_real_base(pi, ai + aj - s1 - s3) * exp(lg) * quarter;
    }
    if (which.axis == 3) {
        C ak = a[static_cast<size_t>(which.i)];
        const C& s1 = s_rest[0];
        const C& s2 = s_rest[1];
        C lg = -lG(s1 + s2 - ak);
        for (int j = 0; j < 4; ++j) {
            if (j == which.i) continue;
            C aj = a[static_cast<size_t>(j)];
            lg += lG(ak - aj) + lG(s2 - ak - aj) + lG(s1 + aj);
        }
        return pow_real_base(pi, -ak - s1 - s2) * exp(lg) * quarter;
    }
    throw std::invalid_argument("mellin_residue: bad axis");
}

template cplx<double> mellin_residue<double>(const std::array<cplx<double>, 4>&, const PoleSpec&,
                                             const std::array<cplx<double>, 2>&);
template cplx<DD> mellin_residue<DD>(const std::array<cplx<DD>, 4>&, const PoleSpec&,
                                     const std::array<cplx<DD>, 2>&);

// ---- contour checks ----------------------------------------------------------

namespace {

template <class S>
std::array<cplx<S>, 3> assemble_s(int axis, const cplx<S>& moving, const std::array<cplx<S>, 2>& rest) {
    switch (axis) {
        case 1: return {moving, rest[0], rest[1]};
        case 2: return {rest[0], moving, rest[1]};
        case 3: return {rest[0], rest[1], moving};
        default: throw std::invalid_argument("bad axis");
    }
}

template <class S>
cplx<S> contour_integral_axis(const HatEval<S>& eng, int axis, const cplx<S>& center, double radius,
                              const std::array<cplx<S>, 2>& rest, int n_nodes, size_t* evals) {
    using C = cplx<S>;
    C acc{};
    for (int m = 0; m < n_nodes; ++m) {
        S theta = fp<S>::two_pi() * fp<S>::from(static_cast<double>(m) / n_nodes);
        C dir;
        if constexpr (std::is_same_v<S, double>) {
            dir = C(std::cos(theta), std::sin(theta));
        } else {
            S si, co;
            sincos(theta, si, co);
            dir = C(co, si);
        }
        C sm = center + dir * fp<S>::from(radius);
        auto r = eng.value(assemble_s<S>(axis, sm, rest));
        if (evals) *evals += r.evals;
        acc += r.value * dir;
    }
    return acc * (fp<S>::from(radius) / fp<S>::from(static_cast<double>(n_nodes)));
}

}  // namespace

template <class S>
ResidueCheckResult<S> residue_contour_check(const std::array<cplx<S>, 4>& alpha,
                                            const PoleSpec& which,
                                            const std::array<cplx<S>, 2>& s_rest,
                                            double radius, int n_nodes,
                                            const MellinOpts<S>& opts) {
    ResidueCheckResult<S> out;
    cplx<S> center;
    switch (which.axis) {
        case 1: center = -alpha[static_cast<size_t>(which.i)]; break;
        case 2: center = -alpha[static_cast<size_t>(which.i)] - alpha[static_cast<size_t>(which.j)]; break;
        case 3: center = alpha[static_cast<size_t>(which.i)]; break;
        default: throw std::invalid_argument("bad axis");
    }
    HatEval<S> eng(alpha, opts);
    out.contour = contour_integral_axis<S>(eng, which.axis, center, radius, s_rest, n_nodes, &out.evals);
    out.closed_form = mellin_residue<S>(alpha, which, s_rest);
    out.rel_err = to_double(abs(out.contour - out.closed_form)) /
                  std::max(1e-300, to_double(abs(out.closed_form)));
    return out;
}

template ResidueCheckResult<double> residue_contour_check<double>(
    const std::array<cplx<double>, 4>&, const PoleSpec&, const std::array<cplx<double>, 2>&,
    double, int, const MellinOpts<double>&);
template ResidueCheckResult<DD> residue_contour_check<DD>(
    const std::array<cplx<DD>, 4>&, const PoleSpec&, const std::array<cplx<DD>, 2>&,
    double, int, const MellinOpts<DD>&);

template <class S>
cplx<S> mellin_contour_s1(const std::array<cplx<S>, 4>& alpha, const cplx<S>& center,
                          double radius, const std::array<cplx<S>, 2>& s23, int n_nodes,
                          const MellinOpts<S>& opts) {
    HatEval<S> eng(alpha, opts);
    return contour_integral_axis<S>(eng, 1, center, radius, s23, n_nodes, nullptr);
}

template cplx<double> mellin_contour_s1<double>(const std::array<cplx<double>, 4>&, const cplx<double>&,
                                                double, const std::array<cplx<double>, 2>&, int,
                                                const MellinOpts<double>&);
template cplx<DD> mellin_contour_s1<DD>(const std::array<cplx<DD>, 4>&, const cplx<DD>&, double,
                                        const std::array<cplx<DD>, 2>&, int, const MellinOpts<DD>&);

// ---- cached tensor grid -------------------------------------------------------

namespace {

struct Axis {
    std::vector<double> x;
    std::vector<double> w;
};

Axis panel_axis(double H, double width, int nodes) {
    Axis ax;
    auto rule = gauss_legendre<double>(nodes);
    int npan = std::max(1, static_cast<int>(std::ceil(2.0 * H / width)));
    double step = 2.0 * H / npan;
    for (int p = 0; p < npan; ++p) {
        double a = -H + p * step, b = a + step;
        for (int i = 0; i < nodes; ++i) {
            ax.x.push_back(0.5 * (a + b) + 0.5 * step * rule.x[static_cast<size_t>(i)]);
            ax.w.push_back(0.5 * step * rule.w[static_cast<size_t>(i)]);
        }
    }
    return ax;
}

Cd lgam_half(const Cd& z) {
    return log_gamma(Cplx(z.real() * 0.5, z.imag() * 0.5)).to_std();
}

Cd cexp(const Cd& z) { return std::exp(z); }

// (2 pi)^{-4} for the three inversion lines plus the Barnes line, and the
// 2^{-4} of the transform normalization
const double kGridPrefactor = std::pow(2.0 * M_PI, -4.0) / 16.0;

}  // namespace

WhittakerGrid WhittakerGrid::build(const LanglandsParam& alpha, const WhittakerGridOpts& opts) {
    if (alpha.rank() != 4) throw std::invalid_argument("WhittakerGrid: rank 4 only");
    for (double u : opts.u)
        if (!(u > 0.0 && u < 2.0)) throw std::invalid_argument("WhittakerGrid: anchors must lie in (0, 2)");

    WhittakerGrid g;
    g.u_ = opts.u;
    const Cd a1 = alpha[0], a2 = alpha[1], a3 = alpha[2], a4 = alpha[3];
    const Cd a12 = a1 + a2;

    double taumax = 0.0, remax = 0.0;
    for (int i = 0; i < 4; ++i) {
        taumax = std::max(taumax, std::fabs(alpha[i].imag()));
        remax = std::max(remax, std::fabs(alpha[i].real()));
    }
    if (remax > 0.2) throw std::invalid_argument("WhittakerGrid: alpha real parts too large");

    const double Hs = opts.h_s + 1.5 * taumax;
    for (auto& ax : g.xi_) ax.clear();
    for (int axn = 0; axn < 3; ++axn) {
        Axis ax = panel_axis(Hs, opts.panel_s, opts.nodes_s);
        g.xi_[static_cast<size_t>(axn)] = ax.x;
        g.w_[static_cast<size_t>(axn)] = ax.w;
    }
    g.tail_ = std::exp(-0.5 * M_PI * opts.h_s);

    // The left pole families of the Barnes integrand sit at Re(u) = -u_j (and
    // deeper); the right families start at Re(u) = Re(alpha_{3,4}).  Put the
    // line midway and scale the panel width to the lateral margin.
    double umin = std::min({opts.u[0], opts.u[1], opts.u[2]});
    double right_min = std::min(a3.real(), a4.real());
    double c = (right_min - umin) * 0.5;
    double margin = std::min(umin + c, right_min - c);
    if (margin < 2.5e-2) throw pole_error("WhittakerGrid: no room for the inner contour");
    double panel_t = std::clamp(1.7 * margin, 0.05, 1.0);
    double Ht = opts.h_t + 0.75 * opts.h_s + 1.5 * taumax;
    Axis t_ax = panel_axis(Ht, panel_t, opts.nodes_t);
    const size_t nt = t_ax.x.size();

    const size_t n1 = g.xi_[0].size(), n2 = g.xi_[1].size(), n3 = g.xi_[2].size();
    const size_t need = nt * (n1 * n2 + n2 * n3) + 4 * nt * (n1 + n2 + n3);
    if (need > opts.budget) throw budget_error("WhittakerGrid: Gamma evaluation budget exceeded");

    std::vector<Cd> s1(n1), s2(n2), s3(n3);
    for (size_t i = 0; i < n1; ++i) s1[i] = Cd(opts.u[0], g.xi_[0][i]);
    for (size_t j = 0; j < n2; ++j) s2[j] = Cd(opts.u[1], g.xi_[1][j]);
    for (size_t k = 0; k < n3; ++k) s3[k] = Cd(opts.u[2], g.xi_[2][k]);
    std::vector<Cd> ut(nt);
    for (size_t m = 0; m < nt; ++m) ut[m] = Cd(c, t_ax.x[m]);

    std::vector<Cd> E0(nt);
    Eigen::MatrixXcd E1(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(n1));
    Eigen::MatrixXcd E2(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(n2));
    Eigen::MatrixXcd E3(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(n3));
    std::atomic<size_t> evals{0};
    parallel_for(nt, [&](size_t m) {
        const Cd u = ut[m];
        E0[m] = cexp(lgam_half(-u + a3) + lgam_half(-u + a4)) * t_ax.w[m];
        auto mi = static_cast<Eigen::Index>(m);
        for (size_t i = 0; i < n1; ++i) E1(mi, static_cast<Eigen::Index>(i)) = cexp(lgam_half(u + s1[i]));
        for (size_t j = 0; j < n2; ++j)
            E2(mi, static_cast<Eigen::Index>(j)) = cexp(lgam_half(u + s2[j] + a1) + lgam_half(u + s2[j] + a2));
        for (size_t k = 0; k < n3; ++k) E3(mi, static_cast<Eigen::Index>(k)) = cexp(lgam_half(u + s3[k] + a12));
        evals += 2 + n1 + 2 * n2 + n3;
    }, opts.threads);

    const double logpi = std::log(M_PI);
    std::vector<Cd> A1(n1), A2(n2), A3(n3);
    for (size_t i = 0; i < n1; ++i)
        A1[i] = cexp(lgam_half(s1[i] + a1) + lgam_half(s1[i] + a2) - s1[i] * logpi) * g.w_[0][i];
    for (size_t j = 0; j < n2; ++j)
        A2[j] = cexp(lgam_half(s2[j] - a12) + lgam_half(s2[j] + a12) - s2[j] * logpi) * g.w_[1][j];
    for (size_t k = 0; k < n3; ++k)
        A3[k] = cexp(lgam_half(s3[k] - a1) + lgam_half(s3[k] - a2) - s3[k] * logpi) * g.w_[2][k];
    evals += 2 * (n1 + n2 + n3);

    g.weighted_.assign(n1 * n2 * n3, Cd(0.0, 0.0));

    parallel_for(n2, [&](size_t j) {
        Eigen::MatrixXcd P(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(n1));
        Eigen::MatrixXcd Q(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(n3));
        auto ji = static_cast<Eigen::Index>(j);
        for (size_t m = 0; m < nt; ++m) {
            const Cd u = ut[m];
            auto mi = static_cast<Eigen::Index>(m);
            for (size_t i = 0; i < n1; ++i)
                P(mi, static_cast<Eigen::Index>(i)) =
                    E0[m] * E1(mi, static_cast<Eigen::Index>(i)) * cexp(-lgam_half(u + s1[i] + s2[j] + a12));
            for (size_t k = 0; k < n3; ++k)
                Q(mi, static_cast<Eigen::Index>(k)) =
                    E2(mi, ji) * E3(mi, static_cast<Eigen::Index>(k)) * cexp(-lgam_half(u + s2[j] + s3[k]));
        }
        evals += nt * (n1 + n3);
        Eigen::MatrixXcd Jik = P.transpose() * Q;  // sum over the line nodes
        for (size_t i = 0; i < n1; ++i)
            for (size_t k = 0; k < n3; ++k)
                g.weighted_[g.idx(i, j, k)] =
                    A1[i] * A2[j] * A3[k] * Jik(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    }, opts.threads);

    g.evals_ = evals;
    return g;
}

namespace {

std::vector<Cd> axis_powers(const std::vector<double>& xi, double u, double expo, double y) {
    // y^{expo - s} along s = u + i xi
    std::vector<Cd> p(xi.size());
    double ly = std::log(y);
    double mag = std::pow(y, expo - u);
    for (size_t i = 0; i < xi.size(); ++i) p[i] = std::polar(mag, -xi[i] * ly);
    return p;
}

}  // namespace

Cd WhittakerGrid::whittaker(double y1, double y2, double y3) const {
    if (!(y1 > 0 && y2 > 0 && y3 > 0)) throw std::invalid_argument("whittaker: y must be positive");
    auto p1 = axis_powers(xi_[0], u_[0], 1.5, y1);
    auto p2 = axis_powers(xi_[1], u_[1], 2.0, y2);
    auto p3 = axis_powers(xi_[2], u_[2], 1.5, y3);
    const size_t n1 = xi_[0].size(), n2 = xi_[1].size(), n3 = xi_[2].size();
    Cd out(0.0, 0.0);
    for (size_t i = 0; i < n1; ++i) {
        Cd acc_i(0.0, 0.0);
        for (size_t j = 0; j < n2; ++j) {
            const Cd* row = &weighted_[idx(i, j, 0)];
            Cd acc(0.0, 0.0);
            for (size_t k = 0; k < n3; ++k) acc += row[k] * p3[k];
            acc_i += acc * p2[j];
        }
        out += acc_i * p1[i];
    }
    return out * kGridPrefactor;
}

std::vector<Cd> WhittakerGrid::whittaker_batch(const std::vector<double>& y1s,
                                               const std::vector<double>& y2s,
                                               const std::vector<double>& y3s) const {
    const size_t n1 = xi_[0].size(), n2 = xi_[1].size(), n3 = xi_[2].size();
    const size_t m1 = y1s.size(), m2 = y2s.size(), m3 = y3s.size();
    auto I = [](size_t v) { return static_cast<Eigen::Index>(v); };

    Eigen::MatrixXcd C3(I(n3), I(m3)), C2(I(n2), I(m2)), C1(I(n1), I(m1));
    for (size_t t = 0; t < m3; ++t) {
        auto p = axis_powers(xi_[2], u_[2], 1.5, y3s[t]);
        for (size_t k = 0; k < n3; ++k) C3(I(k), I(t)) = p[k];
    }
    for (size_t t = 0; t < m2; ++t) {
        auto p = axis_powers(xi_[1], u_[1], 2.0, y2s[t]);
        for (size_t j = 0; j < n2; ++j) C2(I(j), I(t)) = p[j];
    }
    for (size_t t = 0; t < m1; ++t) {
        auto p = axis_powers(xi_[0], u_[0], 1.5, y1s[t]);
        for (size_t i = 0; i < n1; ++i) C1(I(i), I(t)) = p[i];
    }

    using RowMat = Eigen::Matrix<Cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMat> T(weighted_.data(), I(n1 * n2), I(n3));
    Eigen::MatrixXcd S1 = T * C3;  // (n1 n2) x m3

    std::vector<Cd> out(m1 * m2 * m3);
    for (size_t t3 = 0; t3 < m3; ++t3) {
        Eigen::Map<const RowMat> slab(S1.col(I(t3)).data(), I(n1), I(n2));
        Eigen::MatrixXcd S2 = slab * C2;            // n1 x m2
        Eigen::MatrixXcd S3 = C1.transpose() * S2;  // m1 x m2
        for (size_t t1 = 0; t1 < m1; ++t1)
            for (size_t t2 = 0; t2 < m2; ++t2)
                out[(t1 * m2 + t2) * m3 + t3] = S3(I(t1), I(t2)) * kGridPrefactor;
    }
    return out;
}

Cd WhittakerGrid::direct_mellin(const std::array<Cd, 3>& s, double g_lo, double g_hi,
                                int n_per_axis) const {
    std::vector<double> ys(static_cast<size_t>(n_per_axis));
    double dg = (g_hi - g_lo) / n_per_axis;
    for (int m = 0; m < n_per_axis; ++m) ys[static_cast<size_t>(m)] = std::exp(g_lo + (m + 0.5) * dg);
    auto W = whittaker_batch(ys, ys, ys);
    Cd acc(0.0, 0.0);
    const size_t n = ys.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Cd pw = std::pow(ys[i], s[0] - 1.5) * std::pow(ys[j], s[1] - 2.0) *
                        std::pow(ys[k], s[2] - 1.5);
                acc += pw * W[(i * n + j) * n + k];
            }
    return acc * (dg * dg * dg);
}

Cd inner_product_rhs(const LanglandsParam& a, const LanglandsParam& b, double s_real) {
    Cd lg(0.0, 0.0);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) lg += lgam_half(Cd(s_real, 0.0) + a[j] - b[k]);
    Cd den = std::log(2.0) + 6.0 * s_real * std::log(M_PI) + log_gamma(Cplx(2.0 * s_real, 0.0)).to_std();
    return cexp(lg - den);
}

InnerProductResult inner_product_check(const LanglandsParam& a, const LanglandsParam& b,
                                       double s_real, const WhittakerGridOpts& gopts,
                                       double g_lo, double g_hi, int y_nodes_per_axis,
                                       size_t budget) {
    InnerProductResult out;
    const size_t n = static_cast<size_t>(y_nodes_per_axis);
    bool same = (a.full() - b.full()).cwiseAbs().maxCoeff() < 1e-15;

    WhittakerGrid ga = WhittakerGrid::build(a, gopts);
    out.evals += ga.gamma_evals();
    WhittakerGrid gb = same ? ga : WhittakerGrid::build(b, gopts);
    if (!same) out.evals += gb.gamma_evals();
    if (out.evals + n * n * n > budget)
        throw budget_error("inner_product_check: evaluation budget exceeded");

    std::vector<double> ys(n);
    double dg = (g_hi - g_lo) / static_cast<double>(n);
    for (size_t m = 0; m < n; ++m) ys[m] = std::exp(g_lo + (static_cast<double>(m) + 0.5) * dg);

    auto Wa = ga.whittaker_batch(ys, ys, ys);
    auto Wb = same ? Wa : gb.whittaker_batch(ys, ys, ys);

    // measure: prod_k y_k^{(4-k)s} dy_k / y_k^{k(4-k)+1}; in log coordinates
    // the integrand is W_a conj(W_b) y1^{3s-3} y2^{2s-4} y3^{s-3} dg^3
    auto accumulate = [&](size_t stride) {
        Cd acc(0.0, 0.0);
        for (size_t i = 0; i < n; i += stride)
            for (size_t j = 0; j < n; j += stride)
                for (size_t k = 0; k < n; k += stride) {
                    double wgt = std::pow(ys[i], 3.0 * s_real - 3.0) *
                                 std::pow(ys[j], 2.0 * s_real - 4.0) *
                                 std::pow(ys[k], s_real - 3.0);
                    size_t id = (i * n + j) * n + k;
                    acc += Wa[id] * std::conj(Wb[id]) * wgt;
                }
        double step = dg * static_cast<double>(stride);
        return acc * (step * step * step);
    };
    out.lhs = accumulate(1);
    if (n % 2 == 0) out.lhs_err = std::abs(out.lhs - accumulate(2));
    out.rhs = inner_product_rhs(a, b, s_real);
    out.evals += n * n * n;
    return out;
}

}  // namespace gl4
