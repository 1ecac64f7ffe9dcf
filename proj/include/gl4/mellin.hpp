#pragma once

// Mellin transform of the GL(4) Whittaker function, its pole/residue
// structure, and pointwise Whittaker values by inverse transform.
//
// The transform is pinned to the normalization
//     M(s) = 2^{-3} pi^{-s1-s2-s3} HAT(alpha/2, s/2)
// where HAT is the six-over-two Gamma-ratio Barnes integral in one extra
// variable.  Working in unhalved coordinates this reads
//     M(s) = 2^{-4} pi^{-s1-s2-s3} A(s) J(s),
//     A(s) = G(s1+a1) G(s1+a2) G(s2-a12) G(s2+a12) G(s3-a1) G(s3-a2),
//     J(s) = (1/2 pi i) Int_{Re u = c}  G(-u+a3) G(-u+a4) G(u+s1)
//              G(u+s2+a1) G(u+s2+a2) G(u+s3+a12)
//            / [ G(u+s1+s2+a12) G(u+s2+s3) ] du,
// with G(x) := Gamma(x/2) and a12 := a1+a2.  The contour separates the two
// pole families; when a parameter moves a left-family pole across the line
// the crossed residues are added back, which continues the transform to
// Re(s) <= 0 (needed to circle the poles numerically).

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gl4/gamma.hpp"
#include "gl4/params.hpp"
#include "gl4/quadrature.hpp"

namespace gl4 {

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class S>
struct MellinOpts {
    double panel_width = 1.0;
    int nodes_per_panel = std::is_same_v<S, double> ? 16 : 24;
    double env_tol = std::is_same_v<S, double> ? 1e-18 : 1e-27;
    double max_height = 200.0;
    double pole_guard = 1e-3;  // min distance of outer Gamma args to poles
    bool check_convergence = true;
};

template <class S>
struct MellinResult {
    cplx<S> value{};
    double abs_err = 0.0;
    bool converged = true;
    size_t evals = 0;
};

// ---- pole bookkeeping -----------------------------------------------------

// A pole of M on one coordinate axis: location = base - 2*shift where the
// base is -alpha_i (axis 1), -alpha_i - alpha_j (axis 2), +alpha_i (axis 3).
struct PoleSpec {
    int axis = 1;   // 1, 2 or 3
    int i = 0;      // base index
    int j = 1;      // second index, axis 2 only
    int shift = 0;  // delta >= 0
};

std::vector<PoleSpec> pole_lattice(const LanglandsParam& alpha, int axis, int delta_max);
Cd pole_location(const LanglandsParam& alpha, const PoleSpec& p);

struct ShiftDenominators {
    Cd B1, B2, B3;
};
ShiftDenominators shift_denominators(const LanglandsParam& alpha, const std::array<Cd, 3>& s);

// ---- the Barnes-integral engine -------------------------------------------

template <class S>
class HatEval {
  public:
    using C = cplx<S>;

    HatEval(std::array<C, 4> alpha, MellinOpts<S> opts)
        : a_(alpha), o_(opts), a12_(alpha[0] + alpha[1]) {}

    // M(s) in the pinned normalization; throws pole_error near degeneracies.
    MellinResult<S> value(const std::array<C, 3>& s) const {
        MellinResult<S> r;
        C A = outer_factor(s, r);
        auto [J, err, evals] = barnes_integral(s);
        r.evals += evals;
        static const S pi = fp<S>::pi();
        C pref = pow_real_base(pi, -(s[0] + s[1] + s[2])) * fp<S>::from(0.0625);
        r.value = pref * A * J;
        r.abs_err = err * to_double(abs(pref * A));
        if (o_.check_convergence) {
            double scale = std::max(1e-280, to_double(abs(r.value)));
            r.converged = r.abs_err < 1e-5 * scale;
        }
        return r;
    }

    const std::array<C, 4>& alpha() const { return a_; }

  private:
    std::array<C, 4> a_;
    MellinOpts<S> o_;
    C a12_;

    static C G(const C& x) { return exp(log_gamma(x * 0.5)); }
    static C lG(const C& x) { return log_gamma(x * 0.5); }

    C outer_factor(const std::array<C, 3>& s, MellinResult<S>& r) const {
        std::array<C, 6> args = {s[0] + a_[0], s[0] + a_[1], s[1] - a12_,
                                 s[1] + a12_, s[2] - a_[0], s[2] - a_[1]};
        C lg{};
        for (const auto& x : args) {
            if (to_double(gamma_pole_distance(cplx<S>(x * 0.5))) < o_.pole_guard)
                throw pole_error("mellin: outer Gamma argument too close to a pole");
            lg += lG(x);
            r.evals += 1;
        }
        return exp(lg);
    }

    // log of |numerator/denominator| on the contour, used for envelope probing
    S log_abs_integrand(const C& u, const std::array<C, 3>& s) const {
        C lg = lG(-u + a_[2]) + lG(-u + a_[3]) + lG(u + s[0]) + lG(u + s[1] + a_[0]) +
               lG(u + s[1] + a_[1]) + lG(u + s[2] + a12_) - lG(u + s[0] + s[1] + a12_) -
               lG(u + s[1] + s[2]);
        return lg.re;
    }

    C integrand(const C& u, const std::array<C, 3>& s) const {
        C lg = lG(-u + a_[2]) + lG(-u + a_[3]) + lG(u + s[0]) + lG(u + s[1] + a_[0]) +
               lG(u + s[1] + a_[1]) + lG(u + s[2] + a12_) - lG(u + s[0] + s[1] + a12_) -
               lG(u + s[1] + s[2]);
        return exp(lg);
    }

    // numerator with the factor G(u + X_{skip}) removed, over the denominator
    C integrand_without(const C& u, const std::array<C, 3>& s, int skip) const {
        std::array<C, 4> X = left_bases(s);
        C lg = lG(-u + a_[2]) + lG(-u + a_[3]) - lG(u + s[0] + s[1] + a12_) - lG(u + s[1] + s[2]);
        for (int i = 0; i < 4; ++i)
            if (i != skip) lg += lG(u + X[static_cast<size_t>(i)]);
        return exp(lg);
    }

    std::array<C, 4> left_bases(const std::array<C, 3>& s) const {
        return {s[0], s[1] + a_[0], s[1] + a_[1], s[2] + a12_};
    }

    struct JResult {
        C value{};
        double err = 0.0;
        size_t evals = 0;
    };

    struct Crossed {
        int family;
        int k;
        C pos;
    };

    // crossed left-family poles for a given line; nullopt when the
    // configuration would require a higher-order residue
    std::optional<std::vector<Crossed>> crossed_for(const std::array<C, 4>& X, double c) const {
        std::vector<Crossed> crossed;
        for (int f = 0; f < 4; ++f) {
            for (int k = 0;; ++k) {
                C p = -X[static_cast<size_t>(f)] - fp<S>::from(2.0 * k);
                if (to_double(p.re) <= c) break;
                crossed.push_back({f, k, p});
                if (k > 8) return std::nullopt;
            }
        }
        for (size_t i = 0; i < crossed.size(); ++i) {
            for (size_t j = i + 1; j < crossed.size(); ++j)
                if (to_double(abs(crossed[i].pos - crossed[j].pos)) < 1e-8) return std::nullopt;
            for (int rf = 2; rf <= 3; ++rf)
                for (int k = 0; k < 6; ++k)
                    if (to_double(abs(crossed[i].pos -
                                      (a_[static_cast<size_t>(rf)] + fp<S>::from(2.0 * k)))) < 1e-8)
                        return std::nullopt;
        }
        return crossed;
    }

    JResult barnes_integral(const std::array<C, 3>& s) const {
        std::array<C, 4> X = left_bases(s);
        double right_min = std::min(to_double(a_[2].re), to_double(a_[3].re));

        // Choose the line Re(u) = c left of the right families.  Candidates
        // are ranked by (number of crossed poles, then distance from every
        // pole's real part): the defining strip wins when it exists, and the
        // continuation crosses as few poles as possible otherwise.
        std::vector<double> pole_res;
        for (int f = 0; f < 4; ++f)
            for (int k = 0; k < 4; ++k)
                pole_res.push_back(-to_double(X[static_cast<size_t>(f)].re) - 2 * k);
        pole_res.push_back(to_double(a_[2].re));
        pole_res.push_back(to_double(a_[3].re));

        double c = 0.0, best_dist = -1.0;
        size_t best_crossed = SIZE_MAX;
        std::vector<Crossed> crossed;
        for (int m = 0; m <= 48; ++m) {
            double cand = right_min - 0.05 - 0.04 * m;  // scan depth 0.05 .. 1.97
            double d = 1e9;
            for (double p : pole_res) d = std::min(d, std::fabs(cand - p));
            if (d < 5e-3) continue;
            auto cr = crossed_for(X, cand);
            if (!cr) continue;
            if (cr->size() < best_crossed || (cr->size() == best_crossed && d > best_dist)) {
                best_crossed = cr->size();
                best_dist = d;
                c = cand;
                crossed = *cr;
            }
        }
        if (best_crossed == SIZE_MAX)
            throw pole_error("mellin: no admissible contour line (degenerate pole layout)");

        JResult out;

        // refinement hints: poles laterally within 1.2 of the line
        LineQuadSpec<S> spec;
        spec.anchor = fp<S>::from(c);
        spec.panel_width = o_.panel_width;
        spec.nodes_per_panel = o_.nodes_per_panel;
        auto add_hint = [&](const C& p) {
            if (std::fabs(to_double(p.re) - c) < 1.2) spec.refine_centers.push_back(to_double(p.im));
        };
        for (const auto& cp : crossed) add_hint(cp.pos);
        for (int f = 0; f < 4; ++f)
            for (int k = 0; k < 3; ++k) add_hint(-X[static_cast<size_t>(f)] - fp<S>::from(2.0 * k));
        for (int rf = 2; rf <= 3; ++rf)
            for (int k = 0; k < 3; ++k) add_hint(a_[static_cast<size_t>(rf)] + fp<S>::from(2.0 * k));

        // envelope probing for the truncation height
        double peak = -1e300;
        std::vector<double> centers{0.0};
        for (double h : spec.refine_centers) centers.push_back(h);
        for (double ctr : centers) {
            double v = to_double(log_abs_integrand(C(fp<S>::from(c), fp<S>::from(ctr + 0.31)), s));
            peak = std::max(peak, v);
            out.evals += 8;
        }
        double lo = *std::min_element(centers.begin(), centers.end());
        double hi = *std::max_element(centers.begin(), centers.end());
        double cut = peak + std::log(o_.env_tol);
        double H = std::max(std::fabs(lo), std::fabs(hi)) + 2.0;
        while (H < o_.max_height) {
            double up = to_double(log_abs_integrand(C(fp<S>::from(c), fp<S>::from(H)), s));
            double dn = to_double(log_abs_integrand(C(fp<S>::from(c), fp<S>::from(-H)), s));
            out.evals += 16;
            if (up < cut && dn < cut) break;
            H += 2.0;
        }
        spec.half_height = fp<S>::from(H);

        auto f = [&](const C& u) { return integrand(u, s); };
        auto q = integrate_line(f, spec);
        out.evals += q.evals * 8;

        // (1/2 pi i) Int f du over the upward vertical line = (1/2 pi) Int f dy
        static const S two_pi = fp<S>::two_pi();
        C J = q.value / two_pi;
        double err = q.abs_err / to_double(two_pi);

        // crossed residues: residue of G(u+X) at u = -X-2k is 2 (-1)^k / k!
        for (const auto& cp : crossed) {
            double coef = 2.0;
            for (int m = 1; m <= cp.k; ++m) coef /= m;
            if (cp.k % 2) coef = -coef;
            J += integrand_without(cp.pos, s, cp.family) * fp<S>::from(coef);
            out.evals += 7;
        }
        out.value = J;
        out.err = err;
        return out;
    }
};

template <class S>
MellinResult<S> mellin_transform(const std::array<cplx<S>, 4>& alpha,
                                 const std::array<cplx<S>, 3>& s,
                                 const MellinOpts<S>& opts = {}) {
    HatEval<S> eng(alpha, opts);
    return eng.value(s);
}

// closed-form residue at a delta = 0 pole, in the same normalization as
// mellin_transform (the pi-power prefactor evaluated at the pole survives)
template <class S>
cplx<S> mellin_residue(const std::array<cplx<S>, 4>& alpha, const PoleSpec& which,
                       const std::array<cplx<S>, 2>& s_rest);

template <class S>
struct ResidueCheckResult {
    cplx<S> contour{};
    cplx<S> closed_form{};
    double rel_err = 0.0;
    size_t evals = 0;
};

// (1/2 pi i) of M around a small circle at the delta = 0 pole `which`,
// against the closed form.
template <class S>
ResidueCheckResult<S> residue_contour_check(const std::array<cplx<S>, 4>& alpha,
                                            const PoleSpec& which,
                                            const std::array<cplx<S>, 2>& s_rest,
                                            double radius = 0.05, int n_nodes = 48,
                                            const MellinOpts<S>& opts = {});

// contour integral of M in s1 around a circle |s1 - center| = radius with
// s2, s3 fixed (used for the big-circle residue-sum consistency test)
template <class S>
cplx<S> mellin_contour_s1(const std::array<cplx<S>, 4>& alpha, const cplx<S>& center,
                          double radius, const std::array<cplx<S>, 2>& s23,
                          int n_nodes = 64, const MellinOpts<S>& opts = {});

// ---- cached tensor grid for the inverse transform (double precision) ------

struct WhittakerGridOpts {
    std::array<double, 3> u = {1.0, 1.0, 1.0};  // contour anchors, each in (0, 2)
    double h_s = 15.0;        // base half-height per s-axis
    double panel_s = 2.5;
    int nodes_s = 10;
    double h_t = 10.0;        // base half-height of the inner line
    int nodes_t = 16;
    int threads = 0;
    size_t budget = 4000000000ULL;  // cap on Gamma evaluations
};

class WhittakerGrid {
  public:
    static WhittakerGrid build(const LanglandsParam& alpha, const WhittakerGridOpts& opts);

    // W(y) by the truncated inverse transform on the cached tensor
    Cd whittaker(double y1, double y2, double y3) const;

    // batch evaluation on a tensor product of log-spaced points
    std::vector<Cd> whittaker_batch(const std::vector<double>& y1s,
                                    const std::vector<double>& y2s,
                                    const std::vector<double>& y3s) const;

    // Mellin transform of the cached data against an explicit y-grid
    // (the direct-definition cross-check of the transform)
    Cd direct_mellin(const std::array<Cd, 3>& s, double g_lo, double g_hi, int n_per_axis) const;

    const std::array<double, 3>& anchors() const { return u_; }
    size_t gamma_evals() const { return evals_; }
    double node_tail_bound() const { return tail_; }

    // node access for cross-checks against the single-point engine
    const std::vector<double>& axis_nodes(int ax) const { return xi_[static_cast<size_t>(ax)]; }
    Cd mellin_node(size_t i, size_t j, size_t k) const {
        return weighted_[idx(i, j, k)] / (w_[0][i] * w_[1][j] * w_[2][k]);
    }

  private:
    std::array<double, 3> u_{};
    std::array<std::vector<double>, 3> xi_;  // nodes per axis
    std::array<std::vector<double>, 3> w_;   // weights per axis
    std::vector<Cd> weighted_;               // A1 w1 * A2 w2 * A3 w3 * J tensor
    size_t evals_ = 0;
    double tail_ = 0.0;

    size_t idx(size_t i, size_t j, size_t k) const {
        return (i * xi_[1].size() + j) * xi_[2].size() + k;
    }
};

struct InnerProductResult {
    Cd lhs{};
    Cd rhs{};
    double lhs_err = 0.0;
    size_t evals = 0;
};

// Left side: y-quadrature of W_a conj(W_b) y1^{3s} y2^{2s} y3^{s} against the
// invariant measure, on a truncated log grid.  Right side: the closed
// sixteen-Gamma form.
InnerProductResult inner_product_check(const LanglandsParam& a, const LanglandsParam& b,
                                       double s_real, const WhittakerGridOpts& gopts,
                                       double g_lo, double g_hi, int y_nodes_per_axis,
                                       size_t budget);

Cd inner_product_rhs(const LanglandsParam& a, const LanglandsParam& b, double s_real);

}  // namespace gl4
