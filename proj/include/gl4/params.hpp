#pragma once

// Spectral/Langlands parameter algebra for GL(n), n = 2, 3, 4: the linear
// maps between the two coordinate systems, the I_s exponent table, Laplace
// eigenvalues, the S4 orbit, and the eight relevant Weyl elements.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gl4 {

using Cd = std::complex<double>;

// Offsets v = (v_1, ..., v_{n-1}) from the self-dual point 1/n.
struct SpectralParam {
    int rank = 4;
    Eigen::VectorXcd v;

    SpectralParam() = default;
    SpectralParam(int n, Eigen::VectorXcd vv) : rank(n), v(std::move(vv)) {
        if (rank < 2 || rank > 4) throw std::invalid_argument("SpectralParam: rank must be 2, 3 or 4");
        if (v.size() != rank - 1) throw std::invalid_argument("SpectralParam: v needs rank-1 entries");
    }
};

// alpha in C^n with sum(alpha) = 0.  The last coordinate is always derived
// from the first n-1, so the trace condition holds structurally.
class LanglandsParam {
  public:
    LanglandsParam() : rank_(4), head_(Eigen::VectorXcd::Zero(3)) {}
    LanglandsParam(int rank, Eigen::VectorXcd head) : rank_(rank), head_(std::move(head)) {
        if (rank_ < 2 || rank_ > 4) throw std::invalid_argument("LanglandsParam: rank must be 2, 3 or 4");
        if (head_.size() != rank_ - 1) throw std::invalid_argument("LanglandsParam: head needs rank-1 entries");
    }

    // Accepts a full n-vector; rejects it unless sum(alpha) vanishes to 1e-12.
    static LanglandsParam from_full(const Eigen::VectorXcd& alpha) {
        int n = static_cast<int>(alpha.size());
        if (n < 2 || n > 4) throw std::invalid_argument("LanglandsParam: rank must be 2, 3 or 4");
        if (std::abs(alpha.sum()) > 1e-12)
            throw std::invalid_argument("LanglandsParam: sum(alpha) != 0");
        return LanglandsParam(n, alpha.head(n - 1));
    }

    int rank() const { return rank_; }

    Cd operator[](int i) const {
        if (i < rank_ - 1) return head_(i);
        return -head_.sum();
    }

    Eigen::VectorXcd full() const {
        Eigen::VectorXcd a(rank_);
        a.head(rank_ - 1) = head_;
        a(rank_ - 1) = -head_.sum();
        return a;
    }

    bool is_imaginary(double tol = 1e-14) const {
        return full().real().cwiseAbs().maxCoeff() <= tol;
    }

  private:
    int rank_;
    Eigen::VectorXcd head_;
};

// The exponent table b_{i,j} of the I_s character.
int is_exponent_coeff(int n, int i, int j);

// I_s(g) = prod_i y_i^{e_i(s)}; returns (e_1, e_2, e_3) for n = 4.
std::array<Cd, 3> is_exponents(const std::array<Cd, 3>& s);

LanglandsParam spectral_to_langlands(const SpectralParam& v);
SpectralParam langlands_to_spectral(const LanglandsParam& alpha);

// lambda_Delta(alpha) = (n^3 - n)/24 - sum(alpha_j^2)/2
Cd laplace_eigenvalue(const LanglandsParam& alpha);

// All 24 coordinate permutations of a rank-4 parameter.
std::vector<LanglandsParam> weyl_orbit(const LanglandsParam& alpha);

// One of the eight relevant Weyl elements: a signed permutation matrix of
// determinant one, together with its action w e_j = sign_j e_{perm_j}.
struct WeylElement {
    std::string label;            // "w1".."w8"
    std::array<int, 4> perm;      // w(j), 0-based
    std::array<int, 4> sign;      // sign_j in {+1,-1}
    Eigen::Matrix4i matrix() const {
        Eigen::Matrix4i m = Eigen::Matrix4i::Zero();
        for (int j = 0; j < 4; ++j) m(perm[static_cast<size_t>(j)], j) = sign[static_cast<size_t>(j)];
        return m;
    }
};

const std::array<WeylElement, 8>& relevant_weyl_elements();
const WeylElement& weyl_element(const std::string& label);

}  // namespace gl4
