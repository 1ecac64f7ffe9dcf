#include "gl4/params.hpp"

namespace gl4 {

int is_exponent_coeff(int n, int i, int j) {
    // b_{i,j} = i*j when i + j <= n, (n-i)(n-j) otherwise (1-based indices)
    if (i + j <= n) return i * j;
    return (n - i) * (n - j);
}

std::array<Cd, 3> is_exponents(const std::array<Cd, 3>& s) {
    std::array<Cd, 3> e{};
    for (int i = 1; i <= 3; ++i) {
        Cd acc = 0.0;
        for (int j = 1; j <= 3; ++j) acc += static_cast<double>(is_exponent_coeff(4, i, j)) * s[static_cast<size_t>(j - 1)];
        e[static_cast<size_t>(i - 1)] = acc;
    }
    return e;
}

LanglandsParam spectral_to_langlands(const SpectralParam& sp) {
    const int n = sp.rank;
    // B_j(v) = sum_i b_{i,j} v_i; alpha_1 = B_{n-1}, alpha_i = B_{n-i} - B_{n-i+1},
    // alpha_n = -B_1.
    auto B = [&](int j) {
        Cd acc = 0.0;
        for (int i = 1; i <= n - 1; ++i)
            acc += static_cast<double>(is_exponent_coeff(n, i, j)) * sp.v(i - 1);
        return acc;
    };
    Eigen::VectorXcd head(n - 1);
    head(0) = B(n - 1);
    for (int i = 2; i <= n - 1; ++i) head(i - 1) = B(n - i) - B(n - i + 1);
    return LanglandsParam(n, head);
}

SpectralParam langlands_to_spectral(const LanglandsParam& alpha) {
    const int n = alpha.rank();
    // v_i = (alpha_i - alpha_{i+1}) / n
    Eigen::VectorXcd v(n - 1);
    for (int i = 0; i < n - 1; ++i) v(i) = (alpha[i] - alpha[i + 1]) / static_cast<double>(n);
    return SpectralParam(n, v);
}

Cd laplace_eigenvalue(const LanglandsParam& alpha) {
    const int n = alpha.rank();
    Cd sumsq = 0.0;
    for (int i = 0; i < n; ++i) sumsq += alpha[i] * alpha[i];
    double c = static_cast<double>(n) * n * n - n;
    return c / 24.0 - sumsq / 2.0;
}

std::vector<LanglandsParam> weyl_orbit(const LanglandsParam& alpha) {
    if (alpha.rank() != 4) throw std::invalid_argument("weyl_orbit: rank 4 only");
    std::array<int, 4> idx{0, 1, 2, 3};
    Eigen::VectorXcd a = alpha.full();
    std::vector<LanglandsParam> orbit;
    orbit.reserve(24);
    do {
        Eigen::VectorXcd head(3);
        for (int i = 0; i < 3; ++i) head(i) = a(idx[static_cast<size_t>(i)]);
        orbit.emplace_back(4, head);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return orbit;
}

const std::array<WeylElement, 8>& relevant_weyl_elements() {
    // Signed so that every determinant is +1; the sign placement matches the
    // compatibility table the Kloosterman tests check against.
    static const std::array<WeylElement, 8> table = {{
        {"w1", {0, 1, 2, 3}, {+1, +1, +1, +1}},
        {"w2", {1, 2, 3, 0}, {+1, +1, +1, -1}},
        {"w3", {3, 0, 1, 2}, {-1, +1, +1, +1}},
        {"w4", {2, 3, 0, 1}, {+1, +1, +1, +1}},
        {"w5", {3, 1, 2, 0}, {+1, +1, +1, -1}},
        {"w6", {3, 2, 0, 1}, {-1, +1, +1, +1}},
        {"w7", {2, 3, 1, 0}, {+1, +1, +1, -1}},
        {"w8", {3, 2, 1, 0}, {+1, +1, +1, +1}},
    }};
    return table;
}

const WeylElement& weyl_element(const std::string& label) {
    for (const auto& w : relevant_weyl_elements())
        if (w.label == label) return w;
    throw std::invalid_argument("unknown Weyl element label: " + label);
}

}  // namespace gl4
