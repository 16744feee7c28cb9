#pragma once

#include <array>
#include <complex>

namespace wavespin {

using cplx = std::complex<double>;
using Vec2c = std::array<cplx, 2>;
using Vec4c = std::array<cplx, 4>;
using Mat2c = std::array<std::array<cplx, 2>, 2>;
using Mat4c = std::array<std::array<cplx, 4>, 4>;

inline Vec4c mat_apply(const Mat4c& m, const Vec4c& v) {
    Vec4c r{};
    for (int i = 0; i < 4; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < 4; ++j) s += m[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

inline cplx dot_dagger(const Vec4c& a, const Vec4c& b) {
    cplx s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// ψ† M ψ for hermitian M (αs, γ⁰, Σz); result is real up to rounding.
inline cplx bilinear(const Vec4c& psi, const Mat4c& m) {
    return dot_dagger(psi, mat_apply(m, psi));
}

inline double norm2(const Vec4c& v) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return s;
}

// Dirac representation: α_i = offdiag(σ_i, σ_i), γ⁰ = diag(1,1,−1,−1),
// Σ_z = diag(σ_z, σ_z).
struct DiracMatrices {
    Mat2c pauli_x;
    Mat2c pauli_y;
    Mat4c alpha_x;
    Mat4c alpha_y;
    Mat4c alpha_z;
    Mat4c gamma0;
    Mat4c sigma_big_z;

    DiracMatrices() {
        const cplx I(0.0, 1.0);
        pauli_x = {{{cplx(0), cplx(1)}, {cplx(1), cplx(0)}}};
        pauli_y = {{{cplx(0), -I}, {I, cplx(0)}}};
        const Mat2c pauli_z = {{{cplx(1), cplx(0)}, {cplx(0), cplx(-1)}}};

        auto off_diag = [](const Mat2c& s) {
            Mat4c m{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    m[i][j + 2] = s[i][j];
                    m[i + 2][j] = s[i][j];
                }
            return m;
        };
        auto block_diag = [](const Mat2c& s) {
            Mat4c m{};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    m[i][j] = s[i][j];
                    m[i + 2][j + 2] = s[i][j];
                }
            return m;
        };

        alpha_x = off_diag(pauli_x);
        alpha_y = off_diag(pauli_y);
        alpha_z = off_diag(pauli_z);
        gamma0 = Mat4c{};
        gamma0[0][0] = 1.0;
        gamma0[1][1] = 1.0;
        gamma0[2][2] = -1.0;
        gamma0[3][3] = -1.0;
        sigma_big_z = block_diag(pauli_z);
    }
};

inline const DiracMatrices& dirac_matrices() {
    static const DiracMatrices m{};
    return m;
}

inline Mat4c matmul(const Mat4c& a, const Mat4c& b) {
    Mat4c r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

} // namespace wavespin
