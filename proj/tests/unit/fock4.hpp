#pragma once

// Brute-force many-body oracle for four fermionic modes: builds the 16x16
// Fock-space Hamiltonian from one-body and pairing blocks, diagonalizes it,
// and reads correlations straight off the ground state. Test-only; keeps
// every sign convention honest against first principles.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <array>
#include <complex>

namespace fock4 {

using Complex = std::complex<double>;
using Mat16 = Eigen::Matrix<Complex, 16, 16>;
using Vec16 = Eigen::Matrix<Complex, 16, 1>;
using Mat4c = Eigen::Matrix4cd;
using Mat2c = Eigen::Matrix2cd;

// Creation operator for mode i in the occupation basis
// |n0 n1 n2 n3> = (c0^dag)^n0 (c1^dag)^n1 (c2^dag)^n2 (c3^dag)^n3 |0>,
// basis index = n0 + 2 n1 + 4 n2 + 8 n3.
inline Mat16 creation(int mode) {
    Mat16 m = Mat16::Zero();
    for (int s = 0; s < 16; ++s) {
        if (s & (1 << mode)) continue;
        int sign = 1;
        for (int j = 0; j < mode; ++j)
            if (s & (1 << j)) sign = -sign;
        m(s | (1 << mode), s) = static_cast<double>(sign);
    }
    return m;
}

inline const std::array<Mat16, 4>& cdag() {
    static const std::array<Mat16, 4> ops = {creation(0), creation(1), creation(2), creation(3)};
    return ops;
}

inline Mat16 annihilation(int mode) { return cdag()[mode].adjoint(); }

// Number-conserving Hamiltonian sum_ij h(i,j) c^dag_i c_j.
inline Mat16 one_body(const Mat4c& h) {
    Mat16 m = Mat16::Zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (h(i, j) != Complex(0, 0)) m += h(i, j) * cdag()[i] * annihilation(j);
    return m;
}

struct GroundState {
    double energy = 0.0;
    Vec16 state;
    Mat4c normal;    // <c^dag_i c_j>
    Mat4c anomalous; // <c_i c_j>
};

inline GroundState correlations_of(const Vec16& psi) {
    GroundState out;
    out.state = psi;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            out.normal(i, j) = psi.dot(cdag()[i] * annihilation(j) * psi);
            out.anomalous(i, j) = psi.dot(annihilation(i) * annihilation(j) * psi);
        }
    return out;
}

// Global ground state of an arbitrary quadratic + pairing Hamiltonian.
inline GroundState ground_state(const Mat16& h) {
    Eigen::SelfAdjointEigenSolver<Mat16> solver(h);
    GroundState out = correlations_of(solver.eigenvectors().col(0));
    out.energy = solver.eigenvalues()(0);
    return out;
}

// Ground state restricted to total particle number n.
inline GroundState ground_state_at_filling(const Mat16& h, int n) {
    Eigen::SelfAdjointEigenSolver<Mat16> solver(h);
    for (int idx = 0; idx < 16; ++idx) {
        const Vec16 v = solver.eigenvectors().col(idx);
        double number = 0.0;
        for (int s = 0; s < 16; ++s)
            number += std::norm(v(s)) * __builtin_popcount(static_cast<unsigned>(s));
        if (std::abs(number - n) < 1e-8) {
            GroundState out = correlations_of(v);
            out.energy = solver.eigenvalues()(idx);
            return out;
        }
    }
    throw std::runtime_error("no eigenstate at requested filling");
}

// Many-body Hamiltonian of the (p, -p) momentum sector of a BdG kernel given
// in the basis (a_p, a^dag_-p, b_p, b^dag_-p); modes are ordered
// (a_p, a_-p, b_p, b_-p). hk_p = kernel(p), hk_m = kernel(-p).
inline Mat16 bdg_sector_hamiltonian(const Mat4c& hk_p, const Mat4c& hk_m) {
    Mat2c h0p, h0m, d;
    h0p << hk_p(0, 0), hk_p(0, 2), hk_p(2, 0), hk_p(2, 2);
    h0m << hk_m(0, 0), hk_m(0, 2), hk_m(2, 0), hk_m(2, 2);
    d << hk_p(0, 1), hk_p(0, 3), hk_p(2, 1), hk_p(2, 3);

    const auto& cd = cdag();
    const std::array<int, 2> at_p = {0, 2};  // a_p, b_p
    const std::array<int, 2> at_m = {1, 3};  // a_-p, b_-p

    Mat16 h = Mat16::Zero();
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
            h += h0p(s, t) * cd[at_p[s]] * cd[at_p[t]].adjoint();
            h += h0m(s, t) * cd[at_m[s]] * cd[at_m[t]].adjoint();
            const Mat16 pair = d(s, t) * cd[at_p[s]] * cd[at_m[t]];
            h += pair + pair.adjoint();
        }
    return h;
}

} // namespace fock4
