#include "topoinv/models.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace topoinv {

namespace {

constexpr Complex kI{0.0, 1.0};

void validate(const KaneMeleParams& p) {
    if (p.t == 0.0) throw ValidationError("KaneMeleParams: t must be nonzero (energy unit)");
    if (!std::isfinite(p.t) || !std::isfinite(p.lambda_v) || !std::isfinite(p.lambda_so) ||
        !std::isfinite(p.lambda_r))
        throw ValidationError("KaneMeleParams: parameters must be finite");
}

void validate(const StaggeredSCParams& p) {
    if (!std::isfinite(p.mu) || !std::isfinite(p.delta_stagger) || !std::isfinite(p.t) ||
        !std::isfinite(p.delta_pair))
        throw ValidationError("StaggeredSCParams: parameters must be finite");
}

// Nearest-neighbour structure factor, bonds to cells 0, +a1, +a2.
Complex nn_structure_factor(double t, MomentumPoint p) {
    return t * (1.0 + std::exp(kI * p.px) + std::exp(kI * p.py));
}

// Next-nearest-neighbour spin-orbit factor on sublattice a, spin up:
// 2*lambda_so * sum over the three oriented NNN offsets of nu * sin(p.n),
// with nu(+a1) = +1, nu(+a2) = -1, nu(a1 - a2) = -1 (see docs/lattice.md).
double so_structure_factor(double lambda_so, MomentumPoint p) {
    return 2.0 * lambda_so *
           (std::sin(p.px) - std::sin(p.py) - std::sin(p.px - p.py));
}

} // namespace

HermitianKernel4 kane_mele_kernel(const KaneMeleParams& params, MomentumPoint p) {
    validate(params);
    const Complex f = nn_structure_factor(params.t, p);
    const double g = so_structure_factor(params.lambda_so, p);
    const double lv = params.lambda_v;

    // Rashba block coefficients from the three bond unit vectors
    // d1 = (sqrt(3)/2, 1/2), d2 = (-sqrt(3)/2, 1/2), d3 = (0, -1),
    // phases matching the bond's cell offset (a1, a2, 0).
    const double s3h = std::sqrt(3.0) / 2.0;
    const Complex e1 = std::exp(kI * p.px);
    const Complex e2 = std::exp(kI * p.py);
    const Complex cx = kI * params.lambda_r * (0.5 * e1 + 0.5 * e2 - 1.0);
    const Complex cy = -kI * params.lambda_r * (s3h * e1 - s3h * e2);

    HermitianKernel4 h = HermitianKernel4::Zero();
    // basis (a_up, a_down, b_up, b_down)
    h(0, 0) = lv + g;
    h(1, 1) = lv - g;
    h(2, 2) = -lv - g;
    h(3, 3) = -lv + g;
    h(0, 2) = f; // spin-diagonal hopping
    h(1, 3) = f;
    h(0, 3) = cx - kI * cy; // Rashba, spin-flip a->b
    h(1, 2) = cx + kI * cy;
    h(2, 0) = std::conj(h(0, 2));
    h(3, 1) = std::conj(h(1, 3));
    h(3, 0) = std::conj(h(0, 3));
    h(2, 1) = std::conj(h(1, 2));
    return h;
}

HermitianKernel4 kane_mele_spin_block_kernel(const KaneMeleParams& params, MomentumPoint p,
                                             int spin) {
    validate(params);
    if (spin != 1 && spin != -1)
        throw ValidationError("kane_mele_spin_block_kernel: spin must be +1 or -1");
    const Complex f = nn_structure_factor(params.t, p);
    const double g = spin * so_structure_factor(params.lambda_so, p);
    const double lv = params.lambda_v;

    // Pad level far outside the block bandwidth so the occupied pair is
    // always {pad-lower, block-lower}.
    const double pad = 10.0 + 3.0 * std::abs(params.t) + std::abs(lv) +
                       6.0 * std::abs(params.lambda_so);

    HermitianKernel4 h = HermitianKernel4::Zero();
    h(0, 0) = lv + g;
    h(1, 1) = -lv - g;
    h(0, 1) = f;
    h(1, 0) = std::conj(f);
    h(2, 2) = -pad;
    h(3, 3) = pad;
    return h;
}

HermitianKernel4 staggered_sc_kernel(const StaggeredSCParams& params, MomentumPoint p) {
    validate(params);
    const double mu = params.mu;
    const double ds = params.delta_stagger;
    const double t = params.t;
    const double dp = params.delta_pair;

    const double eps_a = (mu - ds) + 2.0 * t * std::cos(p.py);
    const double eps_b = (mu + ds) + 2.0 * t * std::cos(p.py);
    const Complex xi = kI * t * (1.0 + std::exp(-kI * p.px));      // a^dag_p b_p
    const Complex pair_same = 2.0 * kI * dp * std::sin(p.py);      // a^dag_p a^dag_-p
    const Complex pair_ab = dp * (1.0 - std::exp(-kI * p.px));     // a^dag_p b^dag_-p
    const Complex pair_ba = -dp * (1.0 - std::exp(kI * p.px));     // b^dag_p a^dag_-p

    HermitianKernel4 h = HermitianKernel4::Zero();
    // basis (a_p, a^dag_-p, b_p, b^dag_-p)
    h(0, 0) = eps_a;
    h(1, 1) = -eps_a;
    h(2, 2) = eps_b;
    h(3, 3) = -eps_b;
    h(0, 1) = pair_same;
    h(0, 2) = xi;
    h(0, 3) = pair_ab;
    h(1, 2) = std::conj(pair_ba);
    h(1, 3) = xi;
    h(2, 3) = pair_same;
    h(1, 0) = std::conj(h(0, 1));
    h(2, 0) = std::conj(h(0, 2));
    h(3, 0) = std::conj(h(0, 3));
    h(2, 1) = std::conj(h(1, 2));
    h(3, 1) = std::conj(h(1, 3));
    h(3, 2) = std::conj(h(2, 3));
    return h;
}

double spectral_gap(const Model& model, const BZGrid& grid) {
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid.ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            solver.compute(model.kernel(grid.point(j, k)), Eigen::EigenvaluesOnly);
            const auto& e = solver.eigenvalues();
            best = std::min(best, e[2] - e[1]);
        }
    }
    return best < 0.0 ? 0.0 : best;
}

} // namespace topoinv
