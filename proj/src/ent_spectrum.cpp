#include "topoinv/ent_spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace topoinv {

namespace {

double eps_from_lambda(double lambda) {
    if (lambda >= 1.0) return -std::numeric_limits<double>::infinity();
    if (lambda <= 0.0) return std::numeric_limits<double>::infinity();
    return std::log((1.0 - lambda) / lambda);
}

} // namespace

EntLevels insulator_ent_levels(double s_norm, double n_a) {
    const double bound = std::min(n_a, 2.0 - n_a);
    if (s_norm < -1e-12 || s_norm > bound + 1e-9) {
        std::ostringstream msg;
        msg << "insulator_ent_levels: |s| = " << s_norm << " outside [0, " << bound
            << "] for N_a = " << n_a;
        throw ValidationError(msg.str());
    }
    EntLevels out;
    out.lambda_plus = std::clamp((n_a + s_norm) / 2.0, 0.0, 1.0);
    out.lambda_minus = std::clamp((n_a - s_norm) / 2.0, 0.0, 1.0);
    out.eps_plus = eps_from_lambda(out.lambda_plus);
    out.eps_minus = eps_from_lambda(out.lambda_minus);
    return out;
}

EntanglementField insulator_ent_field(const SVectorField& field) {
    EntanglementField out{field.grid, false, {}, {}, {}, {}};
    const std::size_t n = field.grid.size();
    out.lambda_plus.resize(n);
    out.lambda_minus.resize(n);
    out.eps_plus.resize(n);
    out.eps_minus.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const EntLevels lv = insulator_ent_levels(field.norm[i], field.occupation[i]);
        out.lambda_plus[i] = lv.lambda_plus;
        out.lambda_minus[i] = lv.lambda_minus;
        out.eps_plus[i] = lv.eps_plus;
        out.eps_minus[i] = lv.eps_minus;
    }
    return out;
}

EntanglementField sc_ent_field(const SpectralGrid& spectra, const std::array<int, 2>& modes) {
    const BZGrid& grid = spectra.grid();
    if (grid.nx % 2 != 0 || grid.ny % 2 != 0)
        throw ValidationError("sc_ent_field: SC path requires even grid sizes");
    EntanglementField out{grid, true, {}, {}, {}, {}};
    const std::size_t n = grid.size();
    out.lambda_plus.resize(n);
    out.lambda_minus.resize(n);
    out.eps_plus.resize(n);
    out.eps_minus.resize(n);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver;
    for (int k = 0; k < grid.ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            const CorrelationMatrix corr =
                ground_correlations_sc(spectra.at(j, k), spectra.at_inverted(j, k));
            Matrix2c csub, fsub;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    csub(r, c) = corr.normal(modes[r], modes[c]);
                    fsub(r, c) = corr.anomalous(modes[r], modes[c]);
                }
            Eigen::Matrix4cd g;
            g.topLeftCorner<2, 2>() = csub;
            g.topRightCorner<2, 2>() = fsub.adjoint();
            g.bottomLeftCorner<2, 2>() = fsub;
            g.bottomRightCorner<2, 2>() = Matrix2c::Identity() - csub.transpose();
            solver.compute(g, Eigen::EigenvaluesOnly);
            const Vector4& ev = solver.eigenvalues();

            // Eigenvalues come in particle-hole pairs (lambda, 1 - lambda);
            // take the representative closest to 1/2, folded above 1/2.
            double lp = ev[0];
            for (int i = 1; i < 4; ++i)
                if (std::abs(ev[i] - 0.5) < std::abs(lp - 0.5)) lp = ev[i];
            lp = std::max(lp, 1.0 - lp);
            const std::size_t idx = grid.index(j, k);
            out.lambda_plus[idx] = std::clamp(lp, 0.0, 1.0);
            out.lambda_minus[idx] = 1.0 - out.lambda_plus[idx];
            out.eps_plus[idx] = eps_from_lambda(out.lambda_plus[idx]);
            out.eps_minus[idx] = eps_from_lambda(out.lambda_minus[idx]);
        }
    }
    return out;
}

double ent_gap_insulator(const EntanglementField& field) {
    double min_plus = std::numeric_limits<double>::infinity();
    double max_minus = -std::numeric_limits<double>::infinity();
    for (double v : field.lambda_plus) min_plus = std::min(min_plus, v);
    for (double v : field.lambda_minus) max_minus = std::max(max_minus, v);
    return min_plus - max_minus;
}

double ent_gap_sc(const EntanglementField& field) {
    double best = std::numeric_limits<double>::infinity();
    for (double v : field.lambda_plus) best = std::min(best, std::abs(0.5 - v));
    return best;
}

} // namespace topoinv
