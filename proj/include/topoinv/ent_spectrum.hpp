#pragma once

#include <vector>

#include "topoinv/observables.hpp"

namespace topoinv {

// Single-particle entanglement levels at one momentum: correlation
// eigenvalues lambda_+/- in [0,1] and entanglement energies eps_-/+ related
// by lambda = 1/(exp(eps) + 1). Larger lambda means smaller eps; signed
// infinities appear when a lambda hits 0 or 1 and never enter gap arithmetic.
struct EntLevels {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double eps_plus = 0.0;
    double eps_minus = 0.0;
};

// Insulator path: lambda_pm = (N_a +- |s_a|)/2, eps from the Peschel map with
// N_b = 2 - N_a at half filling. Requires 0 <= s_norm <= min(N_a, 2-N_a)
// within 1e-9.
EntLevels insulator_ent_levels(double s_norm, double n_a);

// Correlation eigenvalues and entanglement energies over the grid for one
// subsystem, plus the two scalar gap summaries.
struct EntanglementField {
    BZGrid grid;
    bool sc = false;
    std::vector<double> lambda_plus;
    std::vector<double> lambda_minus;
    std::vector<double> eps_plus;
    std::vector<double> eps_minus;
};

// Built pointwise from |s_a(p)| and N_a(p) of an insulator-path field.
EntanglementField insulator_ent_field(const SVectorField& field);

// SC path: lambda_+ per point is the eigenvalue of the subsystem's 4x4
// generalized (Nambu) correlation matrix closest to 1/2 from above;
// lambda_- = 1 - lambda_+ by particle-hole symmetry (eps_+ = -eps_-).
EntanglementField sc_ent_field(const SpectralGrid& spectra, const std::array<int, 2>& modes);

// min_p lambda_+ - max_p lambda_-; may be negative (gap closed).
double ent_gap_insulator(const EntanglementField& field);

// min_p |1/2 - lambda_+|; zero iff some mode is maximally entangled.
double ent_gap_sc(const EntanglementField& field);

} // namespace topoinv
