#pragma once

#include <array>
#include <string>
#include <vector>

#include "topoinv/models.hpp"
#include "topoinv/spectral_grid.hpp"

namespace topoinv {

// Ordered mode pairs of the fixed 4-mode basis; the two pairs are disjoint
// and cover all four modes.
struct SubsystemPartition {
    std::array<int, 2> a{0, 1};
    std::array<int, 2> b{2, 3};
    std::string label_a = "a";
    std::string label_b = "b";

    // Insulator spin partition in the (a_up, a_down, b_up, b_down) basis.
    static SubsystemPartition spin() { return {{0, 2}, {1, 3}, "spin-up", "spin-down"}; }
    // Species partition: works for both basis annotations.
    static SubsystemPartition sublattice() { return {{0, 1}, {2, 3}, "a", "b"}; }

    void validate() const;
};

enum class GroundStatePath { Insulator, Superconductor };

// Ground-state correlations at one momentum. normal(i,j) = <c^dag_i c_j> in
// the fixed basis; on the SC path the modes are (a_p, a_{-p}, b_p, b_{-p})
// and anomalous(i,j) = <c_i c_j> (antisymmetric) is populated as well.
struct CorrelationMatrix {
    Matrix4c normal = Matrix4c::Zero();
    Matrix4c anomalous = Matrix4c::Zero();
    bool sc = false;
};

// Half filling: occupy the two lowest bands. Requires E2 < E3 strictly.
CorrelationMatrix ground_correlations_insulator(const SpectralData4& spec);

// BdG ground state: occupy the two negative-energy solutions at p. The
// spectra at p and -p must be particle-hole consistent; data at -p is used
// to cross-check the pairing structure.
CorrelationMatrix ground_correlations_sc(const SpectralData4& at_p, const SpectralData4& at_minus_p);

// Full 8x8 generalized (Nambu) correlation matrix [[C, F^dag], [F, 1 - C^T]];
// its eigenvalues are in {0,1} for a pure Gaussian state.
Eigen::MatrixXcd nambu_correlation_matrix(const CorrelationMatrix& corr);

// Subsystem vector from the number-conserving observables, modes = (m1, m2):
//   sx = 2 Re C(m1,m2), sy = 2 Im C(m1,m2), sz = C(m1,m1) - C(m2,m2).
Vector3 insulator_svector(const CorrelationMatrix& corr, const std::array<int, 2>& modes);

// Subsystem vector from the pairing observables of one species whose
// (c_p, c_{-p}) modes sit at the given basis indexes:
//   sx = 2 Re <c^dag_p c^dag_-p>, sy = -2 Im <c^dag_p c^dag_-p>,
//   sz = <n_p> + <n_-p> - 1.
// Component sign conventions are fixed so that the subsystem windings add up
// to the total Chern number; see docs/lattice.md.
Vector3 sc_svector(const CorrelationMatrix& corr, const std::array<int, 2>& modes);

// N_i = sum of the two mode occupations of the subsystem.
double subsystem_occupation(const CorrelationMatrix& corr, const std::array<int, 2>& modes);

// Unnormalized subsystem vectors s_i(p) and their norms over the grid.
// The unit field is defined only where the norm clears kEntanglementFloor.
struct SVectorField {
    BZGrid grid;
    std::string subsystem;
    std::vector<Vector3> raw;
    std::vector<double> norm;
    std::vector<double> occupation; // N_i per point (insulator path)

    const Vector3& raw_at(int j, int k) const { return raw[grid.index(j, k)]; }
    double norm_at(int j, int k) const { return norm[grid.index(j, k)]; }

    // Normalized vector; throws MaxEntanglementError below the floor.
    Vector3 unit_at(int j, int k) const;
};

struct SVectorFieldPair {
    SVectorField a;
    SVectorField b;
};

// Assemble both subsystem fields in one pass over precomputed spectra.
SVectorFieldPair svector_fields(const SpectralGrid& spectra, const SubsystemPartition& partition,
                                GroundStatePath path);

// Convenience: diagonalize the model over the grid first.
SVectorFieldPair svector_fields(const Model& model, const BZGrid& grid,
                                const SubsystemPartition& partition);

// min over the grid of |s_i(p)|, in [0, 1].
double entanglement_measure(const SVectorField& field);

} // namespace topoinv
