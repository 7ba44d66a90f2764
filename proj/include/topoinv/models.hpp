#pragma once

#include <string>

#include "topoinv/bz_grid.hpp"
#include "topoinv/eigensolve.hpp"

namespace topoinv {

// Honeycomb quantum spin Hall insulator. t is the nearest-neighbour hopping
// (energy unit), lambda_v the sublattice offset (+ on a, - on b), lambda_so
// the next-nearest-neighbour spin-orbit coupling, lambda_r the Rashba
// coupling. Geometry conventions are in docs/lattice.md.
struct KaneMeleParams {
    double t = 1.0;
    double lambda_v = 0.0;
    double lambda_so = 0.0;
    double lambda_r = 0.0;
};

// Square-lattice spinless superconductor with a staggered chemical potential:
// (mu - delta) on the a sites, (mu + delta) on the b sites, hopping t
// (imaginary with alternating sign along x, plain along y) and pairing
// delta_pair on the same bonds.
struct StaggeredSCParams {
    double mu = 0.0;
    double delta_stagger = 0.0;
    double t = 1.0;
    double delta_pair = 0.0;
};

enum class ModelTag { KaneMele, StaggeredSC };

// Bloch kernel of the Kane-Mele model in the basis (a_up, a_down, b_up,
// b_down); momenta are the reduced coordinates p = (p1, p2) along the
// reciprocal primitive vectors, so the kernel is exactly 2*pi-periodic.
HermitianKernel4 kane_mele_kernel(const KaneMeleParams& params, MomentumPoint p);

// One spin block of the Kane-Mele kernel at lambda_r = 0, embedded in the
// 4x4 frame on modes (0,1) with a far-detuned trivial pair on modes (2,3).
// spin = +1 for up, -1 for down.
HermitianKernel4 kane_mele_spin_block_kernel(const KaneMeleParams& params, MomentumPoint p,
                                             int spin);

// BdG kernel of the staggered superconductor in the basis
// (a_p, a^dag_{-p}, b_p, b^dag_{-p}). The spectrum at p is minus the
// spectrum at -p (particle-hole redundancy).
HermitianKernel4 staggered_sc_kernel(const StaggeredSCParams& params, MomentumPoint p);

// A case-study model: tag plus its parameter record. The basis annotation is
// fixed by the tag and every observable index map derives from it.
struct Model {
    ModelTag tag = ModelTag::KaneMele;
    KaneMeleParams km;
    StaggeredSCParams sc;

    static Model kane_mele(const KaneMeleParams& p) {
        Model m;
        m.tag = ModelTag::KaneMele;
        m.km = p;
        return m;
    }
    static Model staggered_sc(const StaggeredSCParams& p) {
        Model m;
        m.tag = ModelTag::StaggeredSC;
        m.sc = p;
        return m;
    }

    bool is_sc() const { return tag == ModelTag::StaggeredSC; }

    HermitianKernel4 kernel(MomentumPoint p) const {
        return is_sc() ? staggered_sc_kernel(sc, p) : kane_mele_kernel(km, p);
    }

    const char* basis() const {
        return is_sc() ? "(a_p, a^dag_-p, b_p, b^dag_-p)" : "(a_up, a_down, b_up, b_down)";
    }
};

// Minimum over the grid of E3(p) - E2(p) for the half-filled four-band
// kernel. Zero within kDegeneracyTol flags a (near-)critical point.
double spectral_gap(const Model& model, const BZGrid& grid);

} // namespace topoinv
