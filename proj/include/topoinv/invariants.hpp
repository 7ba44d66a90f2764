#pragma once

#include <numeric>
#include <string>
#include <utility>

#include "topoinv/berry.hpp"
#include "topoinv/observables.hpp"

namespace topoinv {

// Discretized winding integral: raw value, nearest integer and the
// quantization residual. Results with residual >= kResidualTol are unreliable.
struct WindingResult {
    double raw = 0.0;
    int value = 0;
    double residual = 0.0;
    BZGrid grid{4, 4};

    bool reliable() const { return residual < kResidualTol; }
};

// Degree of the map s-hat: T^2 -> S^2. Each plaquette is split along the
// lower-left/upper-right diagonal into two triangles and the signed solid
// angles are accumulated with a fixed-topology pairwise sum, so the raw value
// is integer-quantized once the grid resolves the field.
WindingResult winding_number(const SVectorField& field);

// Chern number from the link-variable plaquette fluxes of the lowest
// `occupied` bands; exactly integer by construction and the in-repo oracle
// for every other invariant. Throws DegeneracyError at a (near-)degenerate
// plaquette or gap closure.
int chern_flux(const SpectralGrid& spectra, int occupied);
int chern_flux(const Model& model, const BZGrid& grid, int occupied = 2);

// Sum of the raw plaquette fluxes (units of 2*pi Chern), before rounding.
double chern_flux_raw(const SpectralGrid& spectra, int occupied);

// Direct discretization of the projector-trace integral with central finite
// differences; converges to the integer as the grid refines but is not
// exactly quantized at finite grid size.
double chern_projector(const SpectralGrid& spectra, int occupied);
double chern_projector(const Model& model, const BZGrid& grid, int occupied = 2);

// Berry phase around the cut-open BZ boundary, 2*pi-branch-resolved against
// the interior plaquette-flux sum; equals chern_flux exactly after
// resolution. The unresolved principal-branch loop phase is written to
// *principal_phase when given.
double chern_berry_boundary(const SpectralGrid& spectra, int occupied,
                            double* principal_phase = nullptr);
double chern_berry_boundary(const Model& model, const BZGrid& grid, int occupied = 2);

// All three representations at one model point, at half filling.
struct ChernReport {
    double projector_form = 0.0;
    double berry_boundary_form = 0.0;
    int flux_form = 0;
    bool agreement = false;
};
ChernReport chern_report(const SpectralGrid& spectra);
ChernReport chern_report(const Model& model, const BZGrid& grid);

// Subsystem winding numbers (nu_a, nu_b) of the observable-built fields.
// Throws MaxEntanglementError where |s_i(p)| is below the floor.
std::pair<WindingResult, WindingResult> subsystem_winding(const SVectorFieldPair& fields);
std::pair<WindingResult, WindingResult> subsystem_winding(const Model& model, const BZGrid& grid,
                                                          const SubsystemPartition& partition);

// Exact rational, reduced; den is 1 or 2.
struct Rational {
    long num = 0;
    long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    bool operator==(const Rational&) const = default;
};

// nu_S = (nu_up - nu_down)/2; requires both inputs reliable.
Rational spin_chern(const WindingResult& nu_up, const WindingResult& nu_down);

} // namespace topoinv
