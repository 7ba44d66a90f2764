#include "topoinv/invariants.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace topoinv {

namespace {

void require_bands(int occupied) {
    if (occupied < 1 || occupied > 3)
        throw ValidationError("occupied band count must be 1, 2 or 3");
}

// Gap between band `occupied` and the one below it, over the whole grid.
void require_band_gap(const SpectralGrid& spectra, int occupied) {
    const BZGrid& grid = spectra.grid();
    for (int k = 0; k < grid.ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            const Vector4& e = spectra.at(j, k).eigenvalues;
            if (e[occupied] - e[occupied - 1] < kDegeneracyTol) {
                std::ostringstream msg;
                msg << "gap closure between bands " << occupied - 1 << " and " << occupied
                    << " at grid point (" << j << ", " << k << "): gap = "
                    << e[occupied] - e[occupied - 1];
                throw DegeneracyError(msg.str(), j, k);
            }
        }
    }
}

} // namespace

WindingResult winding_number(const SVectorField& field) {
    const BZGrid& grid = field.grid;
    if (grid.nx < 16 || grid.ny < 16)
        throw ValidationError("winding_number: grid must be at least 16x16");

    for (int k = 0; k < grid.ny; ++k)
        for (int j = 0; j < grid.nx; ++j)
            if (field.norm_at(j, k) <= kEntanglementFloor) {
                std::ostringstream msg;
                msg << "winding_number: subsystem '" << field.subsystem << "' has |s| = "
                    << field.norm_at(j, k) << " at grid point (" << j << ", " << k
                    << "); unit field undefined";
                throw MaxEntanglementError(msg.str(), j, k);
            }

    // Cache the unit field, then triangulate each plaquette along the
    // lower-left/upper-right diagonal.
    std::vector<Vector3> unit(grid.size());
    for (int k = 0; k < grid.ny; ++k)
        for (int j = 0; j < grid.nx; ++j)
            unit[grid.index(j, k)] = field.raw_at(j, k) / field.norm_at(j, k);

    std::vector<double> angles;
    angles.reserve(2 * grid.size());
    for (int k = 0; k < grid.ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            const Vector3& v00 = unit[grid.index(j, k)];
            const Vector3& v10 = unit[grid.index(j + 1, k)];
            const Vector3& v11 = unit[grid.index(j + 1, k + 1)];
            const Vector3& v01 = unit[grid.index(j, k + 1)];
            try {
                angles.push_back(solid_angle(v00, v10, v11));
                angles.push_back(solid_angle(v00, v11, v01));
            } catch (const DegeneracyError& err) {
                std::ostringstream msg;
                msg << err.what() << " (plaquette at grid point (" << j << ", " << k << "))";
                throw DegeneracyError(msg.str(), j, k);
            }
        }
    }

    WindingResult out;
    out.grid = grid;
    out.raw = pairwise_sum(angles) / (4.0 * kPi);
    out.value = static_cast<int>(std::lround(out.raw));
    out.residual = std::abs(out.raw - out.value);
    return out;
}

double chern_flux_raw(const SpectralGrid& spectra, int occupied) {
    require_bands(occupied);
    require_band_gap(spectra, occupied);
    const BZGrid& grid = spectra.grid();

    // Corner order (j,k) -> (j,k+1) -> (j+1,k+1) -> (j+1,k): the orientation
    // that makes the flux sum equal the projector-trace form with its
    // -(i/2pi) prefactor (and minus the winding of the kernel's s-hat field).
    std::vector<double> fluxes;
    fluxes.reserve(grid.size());
    for (int k = 0; k < grid.ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            try {
                fluxes.push_back(plaquette_berry_flux(
                    spectra.occupied_frame(j, k, occupied), spectra.occupied_frame(j, k + 1, occupied),
                    spectra.occupied_frame(j + 1, k + 1, occupied),
                    spectra.occupied_frame(j + 1, k, occupied)));
            } catch (const DegeneracyError& err) {
                std::ostringstream msg;
                msg << err.what() << " (plaquette at grid point (" << j << ", " << k << "))";
                throw DegeneracyError(msg.str(), j, k);
            }
        }
    }
    return pairwise_sum(fluxes) / kTwoPi;
}

int chern_flux(const SpectralGrid& spectra, int occupied) {
    const double raw = chern_flux_raw(spectra, occupied);
    const int value = static_cast<int>(std::lround(raw));
    if (std::abs(raw - value) > 1e-6) {
        std::ostringstream msg;
        msg << "chern_flux: flux sum " << raw << " is not integer-quantized";
        throw DegeneracyError(msg.str());
    }
    return value;
}

int chern_flux(const Model& model, const BZGrid& grid, int occupied) {
    SpectralGrid spectra(grid, [&](MomentumPoint p) { return model.kernel(p); });
    return chern_flux(spectra, occupied);
}

double chern_projector(const SpectralGrid& spectra, int occupied) {
    require_bands(occupied);
    require_band_gap(spectra, occupied);
    const BZGrid& grid = spectra.grid();
    const double dx = kTwoPi / grid.nx;
    const double dy = kTwoPi / grid.ny;

    // Occupied-band projectors on the grid.
    std::vector<Matrix4c> proj(grid.size());
    for (int k = 0; k < grid.ny; ++k)
        for (int j = 0; j < grid.nx; ++j) {
            const Frame f = spectra.occupied_frame(j, k, occupied);
            proj[grid.index(j, k)] = f * f.adjoint();
        }

    std::vector<double> integrand(grid.size());
    for (int k = 0; k < grid.ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            const Matrix4c& p = proj[grid.index(j, k)];
            const Matrix4c px =
                (proj[grid.index(j + 1, k)] - proj[grid.index(j - 1, k)]) / (2.0 * dx);
            const Matrix4c py =
                (proj[grid.index(j, k + 1)] - proj[grid.index(j, k - 1)]) / (2.0 * dy);
            const Complex tr = (p * (px * py - py * px)).trace();
            // -(i/2pi) tr(P [dxP, dyP]) is real; keep its value, drop fp noise.
            integrand[grid.index(j, k)] = tr.imag() / kTwoPi;
        }
    }
    return pairwise_sum(integrand) * dx * dy;
}

double chern_projector(const Model& model, const BZGrid& grid, int occupied) {
    SpectralGrid spectra(grid, [&](MomentumPoint p) { return model.kernel(p); });
    return chern_projector(spectra, occupied);
}

double chern_berry_boundary(const SpectralGrid& spectra, int occupied, double* principal_phase) {
    require_bands(occupied);
    const BZGrid& grid = spectra.grid();

    // Cut-open fundamental-domain boundary, traversed with the same
    // orientation as the plaquette fluxes so the discrete Stokes identity
    // holds sign-exactly. In the periodic gauge the frames at aliased indices
    // are identical, so the top and left edges reuse bottom-row and
    // left-column frames.
    std::vector<Frame> loop;
    loop.reserve(2 * (grid.nx + grid.ny));
    for (int k = 0; k < grid.ny; ++k) loop.push_back(spectra.occupied_frame(0, k, occupied));
    for (int j = 0; j < grid.nx; ++j) loop.push_back(spectra.occupied_frame(j, 0, occupied));
    for (int k = grid.ny; k > 0; --k) loop.push_back(spectra.occupied_frame(0, k, occupied));
    for (int j = grid.nx; j > 0; --j) loop.push_back(spectra.occupied_frame(j, 0, occupied));

    const double phase = boundary_berry_phase(loop);
    if (principal_phase) *principal_phase = phase;

    // Resolve the 2*pi branch against the interior flux sum (discrete Stokes).
    const double target = chern_flux_raw(spectra, occupied) * kTwoPi;
    const double branches = std::round((target - phase) / kTwoPi);
    const double resolved = (phase + kTwoPi * branches) / kTwoPi;
    if (std::abs(resolved * kTwoPi - target) > 1e-6)
        throw DegeneracyError("chern_berry_boundary: boundary phase and interior flux sum "
                              "violate the discrete Stokes identity");
    return resolved;
}

double chern_berry_boundary(const Model& model, const BZGrid& grid, int occupied) {
    SpectralGrid spectra(grid, [&](MomentumPoint p) { return model.kernel(p); });
    return chern_berry_boundary(spectra, occupied);
}

ChernReport chern_report(const SpectralGrid& spectra) {
    ChernReport out;
    out.projector_form = chern_projector(spectra, 2);
    out.berry_boundary_form = chern_berry_boundary(spectra, 2);
    out.flux_form = chern_flux(spectra, 2);

    const double proj_res = std::abs(out.projector_form - std::round(out.projector_form));
    const double berry_res =
        std::abs(out.berry_boundary_form - std::round(out.berry_boundary_form));
    out.agreement = proj_res < kResidualTol && berry_res < kResidualTol &&
                    std::lround(out.projector_form) == out.flux_form &&
                    std::lround(out.berry_boundary_form) == out.flux_form;
    return out;
}

ChernReport chern_report(const Model& model, const BZGrid& grid) {
    SpectralGrid spectra(grid, [&](MomentumPoint p) { return model.kernel(p); });
    return chern_report(spectra);
}

std::pair<WindingResult, WindingResult> subsystem_winding(const SVectorFieldPair& fields) {
    return {winding_number(fields.a), winding_number(fields.b)};
}

std::pair<WindingResult, WindingResult> subsystem_winding(const Model& model, const BZGrid& grid,
                                                          const SubsystemPartition& partition) {
    return subsystem_winding(svector_fields(model, grid, partition));
}

Rational spin_chern(const WindingResult& nu_up, const WindingResult& nu_down) {
    if (!nu_up.reliable() || !nu_down.reliable()) {
        std::ostringstream msg;
        msg << "spin_chern: unreliable winding input (residuals " << nu_up.residual << ", "
            << nu_down.residual << ")";
        throw ValidationError(msg.str());
    }
    const long diff = static_cast<long>(nu_up.value) - static_cast<long>(nu_down.value);
    if (diff % 2 == 0) return Rational{diff / 2, 1};
    return Rational{diff, 2};
}

} // namespace topoinv
