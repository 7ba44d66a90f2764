#pragma once

#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "topoinv/bz_grid.hpp"
#include "topoinv/eigensolve.hpp"

namespace topoinv {

// Kernel spectra over a full BZ grid: the shared input for flux, observable
// and entanglement computations, so each momentum is diagonalized once.
class SpectralGrid {
public:
    template <typename KernelFn>
    SpectralGrid(const BZGrid& grid, KernelFn&& kernel) : grid_(grid) {
        data_.reserve(grid.size());
        for (int k = 0; k < grid.ny; ++k)
            for (int j = 0; j < grid.nx; ++j)
                data_.push_back(eigensolve_hermitian4(kernel(grid.point(j, k))));
    }

    const BZGrid& grid() const { return grid_; }

    const SpectralData4& at(int j, int k) const { return data_[grid_.index(j, k)]; }
    const SpectralData4& at_inverted(int j, int k) const {
        return data_[grid_.index(grid_.invert_x(j), grid_.invert_y(k))];
    }

    Frame occupied_frame(int j, int k, int m) const { return at(j, k).occupied(m); }

    // Minimum over the grid of E3 - E2 (the half-filling gap) and where it is.
    std::pair<double, std::pair<int, int>> min_gap() const {
        double best = std::numeric_limits<double>::infinity();
        std::pair<int, int> loc{0, 0};
        for (int k = 0; k < grid_.ny; ++k) {
            for (int j = 0; j < grid_.nx; ++j) {
                const Vector4& e = data_[grid_.index(j, k)].eigenvalues;
                const double gap = e[2] - e[1];
                if (gap < best) {
                    best = gap;
                    loc = {j, k};
                }
            }
        }
        return {best, loc};
    }

    // Aborts with a gap-closure report when two levels straddling the
    // occupied/empty split come within kDegeneracyTol.
    void require_gap_open() const {
        const auto [gap, loc] = min_gap();
        if (gap < kDegeneracyTol) {
            std::ostringstream msg;
            msg << "gap closure: E3 - E2 = " << gap << " at grid point (" << loc.first << ", "
                << loc.second << ")";
            throw DegeneracyError(msg.str(), loc.first, loc.second);
        }
    }

private:
    BZGrid grid_;
    std::vector<SpectralData4> data_;
};

} // namespace topoinv
