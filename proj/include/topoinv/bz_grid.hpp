#pragma once

#include <cmath>
#include <cstddef>

#include "topoinv/errors.hpp"
#include "topoinv/types.hpp"

namespace topoinv {

// Point on the momentum torus; both components live in [-pi, pi).
struct MomentumPoint {
    double px = 0.0;
    double py = 0.0;

    // Wrap into [-pi, pi), period 2*pi.
    static double wrap(double x) {
        double r = std::remainder(x, kTwoPi); // [-pi, pi]
        if (r >= kPi) r -= kTwoPi;
        return r;
    }
    static MomentumPoint wrapped(double px, double py) {
        return MomentumPoint{wrap(px), wrap(py)};
    }
};

// Uniform periodic grid on the torus: p(j,k) = (-pi + 2*pi*j/nx, -pi + 2*pi*k/ny).
// Indexing is periodic; the linear index is k*nx + j (j fastest), so iteration
// order is row-major and deterministic.
struct BZGrid {
    int nx = 0;
    int ny = 0;

    BZGrid(int nx_, int ny_) : nx(nx_), ny(ny_) {
        if (nx < 4 || ny < 4) throw ValidationError("BZGrid: nx and ny must both be >= 4");
    }

    static int mod(int a, int n) {
        int r = a % n;
        return r < 0 ? r + n : r;
    }

    MomentumPoint point(int j, int k) const {
        return MomentumPoint{-kPi + kTwoPi * mod(j, nx) / nx,
                             -kPi + kTwoPi * mod(k, ny) / ny};
    }

    std::size_t index(int j, int k) const {
        return static_cast<std::size_t>(mod(k, ny)) * static_cast<std::size_t>(nx)
             + static_cast<std::size_t>(mod(j, nx));
    }

    // Grid indices of -p. Exact for this grid family: -(-pi + 2*pi*j/n) equals
    // -pi + 2*pi*(n-j)/n modulo 2*pi.
    int invert_x(int j) const { return mod(nx - mod(j, nx), nx); }
    int invert_y(int k) const { return mod(ny - mod(k, ny), ny); }

    std::size_t size() const {
        return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    }
};

} // namespace topoinv
