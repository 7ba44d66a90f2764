#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "topoinv/errors.hpp"
#include "topoinv/types.hpp"

namespace topoinv {

// Signed solid angle of the spherical triangle (v1, v2, v3) in (-2*pi, 2*pi),
// arctangent (Oosterom-Strackee) form. Positive for positively oriented
// triples; antisymmetric under odd vertex permutations, invariant under
// cyclic ones. Inputs must be unit vectors with no antipodal pair.
template <typename D1, typename D2, typename D3>
double solid_angle(const Eigen::MatrixBase<D1>& v1, const Eigen::MatrixBase<D2>& v2,
                   const Eigen::MatrixBase<D3>& v3) {
    const double d12 = v1.dot(v2);
    const double d23 = v2.dot(v3);
    const double d31 = v3.dot(v1);
    constexpr double antipodal = -1.0 + 1e-9;
    if (d12 < antipodal || d23 < antipodal || d31 < antipodal)
        throw DegeneracyError("solid_angle: antipodal vertex pair, triangle degenerate");
    const double triple = v1.dot(v2.cross(v3));
    return 2.0 * std::atan2(triple, 1.0 + d12 + d23 + d31);
}

// Overlap matrix between two occupied frames, U(a,b) = Fa^dagger Fb.
inline OverlapMatrix frame_overlap(const Frame& a, const Frame& b) {
    return a.adjoint() * b;
}

// Berry flux through one plaquette from the four corner frames (ordered
// counterclockwise): -Im log det(U12 U23 U34 U41), in (-pi, pi]. Gauge
// invariant: per-corner unitary redressings cancel in the determinant.
double plaquette_berry_flux(const Frame& f1, const Frame& f2, const Frame& f3, const Frame& f4);

// -Im log det of the product of consecutive overlap matrices around a closed
// loop of frames (the closing link last->first included), in (-pi, pi].
// The 2*pi branch is resolved by the caller against the interior flux sum.
double boundary_berry_phase(std::span<const Frame> loop);

// Fixed-topology pairwise reduction; the summation tree depends only on the
// element count, so results are bit-reproducible for any caller parallelism.
double pairwise_sum(std::span<const double> xs);

} // namespace topoinv
