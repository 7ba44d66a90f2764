#pragma once

#include <Eigen/Dense>
#include <complex>

namespace topoinv {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector3 = Eigen::Vector3d;
using Vector4 = Eigen::Vector4d;
using Vector4c = Eigen::Vector4cd;

// Occupied-subspace basis at one momentum: 4 x m orthonormal columns,
// m = 1 or 2. Fixed max size keeps it off the heap.
using Frame = Eigen::Matrix<Complex, 4, Eigen::Dynamic, Eigen::ColMajor, 4, 2>;
using OverlapMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 2, 2>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Tolerances and thresholds, fixed project-wide.
inline constexpr double kHermitianTol = 1e-12;      // per-entry kernel Hermiticity
inline constexpr double kDegeneracyTol = 1e-9;      // occupied/empty gap closure
inline constexpr double kSingularOverlapTol = 1e-12; // |det U| below this flags a near-degeneracy
inline constexpr double kEntanglementFloor = 1e-6;  // |s| below this: unit field undefined
inline constexpr double kEntanglementWarn = 0.1;    // reliability warning band for |s|
inline constexpr double kResidualTol = 0.01;        // accepted winding quantization residual

} // namespace topoinv
