#pragma once

#include "topoinv/errors.hpp"
#include "topoinv/types.hpp"

namespace topoinv {

// A HermitianKernel4 is a Matrix4c satisfying entry(i,j) = conj(entry(j,i))
// within kHermitianTol per entry; check_hermitian4 enforces it at the solver
// boundary.
using HermitianKernel4 = Matrix4c;

// Eigenpairs of a 4x4 Hermitian kernel. Eigenvalues ascending; eigenvectors
// are orthonormal columns, column n paired with eigenvalues[n]. Each column
// carries a fixed phase (largest-magnitude component made real-positive,
// ties broken by lowest index) so identical inputs give bit-identical output.
struct SpectralData4 {
    Vector4 eigenvalues;
    Matrix4c eigenvectors;

    // Lowest-m columns as an occupied frame.
    Frame occupied(int m) const { return eigenvectors.leftCols(m); }
};

// Throws ValidationError naming the worst-offending entry.
void check_hermitian4(const HermitianKernel4& h);

SpectralData4 eigensolve_hermitian4(const HermitianKernel4& h);

} // namespace topoinv
