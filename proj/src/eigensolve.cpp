#include "topoinv/eigensolve.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

namespace topoinv {

void check_hermitian4(const HermitianKernel4& h) {
    double worst = 0.0;
    int wi = 0, wj = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const double dev = std::abs(h(i, j) - std::conj(h(j, i)));
            if (dev > worst) {
                worst = dev;
                wi = i;
                wj = j;
            }
        }
    }
    if (worst > kHermitianTol) {
        std::ostringstream msg;
        msg << "kernel is not Hermitian: |h(" << wi << "," << wj << ") - conj(h(" << wj
            << "," << wi << "))| = " << worst;
        throw ValidationError(msg.str());
    }
}

SpectralData4 eigensolve_hermitian4(const HermitianKernel4& h) {
    check_hermitian4(h);

    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h);
    SpectralData4 out;
    out.eigenvalues = solver.eigenvalues();
    out.eigenvectors = solver.eigenvectors();

    // Phase convention: rotate each column so its largest-magnitude component
    // is real-positive; ties broken by lowest index (strict > keeps it fixed).
    for (int n = 0; n < 4; ++n) {
        int arg = 0;
        double best = std::norm(out.eigenvectors(0, n));
        for (int i = 1; i < 4; ++i) {
            const double m = std::norm(out.eigenvectors(i, n));
            if (m > best) {
                best = m;
                arg = i;
            }
        }
        const Complex pivot = out.eigenvectors(arg, n);
        const double mag = std::abs(pivot);
        if (mag > 0.0) out.eigenvectors.col(n) *= std::conj(pivot) / mag;
    }
    return out;
}

} // namespace topoinv
