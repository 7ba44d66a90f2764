#include "topoinv/berry.hpp"

#include <sstream>

namespace topoinv {

namespace {

Complex checked_det(const OverlapMatrix& u, const char* where) {
    const Complex d = u.determinant();
    if (std::abs(d) < kSingularOverlapTol) {
        std::ostringstream msg;
        msg << where << ": singular link overlap, |det| = " << std::abs(d)
            << " (near-degeneracy of the occupied subspace)";
        throw DegeneracyError(msg.str());
    }
    return d;
}

double principal(double phase) {
    // map into (-pi, pi]
    if (phase <= -kPi) phase += kTwoPi;
    return phase;
}

} // namespace

double plaquette_berry_flux(const Frame& f1, const Frame& f2, const Frame& f3, const Frame& f4) {
    const OverlapMatrix w = frame_overlap(f1, f2) * frame_overlap(f2, f3) *
                            frame_overlap(f3, f4) * frame_overlap(f4, f1);
    const Complex d = checked_det(w, "plaquette_berry_flux");
    return principal(-std::arg(d));
}

double boundary_berry_phase(std::span<const Frame> loop) {
    if (loop.size() < 3) throw ValidationError("boundary_berry_phase: loop needs >= 3 frames");
    const int m = static_cast<int>(loop.front().cols());
    OverlapMatrix prod = OverlapMatrix::Identity(m, m);
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Frame& a = loop[i];
        const Frame& b = loop[(i + 1) % loop.size()];
        const OverlapMatrix u = frame_overlap(a, b);
        checked_det(u, "boundary_berry_phase");
        prod = prod * u;
    }
    return principal(-std::arg(prod.determinant()));
}

double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace topoinv
