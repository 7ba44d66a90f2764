#include "topoinv/observables.hpp"

#include <sstream>

namespace topoinv {

void SubsystemPartition::validate() const {
    std::array<bool, 4> seen{false, false, false, false};
    for (int m : {a[0], a[1], b[0], b[1]}) {
        if (m < 0 || m > 3) throw ValidationError("SubsystemPartition: mode index out of range");
        if (seen[m]) throw ValidationError("SubsystemPartition: mode pairs must be disjoint");
        seen[m] = true;
    }
}

CorrelationMatrix ground_correlations_insulator(const SpectralData4& spec) {
    const Vector4& e = spec.eigenvalues;
    if (e[2] - e[1] < kDegeneracyTol) {
        std::ostringstream msg;
        msg << "ground_correlations_insulator: gap closed, E3 - E2 = " << e[2] - e[1];
        throw DegeneracyError(msg.str());
    }
    // C(i,j) = <c^dag_i c_j> = conj of the occupied-band projector.
    const Frame occ = spec.occupied(2);
    CorrelationMatrix out;
    out.normal = (occ * occ.adjoint()).conjugate();
    out.sc = false;
    return out;
}

CorrelationMatrix ground_correlations_sc(const SpectralData4& at_p,
                                         const SpectralData4& at_minus_p) {
    const Vector4& e = at_p.eigenvalues;
    if (e[2] - e[1] < kDegeneracyTol || std::min(std::abs(e[1]), std::abs(e[2])) < 0.5 * kDegeneracyTol) {
        std::ostringstream msg;
        msg << "ground_correlations_sc: quasiparticle gap closed, E2 = " << e[1]
            << ", E3 = " << e[2];
        throw DegeneracyError(msg.str());
    }
    if (e[1] > 0.0 || e[2] < 0.0) {
        std::ostringstream msg;
        msg << "ground_correlations_sc: kernel is not particle-hole balanced at this p "
               "(negative-energy count != 2): E2 = "
            << e[1] << ", E3 = " << e[2];
        throw DegeneracyError(msg.str());
    }

    // Projector onto the negative-energy (occupied quasihole) subspace of the
    // doubled basis Psi = (a_p, a^dag_-p, b_p, b^dag_-p):
    //   <Psi^dag_j Psi_i> = P(i,j).
    const Frame occ = at_p.occupied(2);
    const Matrix4c pm = occ * occ.adjoint();

    // Cross-check particle-hole consistency against the -p spectrum:
    // n_a(-p) read from the hole block at p must match the particle block at -p.
    {
        const Frame occm = at_minus_p.occupied(2);
        const Matrix4c pm2 = occm * occm.adjoint();
        const double na_m_from_p = 1.0 - pm(1, 1).real();
        const double na_m_direct = pm2(0, 0).real();
        const double nb_m_from_p = 1.0 - pm(3, 3).real();
        const double nb_m_direct = pm2(2, 2).real();
        if (std::abs(na_m_from_p - na_m_direct) > 1e-8 ||
            std::abs(nb_m_from_p - nb_m_direct) > 1e-8)
            throw ValidationError(
                "ground_correlations_sc: spectra at p and -p are not particle-hole consistent");
    }

    // Mode order of the correlation blocks: (a_p, a_{-p}, b_p, b_{-p}).
    // Psi components: c0 = Psi0, c1 = Psi1^dag, c2 = Psi2, c3 = Psi3^dag, so
    // every <c^dag c> and <c c> entry is a P or (1 - P) entry; cross-momentum
    // <c^dag c> and same-momentum <c c> entries vanish (<Psi Psi> = 0).
    CorrelationMatrix out;
    out.sc = true;
    Matrix4c& c = out.normal;
    Matrix4c& f = out.anomalous;
    c.setZero();
    f.setZero();
    c(0, 0) = pm(0, 0);
    c(0, 2) = pm(2, 0);
    c(2, 0) = pm(0, 2);
    c(2, 2) = pm(2, 2);
    c(1, 1) = 1.0 - pm(1, 1);
    c(1, 3) = -pm(1, 3);
    c(3, 1) = -pm(3, 1);
    c(3, 3) = 1.0 - pm(3, 3);
    f(0, 1) = -pm(0, 1);
    f(1, 0) = pm(0, 1);
    f(0, 3) = -pm(0, 3);
    f(3, 0) = pm(0, 3);
    f(2, 1) = -pm(2, 1);
    f(1, 2) = pm(2, 1);
    f(2, 3) = -pm(2, 3);
    f(3, 2) = pm(2, 3);
    return out;
}

Eigen::MatrixXcd nambu_correlation_matrix(const CorrelationMatrix& corr) {
    Eigen::MatrixXcd g(8, 8);
    g.topLeftCorner<4, 4>() = corr.normal;
    g.topRightCorner<4, 4>() = corr.anomalous.adjoint();
    g.bottomLeftCorner<4, 4>() = corr.anomalous;
    g.bottomRightCorner<4, 4>() = Matrix4c::Identity() - corr.normal.transpose();
    return g;
}

Vector3 insulator_svector(const CorrelationMatrix& corr, const std::array<int, 2>& modes) {
    const int m1 = modes[0];
    const int m2 = modes[1];
    const Complex c12 = corr.normal(m1, m2);
    return Vector3{2.0 * c12.real(), 2.0 * c12.imag(),
                   corr.normal(m1, m1).real() - corr.normal(m2, m2).real()};
}

Vector3 sc_svector(const CorrelationMatrix& corr, const std::array<int, 2>& modes) {
    if (!corr.sc) throw ValidationError("sc_svector: correlation matrix lacks the anomalous block");
    const int mp = modes[0];  // c_p
    const int mm = modes[1];  // c_{-p}
    // z = <c^dag_p c^dag_-p> = conj(<c_-p c_p>)
    const Complex z = std::conj(corr.anomalous(mm, mp));
    const double np = corr.normal(mp, mp).real();
    const double nm = corr.normal(mm, mm).real();
    return Vector3{2.0 * z.real(), 2.0 * z.imag(), np + nm - 1.0};
}

double subsystem_occupation(const CorrelationMatrix& corr, const std::array<int, 2>& modes) {
    return corr.normal(modes[0], modes[0]).real() + corr.normal(modes[1], modes[1]).real();
}

Vector3 SVectorField::unit_at(int j, int k) const {
    const std::size_t idx = grid.index(j, k);
    const double n = norm[idx];
    if (n <= kEntanglementFloor) {
        std::ostringstream msg;
        msg << "subsystem '" << subsystem << "': |s| = " << n << " at grid point (" << j << ", "
            << k << "), maximally entangled, unit field undefined";
        throw MaxEntanglementError(msg.str(), j, k);
    }
    return raw[idx] / n;
}

SVectorFieldPair svector_fields(const SpectralGrid& spectra, const SubsystemPartition& partition,
                                GroundStatePath path) {
    partition.validate();
    const BZGrid& grid = spectra.grid();
    if (path == GroundStatePath::Superconductor && (grid.nx % 2 != 0 || grid.ny % 2 != 0))
        throw ValidationError("svector_fields: SC path requires even grid sizes");

    SVectorFieldPair out{
        SVectorField{grid, partition.label_a, {}, {}, {}},
        SVectorField{grid, partition.label_b, {}, {}, {}},
    };
    const std::size_t n = grid.size();
    for (SVectorField* f : {&out.a, &out.b}) {
        f->raw.resize(n);
        f->norm.resize(n);
        f->occupation.resize(n);
    }

    for (int k = 0; k < grid.ny; ++k) {
        for (int j = 0; j < grid.nx; ++j) {
            const std::size_t idx = grid.index(j, k);
            CorrelationMatrix corr;
            Vector3 sa, sb;
            try {
                if (path == GroundStatePath::Superconductor) {
                    corr = ground_correlations_sc(spectra.at(j, k), spectra.at_inverted(j, k));
                    sa = sc_svector(corr, partition.a);
                    sb = sc_svector(corr, partition.b);
                } else {
                    corr = ground_correlations_insulator(spectra.at(j, k));
                    sa = insulator_svector(corr, partition.a);
                    sb = insulator_svector(corr, partition.b);
                }
            } catch (const DegeneracyError& err) {
                std::ostringstream msg;
                msg << err.what() << " at grid point (" << j << ", " << k << ")";
                throw DegeneracyError(msg.str(), j, k);
            }
            out.a.raw[idx] = sa;
            out.a.norm[idx] = sa.norm();
            out.a.occupation[idx] = subsystem_occupation(corr, partition.a);
            out.b.raw[idx] = sb;
            out.b.norm[idx] = sb.norm();
            out.b.occupation[idx] = subsystem_occupation(corr, partition.b);
        }
    }
    return out;
}

SVectorFieldPair svector_fields(const Model& model, const BZGrid& grid,
                                const SubsystemPartition& partition) {
    SpectralGrid spectra(grid, [&](MomentumPoint p) { return model.kernel(p); });
    return svector_fields(spectra, partition,
                          model.is_sc() ? GroundStatePath::Superconductor
                                        : GroundStatePath::Insulator);
}

double entanglement_measure(const SVectorField& field) {
    double best = std::numeric_limits<double>::infinity();
    for (double n : field.norm) best = std::min(best, n);
    return best;
}

} // namespace topoinv
