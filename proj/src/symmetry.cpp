#include "nadosc/symmetry.hpp"

#include <cmath>

#include "nadosc/gauge_algebra.hpp"

namespace nadosc {

AngularOps build_angular(const FockOperators& f, const GammaSet& g) {
    if (f.dimension != 2)
        throw std::invalid_argument(
            "build_angular: angular momentum requires dimension 2");
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix i8 = ComplexMatrix::identity(8);

    AngularOps a;
    const ComplexMatrix lz_fock = f.x[0] * f.p[1] - f.x[1] * f.p[0];
    a.lz = kron(lz_fock, i8);
    a.sz_half = 0.5 * kron(ComplexMatrix::identity(f.fock_dim),
                           kron(g.sigma_big[2], i2));
    a.jz = a.lz + a.sz_half;
    return a;
}

namespace {

// i (alpha x p)_z + spin_coeff * m * (x x alpha)_z beta assembled directly
// from Kronecker factors.
ComplexMatrix angular_closed_form(const FockOperators& f, const GammaSet& g,
                                  double xcoeff, double sign) {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix a1 = kron(g.alpha[0], i2);
    const ComplexMatrix a2 = kron(g.alpha[1], i2);
    const ComplexMatrix a1b = kron(g.alpha[0] * g.beta, i2);
    const ComplexMatrix a2b = kron(g.alpha[1] * g.beta, i2);

    // (alpha x p)_z = alpha_1 p_2 - alpha_2 p_1
    ComplexMatrix out = Complex(0.0, sign) * kron(f.p[1], a1);
    out += Complex(0.0, -sign) * kron(f.p[0], a2);
    // (x x alpha)_z beta = (x_1 alpha_2 - x_2 alpha_1) beta
    out += Complex(-sign * xcoeff, 0.0) * kron(f.x[0], a2b);
    out += Complex(sign * xcoeff, 0.0) * kron(f.x[1], a1b);
    return out;
}

}  // namespace

CheckReport commutator_report(const AngularOps& a, const HamiltonianMatrix& h,
                              const FockOperators& f, const GammaSet& g,
                              const OscParams& p) {
    p.validate();
    if (p.dimension != 2)
        throw std::invalid_argument("commutator_report: requires dimension 2");
    if (h.matrix.rows() != p.hilbert_dim())
        throw std::invalid_argument(
            "commutator_report: Hamiltonian dimension inconsistent with "
            "parameters");

    CheckReport report;
    const GuardMask mask = make_guard_mask(f, p.guard_fraction);

    // Closed forms hold for the Abelian oscillator; evaluate rows (1)-(3)
    // on the eta = 0 twin.
    OscParams abelian_params = p;
    abelian_params.eta = 0.0;
    const HamiltonianMatrix h_ab = assemble_hamiltonian(abelian_params, h.kappa_q);

    // The commutators below exploit the Kronecker factors of the angular
    // operators; the factored forms must agree with the passed operators.
    const ComplexMatrix lz_fock = f.x[0] * f.p[1] - f.x[1] * f.p[0];
    const ComplexMatrix s8 =
        0.5 * kron(g.sigma_big[2], ComplexMatrix::identity(2));
    if (max_abs_diff(a.lz, kron(lz_fock, ComplexMatrix::identity(8))) != 0.0 ||
        max_abs_diff(a.sz_half,
                     kron(ComplexMatrix::identity(f.fock_dim), s8)) != 0.0 ||
        max_abs_diff(a.jz, a.lz + a.sz_half) != 0.0)
        throw std::invalid_argument(
            "commutator_report: angular operators inconsistent with the "
            "Fock basis");

    const ComplexMatrix comm_l = commutator_kron_left(lz_fock, 8, h_ab.matrix);
    const ComplexMatrix comm_s =
        commutator_kron_right(f.fock_dim, s8, h_ab.matrix);

    const double mw = p.mass * p.omega;
    const ComplexMatrix closed_l = angular_closed_form(f, g, mw, +1.0);
    const ComplexMatrix closed_s = angular_closed_form(f, g, mw, -1.0);

    report.add_check("orbital_commutator_closed_form",
                     guard_max_abs(comm_l - closed_l, mask), 1e-8);
    report.add_check("spin_commutator_closed_form",
                     guard_max_abs(comm_s - closed_s, mask), 1e-8);
    report.add_check("total_angular_momentum_abelian",
                     guard_max_abs(comm_l + comm_s, mask), 1e-8);

    // The same closed form with the omega factor dropped from the position
    // term; nonzero whenever omega != 1.
    const ComplexMatrix closed_l_no_omega = angular_closed_form(f, g, p.mass, +1.0);
    report.add_finding("orbital_closed_form_without_omega",
                       guard_max_abs(comm_l - closed_l_no_omega, mask),
                       "variant with the omega factor dropped from the "
                       "position term");

    report.add_check_exceeds("orbital_not_conserved_alone",
                             guard_max_abs(comm_l, mask), 0.1);
    report.add_check_exceeds("spin_not_conserved_alone",
                             guard_max_abs(comm_s, mask), 0.1);

    // Full non-Abelian Hamiltonian: measured, never asserted.
    const ComplexMatrix comm_l_full = commutator_kron_left(lz_fock, 8, h.matrix);
    const ComplexMatrix comm_s_full =
        commutator_kron_right(f.fock_dim, s8, h.matrix);
    report.add_finding("total_angular_momentum_nonabelian",
                       guard_max_abs(comm_l_full + comm_s_full, mask),
                       "commutator residual for the full Hamiltonian at eta = " +
                           format_double(p.eta));
    return report;
}

CheckReport spin_identity_check(const GammaSet& g) {
    CheckReport report;
    for (int k = 1; k <= 3; ++k) {
        ComplexMatrix acc = g.sigma_big[k - 1];
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const double w = levi_civita(k, i, j);
                if (w != 0.0)
                    acc += Complex(0.0, 0.5 * w) * (g.alpha[i - 1] * g.alpha[j - 1]);
            }
        report.add_check("spin_from_alpha_cross_" + std::to_string(k),
                         max_abs(acc), 0.0);
    }
    return report;
}

}  // namespace nadosc
