#include "nadosc/gauge_algebra.hpp"

#include <cmath>

namespace nadosc {

double levi_civita(int a, int b, int c) {
    if (a < 1 || a > 3 || b < 1 || b > 3 || c < 1 || c > 3)
        throw std::invalid_argument("levi_civita: indices must be in 1..3");
    if (a == b || b == c || a == c) return 0.0;
    // Parity of the permutation (a,b,c) of (1,2,3).
    const int swaps = (a > b) + (a > c) + (b > c);
    return (swaps % 2 == 0) ? 1.0 : -1.0;
}

double eps_mixed(int i, int a) { return levi_civita(i, a, 3); }

ChargeSet build_charges(double kappa_q) {
    if (kappa_q == 0.0)
        throw std::invalid_argument("build_charges: kappa_q must be nonzero");
    ChargeSet c;
    c.kappa_q = kappa_q;
    c.t0 = ComplexMatrix::identity(2);
    c.q0 = ComplexMatrix::identity(2);
    for (int a = 1; a <= 3; ++a) {
        c.t[a - 1] = 0.5 * pauli(a);
        c.q[a - 1] = kappa_q * pauli(a);
    }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int d = 1; d <= 3; ++d)
                c.f[a - 1][b - 1][d - 1] = levi_civita(a, b, d);
    return c;
}

double measure_charge_scale(const ChargeSet& c) {
    // [Q^1,Q^2] = c_Q i f^{12d} Q^d; Frobenius least squares against the
    // right-hand side built from the stored structure constants.
    const ComplexMatrix lhs = bracket(c.q[0], c.q[1], BracketKind::Commutator);
    ComplexMatrix rhs = ComplexMatrix::zero(2, 2);
    for (int d = 0; d < 3; ++d)
        if (c.f[0][1][d] != 0.0)
            rhs += Complex(0.0, c.f[0][1][d]) * c.q[d];
    Complex num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            num += std::conj(rhs(i, j)) * lhs(i, j);
            den += std::norm(rhs(i, j));
        }
    if (den == 0.0) return 0.0;
    return (num / den).real();
}

CheckReport verify_lie(const ChargeSet& c) {
    CheckReport report;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            ComplexMatrix lhs = bracket(c.t[a], c.t[b], BracketKind::Commutator);
            for (int d = 0; d < 3; ++d)
                if (c.f[a][b][d] != 0.0)
                    lhs -= Complex(0.0, c.f[a][b][d]) * c.t[d];
            report.add_check("generator_pair_" + std::to_string(a + 1) +
                                 std::to_string(b + 1),
                             max_abs(lhs), 1e-15);
        }

    const double cq = measure_charge_scale(c);
    if (c.kappa_q == 1.0) {
        report.add_check("charge_closure_scale", std::abs(cq - 2.0), 1e-15,
                         "measured c_Q = " + format_double(cq));
    } else {
        report.add_finding("charge_closure_scale", cq,
                           "closure constant for kappa_q = " +
                               format_double(c.kappa_q));
    }

    // Consistency of the measured scale across all pairs.
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            ComplexMatrix lhs = bracket(c.q[a], c.q[b], BracketKind::Commutator);
            for (int d = 0; d < 3; ++d)
                if (c.f[a][b][d] != 0.0)
                    lhs -= Complex(0.0, cq * c.f[a][b][d]) * c.q[d];
            worst = std::max(worst, max_abs(lhs));
        }
    report.add_check("charge_closure_consistency", worst, 1e-14,
                     "all charge pairs against the measured scale");
    return report;
}

}  // namespace nadosc
