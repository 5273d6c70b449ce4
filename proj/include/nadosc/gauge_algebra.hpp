// U(2) = U(1) x SU(2) generators, charges, and structure constants.

#ifndef NADOSC_GAUGE_ALGEBRA_HPP
#define NADOSC_GAUGE_ALGEBRA_HPP

#include <array>

#include "nadosc/linalg.hpp"
#include "nadosc/report.hpp"

namespace nadosc {

// Levi-Civita symbol on indices 1..3.
double levi_civita(int a, int b, int c);

// Mixed spatial-color symbol eps_{ia} := eps_{ia3}; nonzero only for
// (1,2) -> +1 and (2,1) -> -1.
double eps_mixed(int i, int a);

struct ChargeSet {
    ComplexMatrix t0;                 // T^0 = I
    std::array<ComplexMatrix, 3> t;   // T^a = sigma_a / 2
    ComplexMatrix q0;                 // Q^0 = I
    std::array<ComplexMatrix, 3> q;   // Q^a = kappa_q * sigma_a
    double kappa_q = 1.0;
    // f^{abc} = eps^{abc}, stored densely; indices 0..2 stand for 1..3.
    std::array<std::array<std::array<double, 3>, 3>, 3> f{};
};

// Charges normalized as Q^a = kappa_q * sigma_a; kappa_q must be nonzero.
// With kappa_q = 1 the commutators close as [Q^a,Q^b] = 2i f^{abc} Q^c.
ChargeSet build_charges(double kappa_q = 1.0);

// Residuals of [T^a,T^b] - i f^{abc} T^c for all 9 pairs plus the measured
// closure constant c_Q of [Q^a,Q^b] = c_Q i f^{abc} Q^c. The c_Q row is
// asserted equal to 2 only when kappa_q == 1; otherwise it is reported.
CheckReport verify_lie(const ChargeSet& c);

// Measured closure constant c_Q (least-squares over the (1,2) pair).
double measure_charge_scale(const ChargeSet& c);

}  // namespace nadosc

#endif  // NADOSC_GAUGE_ALGEBRA_HPP
