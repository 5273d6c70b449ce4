// Angular-momentum operators on the planar oscillator basis and the
// conservation checks for the oscillator Hamiltonian: orbital and spin
// pieces fail to commute separately, their sum commutes for the Abelian
// Hamiltonian, and the residual for the full non-Abelian Hamiltonian is
// measured and reported.

#ifndef NADOSC_SYMMETRY_HPP
#define NADOSC_SYMMETRY_HPP

#include "nadosc/clifford.hpp"
#include "nadosc/hamiltonian.hpp"
#include "nadosc/linalg.hpp"
#include "nadosc/report.hpp"

namespace nadosc {

struct AngularOps {
    ComplexMatrix lz;       // x p_y - y p_x on the full space
    ComplexMatrix sz_half;  // (I_F (x) Sigma_3 (x) I_2) / 2
    ComplexMatrix jz;       // lz + sz_half
};

// Requires d = 2.
AngularOps build_angular(const FockOperators& f, const GammaSet& g);

// Guard-banded commutator rows:
//   (1) [L_z, H] against i(alpha x p)_z - m omega (x x alpha)_z beta
//   (2) [Sigma_3/2, H] against the negated closed form
//   (3) [J_z, H] for the Abelian part (asserted zero)
//   (4) [J_z, H] for the full Hamiltonian (finding, reported only)
// plus the residual against the closed form without the omega factor
// (finding) and lower-bound checks that neither piece commutes alone.
// Rows (1)-(3) are evaluated on the eta = 0 twin of the passed Hamiltonian.
CheckReport commutator_report(const AngularOps& a, const HamiltonianMatrix& h,
                              const FockOperators& f, const GammaSet& g,
                              const OscParams& p);

// Residuals of Sigma_k + (i/2) eps_{kij} alpha_i alpha_j; exactly zero for
// the Dirac set.
CheckReport spin_identity_check(const GammaSet& g);

}  // namespace nadosc

#endif  // NADOSC_SYMMETRY_HPP
