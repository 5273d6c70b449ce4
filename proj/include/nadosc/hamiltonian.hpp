// Truncated Fock-basis assembly of the non-Abelian Dirac oscillator
// Hamiltonian and its spectrum. Full Hilbert space ordering is always
// Fock (x) spinor(4) (x) color(2).

#ifndef NADOSC_HAMILTONIAN_HPP
#define NADOSC_HAMILTONIAN_HPP

#include <array>
#include <vector>

#include "nadosc/clifford.hpp"
#include "nadosc/gauge_algebra.hpp"
#include "nadosc/linalg.hpp"

namespace nadosc {

// Hard cap on the dense matrix dimension N^d * 4 * 2.
inline constexpr std::size_t kMaxHilbertDim = 8192;

struct OscParams {
    int dimension = 1;  // spatial dimensions, 1 or 2
    double mass = 1.0;
    double omega = 1.0;
    double eta = 0.0;
    std::array<double, 3> phi{0.0, 0.0, 0.0};
    double extra_sign = -1.0;   // sign of the eta-linear coupling term
    std::size_t truncation = 8;  // Fock states per axis
    double guard_fraction = 0.5;
    double tolerance = 1e-10;

    void validate() const;
    std::size_t fock_dim() const;
    std::size_t hilbert_dim() const { return fock_dim() * 8; }
};

struct FockOperators {
    std::size_t n_per_axis = 0;
    int dimension = 1;
    double mass = 1.0;
    double omega = 1.0;
    std::size_t fock_dim = 0;
    std::vector<ComplexMatrix> x;  // one per axis, dimension fock_dim
    std::vector<ComplexMatrix> p;
};

// Ladder-built position and momentum matrices with basis frequency omega:
// x = (a + a†)/sqrt(2 m omega), p = i sqrt(m omega / 2) (a† - a).
FockOperators fock_ops(std::size_t n, int d, double m, double omega);

// pi_i = p_i (x) I8 - i m omega x_i (x) beta (x) I2
//        + extra_sign i m omega eta I_F (x) beta (x) c_i.
std::vector<ComplexMatrix> nonminimal_momentum(const FockOperators& f,
                                               const GammaSet& g,
                                               const ChargeSet& c,
                                               const OscParams& p);

struct HamiltonianMatrix {
    ComplexMatrix matrix;
    OscParams params;
    double kappa_q = 1.0;  // charge normalization used during assembly
    double hermiticity_residual = 0.0;
};

// H = sum_i (I (x) alpha_i (x) I) pi_i + m (I (x) beta (x) I); enforces the
// relative Hermiticity invariant.
HamiltonianMatrix build_hamiltonian(const std::vector<ComplexMatrix>& pi,
                                    const GammaSet& g, const OscParams& p);

// Full pipeline: fock_ops -> nonminimal_momentum -> build_hamiltonian.
HamiltonianMatrix assemble_hamiltonian(const OscParams& p, double kappa_q = 1.0);

struct SpectrumResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<bool> converged;      // aligned with eigenvalues; empty if unchecked
    std::size_t converged_count = 0;
    double hermiticity_residual = 0.0;
    double solver_residual = 0.0;
    OscParams params;
    double kappa_q = 1.0;
};

// Dense Hermitian eigensolve; with check_convergence the spectrum is
// recomputed at truncation 2N and eigenvalues stable to 1e-8 (relative to
// max(1,|lambda|)) under positional matching within each sign branch are
// flagged converged.
SpectrumResult spectrum(const HamiltonianMatrix& h, bool check_convergence);

// lambda = 2 m^2 omega / (kappa e)
double lambda_from_moment(double m, double omega, double kappa, double e_charge);
// lambda = 2 m omega / (e B)
double lambda_from_field(double m, double omega, double e_charge, double b);
// B = m omega / q
double field_from_orbit(double m, double omega, double q_charge);

// Guard band: the interior subspace on which truncated operator identities
// hold to numerical precision.
struct GuardMask {
    std::vector<char> keep;  // one flag per full-space index
    std::size_t kept_count = 0;
};

std::size_t guard_band_count(std::size_t n, double guard_fraction);

// Per-axis band: keeps Fock indices with every axis quantum number < g*N.
GuardMask make_guard_mask(const FockOperators& f, double guard_fraction);

// Total-shell band (d = 2): keeps n1 + n2 < g*N, i.e. only complete
// angular-momentum shells.
GuardMask make_shell_guard_mask(const FockOperators& f, double guard_fraction);

double guard_max_abs(const ComplexMatrix& m, const GuardMask& mask);

// The submatrix on the kept indices.
ComplexMatrix guard_compress(const ComplexMatrix& m, const GuardMask& mask);

}  // namespace nadosc

#endif  // NADOSC_HAMILTONIAN_HPP
