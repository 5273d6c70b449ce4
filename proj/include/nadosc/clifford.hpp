// Dirac representation of the Clifford algebra and the spin tensor built
// from it. Conventions: metric diag(+1,-1,-1,-1), gamma^0 = diag(I2,-I2),
// gamma^k = antidiag(sigma_k, -sigma_k).

#ifndef NADOSC_CLIFFORD_HPP
#define NADOSC_CLIFFORD_HPP

#include <array>

#include "nadosc/linalg.hpp"
#include "nadosc/report.hpp"

namespace nadosc {

struct GammaSet {
    std::array<ComplexMatrix, 4> gamma;      // gamma^0..gamma^3
    ComplexMatrix beta;                      // gamma^0
    std::array<ComplexMatrix, 3> alpha;      // alpha_k = gamma^0 gamma^k
    std::array<ComplexMatrix, 3> sigma_big;  // Sigma_k = diag(sigma_k, sigma_k)
    std::array<double, 4> metric{+1.0, -1.0, -1.0, -1.0};
};

struct SigmaTensor {
    // sigma^{mu nu} = (i/2) [gamma^mu, gamma^nu]; antisymmetric table.
    std::array<std::array<ComplexMatrix, 4>, 4> comp;
};

GammaSet build_dirac_set();

SigmaTensor sigma_tensor(const GammaSet& g);

// Residuals of {gamma^mu, gamma^nu} - 2 eta^{mu nu} I for every pair
// mu <= nu; all must be exactly zero for the Dirac set.
CheckReport verify_clifford(const GammaSet& g);

}  // namespace nadosc

#endif  // NADOSC_CLIFFORD_HPP
