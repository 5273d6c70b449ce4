#include "nadosc/clifford.hpp"

namespace nadosc {

namespace {

// 4x4 block matrix [[a, b], [c, d]] from 2x2 blocks.
ComplexMatrix blocks2(const ComplexMatrix& a, const ComplexMatrix& b,
                      const ComplexMatrix& c, const ComplexMatrix& d) {
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(i, j + 2) = b(i, j);
            m(i + 2, j) = c(i, j);
            m(i + 2, j + 2) = d(i, j);
        }
    return m;
}

}  // namespace

GammaSet build_dirac_set() {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix z2 = ComplexMatrix::zero(2, 2);

    GammaSet g;
    g.gamma[0] = blocks2(i2, z2, z2, -1.0 * i2);
    for (int k = 1; k <= 3; ++k) {
        const ComplexMatrix s = pauli(k);
        g.gamma[k] = blocks2(z2, s, -1.0 * s, z2);
    }
    g.beta = g.gamma[0];
    for (int k = 1; k <= 3; ++k) {
        g.alpha[k - 1] = g.gamma[0] * g.gamma[k];
        const ComplexMatrix s = pauli(k);
        g.sigma_big[k - 1] = blocks2(s, z2, z2, s);
    }
    return g;
}

SigmaTensor sigma_tensor(const GammaSet& g) {
    SigmaTensor t;
    const Complex half_i(0.0, 0.5);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            t.comp[mu][nu] =
                half_i * bracket(g.gamma[mu], g.gamma[nu], BracketKind::Commutator);
    return t;
}

CheckReport verify_clifford(const GammaSet& g) {
    CheckReport report;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu; nu < 4; ++nu) {
            ComplexMatrix lhs =
                bracket(g.gamma[mu], g.gamma[nu], BracketKind::Anticommutator);
            const double eta = (mu == nu) ? g.metric[mu] : 0.0;
            lhs -= (2.0 * eta) * ComplexMatrix::identity(4);
            report.add_check("anticommutator_pair_" + std::to_string(mu) +
                                 std::to_string(nu),
                             max_abs(lhs), 0.0);
        }
    return report;
}

}  // namespace nadosc
