// Non-Abelian gauge potentials, their field-strength tensors, and the
// spin-tensor interaction term. Field components are computed two ways: by
// direct matrix commutators (the normative route) and from closed-form
// expressions, so the two can be compared component by component.

#ifndef NADOSC_NONABELIAN_FIELDS_HPP
#define NADOSC_NONABELIAN_FIELDS_HPP

#include <array>
#include <map>

#include "nadosc/clifford.hpp"
#include "nadosc/gauge_algebra.hpp"
#include "nadosc/gauge_poly.hpp"
#include "nadosc/linalg.hpp"

namespace nadosc {

struct GaugeParams {
    double b0 = 0.0;                     // uniform magnetic background
    std::array<double, 2> e0{0.0, 0.0};  // electric background components
    double eta = 0.0;                    // non-Abelian vector coupling
    double lambda = 0.0;                 // scalar coupling
    std::array<double, 3> phi{0.0, 0.0, 0.0};  // external scalar field
    double kappa = 1.0;                  // anomalous magnetic moment
    double e_charge = 1.0;
    double q_charge = 1.0;
    double mass = 1.0;
    double omega = 1.0;

    void validate() const;  // mass > 0, omega > 0
};

// Extra (color-valued) parts of the potentials:
// a0 = -lambda phi_a Q^a, ai = -eta eps_{ia} Q^a for i = 1, 2.
struct ExtraPotential {
    ComplexMatrix a0;
    std::array<ComplexMatrix, 2> ai;
};

// 4x4 table of 2x2 color matrices, antisymmetric in the two indices.
using ColorTensor = std::array<std::array<ComplexMatrix, 4>, 4>;

// One component of the non-Abelian field tensor: a position polynomial from
// the Abelian backgrounds plus a constant color matrix from the extra parts.
struct NBComponent {
    ScalarPoly abelian;
    ComplexMatrix color;  // 2x2
};

struct NBFieldTensor {
    std::array<std::array<NBComponent, 4>, 4> comp;
};

// c_i = phi_a eps_{ib} f^{abc} Q_c for a spatial direction i in 1..3.
ComplexMatrix color_coupling(const ChargeSet& c,
                             const std::array<double, 3>& phi, int i);

ExtraPotential build_extra_potentials(const GaugeParams& p, const ChargeSet& c);

// Direct route: every component from the matrix commutator i[A_mu, A_nu].
ColorTensor ext_field_tensor(const ExtraPotential& ep);

// Closed forms: F_{0k} = -2 eta lambda phi_a eps_{kb} f^{abc} Q_c and
// F_{ik} = spatial_sign * 2 eta^2 eps_{ia} eps_{kb} f^{abc} Q_c. The adopted
// spatial sign is -1, which matches the direct commutator; +1 is the
// printed variant exposed for comparison runs.
ColorTensor ext_field_tensor_closed(const GaugeParams& p, const ChargeSet& c,
                                    double spatial_sign = -1.0);

// Full tensor: Abelian parts F_{0k} = lambda x_k + E0_k and F_{12} = B0
// plus the color parts from the direct commutator route.
NBFieldTensor nb_field_tensor(const GaugeParams& p, const ChargeSet& c);

// Polynomial in position whose coefficients are matrices on spinor (x) color.
struct OperatorPoly {
    std::size_t dim = 8;
    std::map<Exponents, ComplexMatrix> terms;

    void add_term(const Exponents& e, const ComplexMatrix& m);
    ComplexMatrix constant_part() const;
    bool is_zero(double tol = 0.0) const;
    double max_coefficient_abs() const;
    static double residual(const OperatorPoly& a, const OperatorPoly& b);
};

// prefactor * sigma^{mu nu} F_{mu nu}, contracted directly, together with
// its named pieces for reporting.
struct InteractionTerm {
    OperatorPoly total;
    OperatorPoly position_linear;   // degree-1 Abelian piece
    ComplexMatrix electric;         // constant Abelian 0k piece (E0)
    ComplexMatrix temporal_color;   // from the color parts of F_{0k}
    ComplexMatrix spatial_color;    // from the color parts of F_{ik}
    ComplexMatrix magnetic;         // from the B0 part of F_{12}
};

InteractionTerm interaction_term(const NBFieldTensor& f, const GammaSet& g,
                                 double prefactor);

// Per-direction momentum shifts Delta_i of the non-minimal coupling
// p_i -> p_i + Delta_i, composed from the interaction term multiplied by
// beta. The eta-linear color piece carries extra_sign (default -1); the
// eta^2 spatial-color piece is discarded when drop_eta_squared is set.
// With lambda = 2 m^2 omega / (kappa e) the Abelian piece equals
// -i m omega beta x_i.
std::array<OperatorPoly, 3> nonminimal_substitution(const NBFieldTensor& f,
                                                    const GammaSet& g,
                                                    const GaugeParams& p,
                                                    bool drop_eta_squared,
                                                    double extra_sign = -1.0);

// Quoted closed form of the eta-linear interaction piece,
// -i (kappa e / 2m) lambda eta sum_k alpha_k (x) c_k; the direct contraction
// carries twice this coefficient, which reports surface as a finding.
ComplexMatrix closed_temporal_interaction(const GaugeParams& p,
                                          const ChargeSet& c,
                                          const GammaSet& g);

// Render a 2x2 color matrix as w I + a sigma_1 + b sigma_2 + c sigma_3.
std::string render_color_matrix(const ComplexMatrix& m);

}  // namespace nadosc

#endif  // NADOSC_NONABELIAN_FIELDS_HPP
