#include "nadosc/nonabelian_fields.hpp"

#include <cmath>
#include <stdexcept>

namespace nadosc {

void GaugeParams::validate() const {
    if (!(mass > 0.0)) throw std::invalid_argument("GaugeParams: mass must be > 0");
    if (!(omega > 0.0))
        throw std::invalid_argument("GaugeParams: omega must be > 0");
}

ComplexMatrix color_coupling(const ChargeSet& c,
                             const std::array<double, 3>& phi, int i) {
    if (i < 1 || i > 3)
        throw std::invalid_argument("color_coupling: direction must be 1..3");
    ComplexMatrix out = ComplexMatrix::zero(2, 2);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int d = 1; d <= 3; ++d) {
                const double w = phi[a - 1] * eps_mixed(i, b) *
                                 c.f[a - 1][b - 1][d - 1];
                if (w != 0.0) out += w * c.q[d - 1];
            }
    return out;
}

ExtraPotential build_extra_potentials(const GaugeParams& p, const ChargeSet& c) {
    p.validate();
    ExtraPotential ep;
    ep.a0 = ComplexMatrix::zero(2, 2);
    for (int a = 1; a <= 3; ++a)
        ep.a0 -= (p.lambda * p.phi[a - 1]) * c.q[a - 1];
    for (int i = 1; i <= 2; ++i) {
        ep.ai[i - 1] = ComplexMatrix::zero(2, 2);
        for (int a = 1; a <= 3; ++a) {
            const double w = eps_mixed(i, a);
            if (w != 0.0) ep.ai[i - 1] -= (p.eta * w) * c.q[a - 1];
        }
    }
    return ep;
}

namespace {

ColorTensor zero_color_tensor() {
    ColorTensor t;
    for (auto& row : t)
        for (auto& m : row) m = ComplexMatrix::zero(2, 2);
    return t;
}

// Extra potential component for a spacetime index, A_3^{Ext} being zero.
ComplexMatrix ext_component(const ExtraPotential& ep, int mu) {
    if (mu == 0) return ep.a0;
    if (mu == 1 || mu == 2) return ep.ai[mu - 1];
    return ComplexMatrix::zero(2, 2);
}

}  // namespace

ColorTensor ext_field_tensor(const ExtraPotential& ep) {
    ColorTensor t = zero_color_tensor();
    const Complex i(0.0, 1.0);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            const ComplexMatrix amu = ext_component(ep, mu);
            const ComplexMatrix anu = ext_component(ep, nu);
            t[mu][nu] = i * bracket(amu, anu, BracketKind::Commutator);
            t[nu][mu] = -t[mu][nu];
        }
    return t;
}

ColorTensor ext_field_tensor_closed(const GaugeParams& p, const ChargeSet& c,
                                    double spatial_sign) {
    ColorTensor t = zero_color_tensor();
    for (int k = 1; k <= 3; ++k) {
        ComplexMatrix f0k = ComplexMatrix::zero(2, 2);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int d = 1; d <= 3; ++d) {
                    const double w = p.phi[a - 1] * eps_mixed(k, b) *
                                     c.f[a - 1][b - 1][d - 1];
                    if (w != 0.0) f0k += (-2.0 * p.eta * p.lambda * w) * c.q[d - 1];
                }
        t[0][k] = f0k;
        t[k][0] = -f0k;
    }
    for (int i = 1; i <= 3; ++i)
        for (int k = i + 1; k <= 3; ++k) {
            ComplexMatrix fik = ComplexMatrix::zero(2, 2);
            for (int a = 1; a <= 3; ++a)
                for (int b = 1; b <= 3; ++b)
                    for (int d = 1; d <= 3; ++d) {
                        const double w = eps_mixed(i, a) * eps_mixed(k, b) *
                                         c.f[a - 1][b - 1][d - 1];
                        if (w != 0.0)
                            fik += (spatial_sign * 2.0 * p.eta * p.eta * w) *
                                   c.q[d - 1];
                    }
            t[i][k] = fik;
            t[k][i] = -fik;
        }
    return t;
}

NBFieldTensor nb_field_tensor(const GaugeParams& p, const ChargeSet& c) {
    p.validate();
    NBFieldTensor f;
    for (auto& row : f.comp)
        for (auto& comp : row) {
            comp.abelian = ScalarPoly();
            comp.color = ComplexMatrix::zero(2, 2);
        }

    // Abelian backgrounds as position polynomials:
    // A_0 = Phi = -x_i E0_i, A_i = -(1/2) B0 eps_{ij} x_j.
    std::array<ScalarPoly, 4> a;
    for (int k = 1; k <= 2; ++k)
        a[0] -= Rational(p.e0[k - 1]) * ScalarPoly::variable(k);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const double w = levi_civita(i, j, 3);
            if (w != 0.0)
                a[i] -= Rational(p.b0 * w / 2.0) * ScalarPoly::variable(j);
        }

    // F_{mu nu} = d_mu A_nu - d_nu A_mu plus the uniform-coupling tensor
    // lambda (u_0 x_k - u_k x_0) in the temporal components.
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            ScalarPoly comp = a[nu].derivative(mu) - a[mu].derivative(nu);
            if (mu == 0)
                comp += Rational(p.lambda) * ScalarPoly::variable(nu);
            f.comp[mu][nu].abelian = comp;
            f.comp[nu][mu].abelian = -comp;
        }

    // Color parts from the direct commutator route.
    const ColorTensor ext = ext_field_tensor(build_extra_potentials(p, c));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) f.comp[mu][nu].color = ext[mu][nu];
    return f;
}

void OperatorPoly::add_term(const Exponents& e, const ComplexMatrix& m) {
    if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("OperatorPoly: coefficient dimension mismatch");
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (max_abs(m) != 0.0) terms.emplace(e, m);
    } else {
        it->second += m;
        if (max_abs(it->second) == 0.0) terms.erase(it);
    }
}

ComplexMatrix OperatorPoly::constant_part() const {
    auto it = terms.find(Exponents{0, 0, 0, 0});
    return it == terms.end() ? ComplexMatrix::zero(dim, dim) : it->second;
}

bool OperatorPoly::is_zero(double tol) const {
    for (const auto& [e, m] : terms)
        if (max_abs(m) > tol) return false;
    return true;
}

double OperatorPoly::max_coefficient_abs() const {
    double worst = 0.0;
    for (const auto& [e, m] : terms) worst = std::max(worst, max_abs(m));
    return worst;
}

double OperatorPoly::residual(const OperatorPoly& a, const OperatorPoly& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("OperatorPoly::residual: dimension mismatch");
    double worst = 0.0;
    auto scan = [&](const OperatorPoly& p, const OperatorPoly& q) {
        for (const auto& [e, m] : p.terms) {
            auto it = q.terms.find(e);
            if (it == q.terms.end())
                worst = std::max(worst, max_abs(m));
            else
                worst = std::max(worst, max_abs_diff(m, it->second));
        }
    };
    scan(a, b);
    scan(b, a);
    return worst;
}

InteractionTerm interaction_term(const NBFieldTensor& f, const GammaSet& g,
                                 double prefactor) {
    const SigmaTensor sig = sigma_tensor(g);
    const ComplexMatrix icolor = ComplexMatrix::identity(2);

    InteractionTerm out;
    out.electric = ComplexMatrix::zero(8, 8);
    out.temporal_color = ComplexMatrix::zero(8, 8);
    out.spatial_color = ComplexMatrix::zero(8, 8);
    out.magnetic = ComplexMatrix::zero(8, 8);

    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            // Antisymmetry pairs (mu,nu) and (nu,mu) contribute equally.
            const ComplexMatrix spin_factor = kron(sig.comp[mu][nu], icolor);
            for (const auto& [e, coeff] : f.comp[mu][nu].abelian.terms()) {
                const double w = 2.0 * prefactor * static_cast<double>(coeff);
                const ComplexMatrix contrib = w * spin_factor;
                out.total.add_term(e, contrib);
                const int deg = e[0] + e[1] + e[2] + e[3];
                if (deg == 0) {
                    if (mu == 0)
                        out.electric += contrib;
                    else
                        out.magnetic += contrib;
                } else {
                    out.position_linear.add_term(e, contrib);
                }
            }
            if (max_abs(f.comp[mu][nu].color) != 0.0) {
                const ComplexMatrix contrib =
                    (2.0 * prefactor) * kron(sig.comp[mu][nu], f.comp[mu][nu].color);
                out.total.add_term(Exponents{0, 0, 0, 0}, contrib);
                if (mu == 0)
                    out.temporal_color += contrib;
                else
                    out.spatial_color += contrib;
            }
        }
    return out;
}

std::array<OperatorPoly, 3> nonminimal_substitution(const NBFieldTensor& f,
                                                    const GammaSet& g,
                                                    const GaugeParams& p,
                                                    bool drop_eta_squared,
                                                    double extra_sign) {
    p.validate();
    if (extra_sign != 1.0 && extra_sign != -1.0)
        throw std::invalid_argument(
            "nonminimal_substitution: extra_sign must be +1 or -1");
    const double pre = p.kappa * p.e_charge / (2.0 * p.mass);
    const ComplexMatrix icolor = ComplexMatrix::identity(2);
    const ComplexMatrix beta_full = kron(g.beta, icolor);

    std::array<OperatorPoly, 3> shifts;
    for (int i = 1; i <= 3; ++i) {
        OperatorPoly& delta = shifts[i - 1];
        // Abelian piece: -i (kappa e / 2m) F^{AB}_{0i} beta.
        for (const auto& [e, coeff] : f.comp[0][i].abelian.terms())
            delta.add_term(e, Complex(0.0, -pre * static_cast<double>(coeff)) *
                                  beta_full);
        // eta-linear color piece with the configurable sign.
        if (max_abs(f.comp[0][i].color) != 0.0)
            delta.add_term(Exponents{0, 0, 0, 0},
                           Complex(0.0, -extra_sign * pre / 2.0) *
                               kron(g.beta, f.comp[0][i].color));
        // eta^2 spatial-color piece, kept only on request.
        if (!drop_eta_squared) {
            for (int k = 1; k <= 3; ++k) {
                if (k == i || max_abs(f.comp[i][k].color) == 0.0) continue;
                delta.add_term(Exponents{0, 0, 0, 0},
                               Complex(0.0, pre / 2.0) *
                                   kron(g.beta * g.alpha[k - 1],
                                        f.comp[i][k].color));
            }
        }
    }
    return shifts;
}

ComplexMatrix closed_temporal_interaction(const GaugeParams& p,
                                          const ChargeSet& c,
                                          const GammaSet& g) {
    ComplexMatrix out = ComplexMatrix::zero(8, 8);
    const Complex w(0.0, -p.kappa * p.e_charge * p.lambda * p.eta /
                             (2.0 * p.mass));
    for (int k = 1; k <= 3; ++k)
        out += w * kron(g.alpha[k - 1], color_coupling(c, p.phi, k));
    return out;
}

std::string render_color_matrix(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("render_color_matrix: expects 2x2");
    const double w = 0.5 * (m(0, 0) + m(1, 1)).real();
    const double a = 0.5 * (m(0, 1) + m(1, 0)).real();
    const double b = 0.5 * (m(1, 0) - m(0, 1)).imag();
    const double c = 0.5 * (m(0, 0) - m(1, 1)).real();
    std::string out = format_double(w) + " I";
    out += " + " + format_double(a) + " s1";
    out += " + " + format_double(b) + " s2";
    out += " + " + format_double(c) + " s3";
    return out;
}

}  // namespace nadosc
