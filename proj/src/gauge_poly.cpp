#include "nadosc/gauge_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace nadosc {

namespace {

int total_degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

const char* kVarNames[4] = {"t", "x", "y", "z"};

}  // namespace

ScalarPoly::ScalarPoly(const Rational& constant) {
    insert_term({0, 0, 0, 0}, constant);
}

ScalarPoly ScalarPoly::variable(int axis) {
    if (axis < 0 || axis > 3)
        throw std::invalid_argument("ScalarPoly::variable: axis must be 0..3");
    Exponents e{0, 0, 0, 0};
    e[axis] = 1;
    return monomial(e, Rational(1));
}

ScalarPoly ScalarPoly::monomial(const Exponents& e, const Rational& coeff) {
    ScalarPoly p;
    p.insert_term(e, coeff);
    return p;
}

void ScalarPoly::insert_term(const Exponents& e, const Rational& coeff) {
    if (coeff == 0) return;
    for (int k : e)
        if (k < 0) throw std::invalid_argument("ScalarPoly: negative exponent");
    if (total_degree(e) > kMaxDegree)
        throw std::invalid_argument("ScalarPoly: degree cap exceeded");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

int ScalarPoly::degree() const noexcept {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Rational ScalarPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

ScalarPoly ScalarPoly::derivative(int axis) const {
    if (axis < 0 || axis > 3)
        throw std::invalid_argument("ScalarPoly::derivative: axis must be 0..3");
    ScalarPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[axis] == 0) continue;
        Exponents d = e;
        d[axis] -= 1;
        out.insert_term(d, c * e[axis]);
    }
    return out;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2],
                        ea[3] + eb[3]};
            out.insert_term(e, ca * cb);
        }
    return out;
}

ScalarPoly operator*(const Rational& s, ScalarPoly p) {
    if (s == 0) return ScalarPoly();
    for (auto& [e, c] : p.terms_) c *= s;
    return p;
}

ScalarPoly ScalarPoly::operator-() const { return Rational(-1) * (*this); }

std::string ScalarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int axis = 0; axis < 4; ++axis) {
            if (e[axis] == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += kVarNames[axis];
            if (e[axis] > 1) mono += '^' + std::to_string(e[axis]);
        }
        Rational coeff = c;
        bool negative = coeff < 0;
        if (negative) coeff = -coeff;
        std::string cs = coeff.str();
        std::string term;
        if (mono.empty())
            term = cs;
        else if (coeff == 1)
            term = mono;
        else
            term = cs + ' ' + mono;
        if (first) {
            out += negative ? "-" + term : term;
            first = false;
        } else {
            out += negative ? " - " + term : " + " + term;
        }
    }
    return out;
}

double ScalarPoly::residual(const ScalarPoly& a, const ScalarPoly& b) {
    double worst = 0.0;
    auto scan = [&](const ScalarPoly& p, const ScalarPoly& q) {
        for (const auto& [e, c] : p.terms_) {
            const Rational d = c - q.coefficient(e);
            worst = std::max(worst, std::abs(static_cast<double>(d)));
        }
    };
    scan(a, b);
    scan(b, a);
    return worst;
}

PolyFourPotential grad4(const ScalarPoly& f) {
    PolyFourPotential out;
    out.comp[0] = f.derivative(0);
    for (int k = 1; k <= 3; ++k) out.comp[k] = -f.derivative(k);
    return out;
}

PolyFourPotential gauge_transform(const PolyFourPotential& a,
                                  const ScalarPoly& lam) {
    const PolyFourPotential g = grad4(lam);
    PolyFourPotential out;
    for (int mu = 0; mu < 4; ++mu) out.comp[mu] = a.comp[mu] + g.comp[mu];
    return out;
}

PolyFieldTensor field_tensor_poly(const PolyFourPotential& a) {
    // d^mu applied to a scalar is component mu of grad4.
    std::array<PolyFourPotential, 4> grads;
    for (int nu = 0; nu < 4; ++nu) grads[nu] = grad4(a.comp[nu]);
    PolyFieldTensor f;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            f.comp[mu][nu] = grads[nu].comp[mu] - grads[mu].comp[nu];
    return f;
}

namespace {

ScalarPoly spatial_square() {
    ScalarPoly r2;
    for (int k = 1; k <= 3; ++k) {
        const ScalarPoly v = ScalarPoly::variable(k);
        r2 += v * v;
    }
    return r2;
}

ScalarPoly minkowski_square() {
    const ScalarPoly t = ScalarPoly::variable(0);
    return t * t - spatial_square();
}

}  // namespace

PolyFourPotential example_potential(ExampleField which,
                                    const Rational& coupling) {
    const ScalarPoly t = ScalarPoly::variable(0);
    PolyFourPotential a;
    switch (which) {
        case ExampleField::Ex1Raw:
            // A^mu = c (r^2/2, 0, 0, 0)
            a.comp[0] = (coupling / 2) * spatial_square();
            break;
        case ExampleField::Ex1Covariant: {
            // A^mu = (c/4) (2 (u.x) x^mu - x^2 u^mu), u = (1,0), x^2 Minkowski
            const ScalarPoly x2 = minkowski_square();
            a.comp[0] = (coupling / 4) * (Rational(2) * (t * t) - x2);
            for (int k = 1; k <= 3; ++k)
                a.comp[k] =
                    (coupling / 2) * (t * ScalarPoly::variable(k));
            break;
        }
        case ExampleField::Ex2Raw:
            // A^mu = c (0, y, -x, 0)
            a.comp[1] = coupling * ScalarPoly::variable(2);
            a.comp[2] = -(coupling * ScalarPoly::variable(1));
            break;
        case ExampleField::Ex2Covariant: {
            // A^mu = (c/2) (2 (u.x) x^mu - x^2 u^mu)
            const ScalarPoly x2 = minkowski_square();
            a.comp[0] = (coupling / 2) * (Rational(2) * (t * t) - x2);
            for (int k = 1; k <= 3; ++k)
                a.comp[k] = coupling * (t * ScalarPoly::variable(k));
            break;
        }
        default:
            throw std::invalid_argument("example_potential: unknown selector");
    }
    return a;
}

ScalarPoly example_gauge_function(int example, const Rational& coupling) {
    const ScalarPoly t = ScalarPoly::variable(0);
    const ScalarPoly x = ScalarPoly::variable(1);
    const ScalarPoly y = ScalarPoly::variable(2);
    switch (example) {
        case 1:
            // Lambda = -(c/4) (t r^2 - t^3/3)
            return -(coupling / 4) *
                   (t * spatial_square() - Rational(1, 3) * (t * t * t));
        case 2:
            // Lambda = -(c/4) t x^2 - (c/4) t y^2 - (c/12) t^3
            return -(coupling / 4) * (t * (x * x)) -
                   (coupling / 4) * (t * (y * y)) -
                   (coupling / 12) * (t * t * t);
        default:
            throw std::invalid_argument(
                "example_gauge_function: example must be 1 or 2");
    }
}

ExampleObject example_object(const std::string& selector,
                             const Rational& coupling) {
    ExampleObject out;
    if (selector == "ex1_raw") {
        out.potential = example_potential(ExampleField::Ex1Raw, coupling);
    } else if (selector == "ex1_covariant") {
        out.potential = example_potential(ExampleField::Ex1Covariant, coupling);
    } else if (selector == "ex2_raw") {
        out.potential = example_potential(ExampleField::Ex2Raw, coupling);
    } else if (selector == "ex2_covariant") {
        out.potential = example_potential(ExampleField::Ex2Covariant, coupling);
    } else if (selector == "ex1_gauge_fn") {
        out.is_gauge_function = true;
        out.gauge_function = example_gauge_function(1, coupling);
    } else if (selector == "ex2_gauge_fn") {
        out.is_gauge_function = true;
        out.gauge_function = example_gauge_function(2, coupling);
    } else {
        throw std::invalid_argument("example_object: unknown selector '" +
                                    selector + "'");
    }
    return out;
}

double tensor_residual(const PolyFieldTensor& a, const PolyFieldTensor& b) {
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            worst = std::max(worst,
                             ScalarPoly::residual(a.comp[mu][nu], b.comp[mu][nu]));
    return worst;
}

PolyFieldTensor boost_form_tensor(const Rational& c) {
    PolyFieldTensor f;
    for (int k = 1; k <= 3; ++k) {
        f.comp[0][k] = c * ScalarPoly::variable(k);
        f.comp[k][0] = -f.comp[0][k];
    }
    return f;
}

}  // namespace nadosc
