// Exact multivariate polynomials over (t, x, y, z) with rational
// coefficients; spacetime four-potentials, gauge transformations, and the
// Abelian field tensor built on top of them. Everything here is exact: the
// identities checked downstream are polynomial identities, pass or fail with
// no tolerance.

#ifndef NADOSC_GAUGE_POLY_HPP
#define NADOSC_GAUGE_POLY_HPP

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "nadosc/report.hpp"

namespace nadosc {

using Rational = boost::multiprecision::cpp_rational;

// Exponent tuple (e_t, e_x, e_y, e_z); map ordering is lexicographic, which
// fixes the canonical term order used everywhere (rendering, iteration).
using Exponents = std::array<int, 4>;

class ScalarPoly {
public:
    // Total degree cap; construction beyond it throws.
    static constexpr int kMaxDegree = 8;

    ScalarPoly() = default;
    explicit ScalarPoly(const Rational& constant);

    static ScalarPoly variable(int axis);  // 0 = t, 1 = x, 2 = y, 3 = z
    static ScalarPoly monomial(const Exponents& e, const Rational& coeff);

    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const noexcept;  // -1 for the zero polynomial
    Rational coefficient(const Exponents& e) const;
    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }

    ScalarPoly derivative(int axis) const;

    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) {
        a += b;
        return a;
    }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) {
        a -= b;
        return a;
    }
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator*(const Rational& s, ScalarPoly p);
    ScalarPoly operator-() const;

    bool operator==(const ScalarPoly& o) const { return terms_ == o.terms_; }

    // Canonical text form: terms in lexicographic exponent order, exact
    // rational coefficients. Stable across runs.
    std::string to_string() const;

    // Largest |coefficient difference| converted to double; 0 iff equal.
    static double residual(const ScalarPoly& a, const ScalarPoly& b);

private:
    void insert_term(const Exponents& e, const Rational& coeff);
    std::map<Exponents, Rational> terms_;
};

struct PolyFourPotential {
    std::array<ScalarPoly, 4> comp;  // contravariant A^0..A^3
    bool operator==(const PolyFourPotential& o) const { return comp == o.comp; }
};

struct PolyFieldTensor {
    std::array<std::array<ScalarPoly, 4>, 4> comp;  // F^{mu nu}, antisymmetric
    bool operator==(const PolyFieldTensor& o) const { return comp == o.comp; }
};

// Contravariant gradient under signature (+,-,-,-):
// component 0 = d_t f, component k = -d_k f.
PolyFourPotential grad4(const ScalarPoly& f);

// A^mu + d^mu Lambda, exact.
PolyFourPotential gauge_transform(const PolyFourPotential& a,
                                  const ScalarPoly& lam);

// F^{mu nu} = d^mu A^nu - d^nu A^mu, exact.
PolyFieldTensor field_tensor_poly(const PolyFourPotential& a);

// The two worked potentials, their gauge functions, and their covariant
// rewrites, with the symbolic coupling substituted by an exact rational.
enum class ExampleField {
    Ex1Raw,
    Ex1Covariant,
    Ex2Raw,
    Ex2Covariant,
};

PolyFourPotential example_potential(ExampleField which, const Rational& coupling);
ScalarPoly example_gauge_function(int example, const Rational& coupling);

// Selector strings used by the CLI: ex1_raw, ex1_gauge_fn, ex1_covariant,
// ex2_raw, ex2_gauge_fn, ex2_covariant. Gauge-function selectors yield a
// one-component result; unknown selectors throw std::invalid_argument.
struct ExampleObject {
    bool is_gauge_function = false;
    PolyFourPotential potential;  // valid when !is_gauge_function
    ScalarPoly gauge_function;    // valid when is_gauge_function
};
ExampleObject example_object(const std::string& selector,
                             const Rational& coupling);

// Max coefficient residual over all components; 0 iff tensors are equal.
double tensor_residual(const PolyFieldTensor& a, const PolyFieldTensor& b);

// The closed-form tensor c (u^mu x^nu - u^nu x^mu) with u = (1,0,0,0).
PolyFieldTensor boost_form_tensor(const Rational& c);

}  // namespace nadosc

#endif  // NADOSC_GAUGE_POLY_HPP
