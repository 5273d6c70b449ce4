#include <random>

#include "doctest.h"
#include "nadosc/gauge_poly.hpp"

using namespace nadosc;

namespace {

const ScalarPoly kT = ScalarPoly::variable(0);
const ScalarPoly kX = ScalarPoly::variable(1);
const ScalarPoly kY = ScalarPoly::variable(2);
const ScalarPoly kZ = ScalarPoly::variable(3);

ScalarPoly r_squared() { return kX * kX + kY * kY + kZ * kZ; }

ScalarPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, max_degree);
    ScalarPoly p;
    for (int term = 0; term < 6; ++term) {
        Exponents e{expo(rng), expo(rng), expo(rng), expo(rng)};
        if (e[0] + e[1] + e[2] + e[3] > max_degree) continue;
        p += ScalarPoly::monomial(e, Rational(coeff(rng), 1 + (term % 3)));
    }
    return p;
}

PolyFourPotential random_potential(std::mt19937& rng, int max_degree) {
    PolyFourPotential a;
    for (int mu = 0; mu < 4; ++mu) a.comp[mu] = random_poly(rng, max_degree);
    return a;
}

}  // namespace

TEST_SUITE("gauge_poly") {

TEST_CASE("polynomial arithmetic basics") {
    const ScalarPoly p = kT * kT - kX * kX;
    CHECK(p.coefficient({2, 0, 0, 0}) == 1);
    CHECK(p.coefficient({0, 2, 0, 0}) == -1);
    CHECK(p.degree() == 2);

    // Cancelling terms are purged, not stored as zeros.
    const ScalarPoly q = p - kT * kT;
    CHECK(q.coefficient({2, 0, 0, 0}) == 0);
    CHECK(q.terms().size() == 1);
    CHECK((p - p).is_zero());
}

TEST_CASE("degree cap is enforced") {
    ScalarPoly p4 = kX * kX * kX * kX;
    const ScalarPoly p8 = p4 * p4;
    CHECK(p8.degree() == 8);
    CHECK_THROWS_AS(p8 * kX, std::invalid_argument);
    CHECK_THROWS_AS(
        ScalarPoly::monomial({9, 0, 0, 0}, Rational(1)), std::invalid_argument);
}

TEST_CASE("grad4 on simple fields") {
    const PolyFourPotential gt = grad4(kT * kT);
    CHECK(gt.comp[0] == Rational(2) * kT);
    CHECK(gt.comp[1].is_zero());

    const PolyFourPotential gx = grad4(kX * kX);
    CHECK(gx.comp[0].is_zero());
    CHECK(gx.comp[1] == Rational(-2) * kX);
    CHECK(gx.comp[2].is_zero());
}

TEST_CASE("grad4 of the first gauge function") {
    const PolyFourPotential g = grad4(example_gauge_function(1, Rational(1)));
    // (-(r^2 - t^2)/4, tx/2, ty/2, tz/2)
    CHECK(g.comp[0] == Rational(-1, 4) * (r_squared() - kT * kT));
    CHECK(g.comp[1] == Rational(1, 2) * (kT * kX));
    CHECK(g.comp[2] == Rational(1, 2) * (kT * kY));
    CHECK(g.comp[3] == Rational(1, 2) * (kT * kZ));
}

TEST_CASE("gauge transform of the first example") {
    const PolyFourPotential raw = example_potential(ExampleField::Ex1Raw,
                                                    Rational(1));
    const PolyFourPotential out =
        gauge_transform(raw, example_gauge_function(1, Rational(1)));
    CHECK(out.comp[0] == Rational(1, 4) * (r_squared() + kT * kT));
    CHECK(out.comp[1] == Rational(1, 2) * (kT * kX));
    CHECK(out.comp[2] == Rational(1, 2) * (kT * kY));
    CHECK(out.comp[3] == Rational(1, 2) * (kT * kZ));

    // Identical to the covariant rewrite for this example.
    CHECK(out == example_potential(ExampleField::Ex1Covariant, Rational(1)));
}

TEST_CASE("gauge transform of the second example") {
    const PolyFourPotential raw = example_potential(ExampleField::Ex2Raw,
                                                    Rational(1));
    const PolyFourPotential out =
        gauge_transform(raw, example_gauge_function(2, Rational(1)));
    CHECK(out.comp[0] == Rational(-1, 4) * (kX * kX + kY * kY + kT * kT));
    CHECK(out.comp[1] == kY + Rational(1, 2) * (kT * kX));
    CHECK(out.comp[2] == -kX + Rational(1, 2) * (kT * kY));
    CHECK(out.comp[3].is_zero());
}

TEST_CASE("gauge transform with zero function is the identity") {
    std::mt19937 rng(21);
    const PolyFourPotential a = random_potential(rng, 3);
    CHECK(gauge_transform(a, ScalarPoly()) == a);
}

TEST_CASE("field tensor of the transformed first example") {
    const PolyFourPotential a = example_potential(ExampleField::Ex1Covariant,
                                                  Rational(1));
    const PolyFieldTensor f = field_tensor_poly(a);
    CHECK(f == boost_form_tensor(Rational(1)));
    CHECK(f.comp[0][1] == kX);
    CHECK(f.comp[0][2] == kY);
    CHECK(f.comp[0][3] == kZ);
    CHECK(f.comp[1][2].is_zero());
}

TEST_CASE("field tensor of the second example is a constant magnetic field") {
    const PolyFieldTensor f =
        field_tensor_poly(example_potential(ExampleField::Ex2Raw, Rational(1)));
    CHECK(f.comp[1][2] == ScalarPoly(Rational(2)));
    CHECK(f.comp[0][1].is_zero());
    CHECK(f.comp[0][2].is_zero());
    CHECK(f.comp[0][3].is_zero());
    CHECK(f.comp[1][3].is_zero());
}

TEST_CASE("pure gauge potentials have vanishing tensors") {
    std::mt19937 rng(22);
    for (int rep = 0; rep < 10; ++rep) {
        const ScalarPoly f = random_poly(rng, 4);
        const PolyFieldTensor tensor = field_tensor_poly(grad4(f));
        CHECK(tensor_residual(tensor, PolyFieldTensor{}) == 0.0);
    }
}

TEST_CASE("example potential values") {
    const PolyFourPotential a = example_potential(ExampleField::Ex1Raw,
                                                  Rational(2));
    CHECK(a.comp[0] == r_squared());
    CHECK(a.comp[1].is_zero());

    const PolyFourPotential b = example_potential(ExampleField::Ex2Raw,
                                                  Rational(1));
    CHECK(b.comp[1] == kY);
    CHECK(b.comp[2] == -kX);
    CHECK(b.comp[0].is_zero());
}

TEST_CASE("gauge invariance holds exactly for both examples") {
    for (const Rational& c : {Rational(1), Rational(2), Rational(3, 7)}) {
        const PolyFourPotential raw1 = example_potential(ExampleField::Ex1Raw, c);
        const PolyFourPotential tr1 =
            gauge_transform(raw1, example_gauge_function(1, c));
        CHECK(field_tensor_poly(raw1) == field_tensor_poly(tr1));
        CHECK(field_tensor_poly(tr1) == boost_form_tensor(c));

        const PolyFourPotential raw2 = example_potential(ExampleField::Ex2Raw, c);
        const PolyFourPotential tr2 =
            gauge_transform(raw2, example_gauge_function(2, c));
        CHECK(field_tensor_poly(raw2) == field_tensor_poly(tr2));
    }
}

TEST_CASE("second covariant rewrite disagrees with the direct tensor") {
    const Rational c(1);
    const PolyFieldTensor direct =
        field_tensor_poly(example_potential(ExampleField::Ex2Raw, c));
    const PolyFieldTensor from_covariant =
        field_tensor_poly(example_potential(ExampleField::Ex2Covariant, c));
    CHECK(tensor_residual(direct, from_covariant) > 0.0);
    CHECK(tensor_residual(direct, boost_form_tensor(c)) > 0.0);
    // The covariant rewrite produces twice the boost form: F^{0k} = 2c x_k.
    CHECK(from_covariant.comp[0][1] == Rational(2) * kX);
    CHECK(from_covariant.comp[1][2].is_zero());
}

TEST_CASE("field tensor antisymmetry and linearity") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        const PolyFourPotential a = random_potential(rng, 3);
        const PolyFourPotential b = random_potential(rng, 3);
        const PolyFieldTensor fa = field_tensor_poly(a);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                CHECK(fa.comp[mu][nu] == -fa.comp[nu][mu]);

        PolyFourPotential sum;
        for (int mu = 0; mu < 4; ++mu) sum.comp[mu] = a.comp[mu] + b.comp[mu];
        const PolyFieldTensor fb = field_tensor_poly(b);
        const PolyFieldTensor fsum = field_tensor_poly(sum);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                CHECK(fsum.comp[mu][nu] == fa.comp[mu][nu] + fb.comp[mu][nu]);
    }
}

TEST_CASE("selector dispatch") {
    const ExampleObject raw = example_object("ex1_raw", Rational(2));
    CHECK_FALSE(raw.is_gauge_function);
    CHECK(raw.potential.comp[0] == r_squared());

    const ExampleObject fn = example_object("ex2_gauge_fn", Rational(1));
    CHECK(fn.is_gauge_function);
    CHECK(fn.gauge_function == example_gauge_function(2, Rational(1)));

    CHECK_THROWS_AS(example_object("ex3_raw", Rational(1)),
                    std::invalid_argument);
}

TEST_CASE("canonical rendering is stable") {
    const ScalarPoly p = Rational(-3, 4) * (kT * kT * kX) + Rational(1, 2) * kY +
                         ScalarPoly(Rational(5));
    CHECK(p.to_string() == "5 + 1/2 y - 3/4 t^2 x");
    CHECK(ScalarPoly().to_string() == "0");
    CHECK((kX - kX).to_string() == "0");
    CHECK((-kZ).to_string() == "-z");
}

}  // TEST_SUITE
