#include <random>

#include "doctest.h"
#include "nadosc/config.hpp"
#include "nadosc/results_io.hpp"

using namespace nadosc;

namespace {

std::string field_of_error(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "<no error>";
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("minimal configuration applies the documented defaults") {
    const RunConfig c =
        parse_config(R"({"mass":1,"omega":1,"truncation":8,"dimension":1})");
    CHECK(c.dimension == 1);
    CHECK(c.mass == 1.0);
    CHECK(c.omega == 1.0);
    CHECK(c.truncation == 8);
    CHECK(c.eta == 0.0);
    CHECK(c.lambda == 0.0);
    CHECK(c.phi == std::array<double, 3>{0.0, 0.0, 0.0});
    CHECK(c.b0 == 0.0);
    CHECK(c.e0 == std::array<double, 2>{0.0, 0.0});
    CHECK(c.kappa == 1.0);
    CHECK(c.e_charge == 1.0);
    CHECK(c.q_charge == 1.0);
    CHECK(c.extra_sign == -1.0);
    CHECK(c.kappa_q == 1.0);
    CHECK(c.guard_fraction == 0.5);
    CHECK(c.tolerance == 1e-10);
}

TEST_CASE("validation errors name the offending field") {
    CHECK(field_of_error(
              R"({"mass":-1,"omega":1,"truncation":8,"dimension":1})") ==
          "mass");
    CHECK(field_of_error(
              R"({"mass":1,"omega":0,"truncation":8,"dimension":1})") ==
          "omega");
    CHECK(field_of_error(
              R"({"mass":1,"omega":1,"truncation":0,"dimension":1})") ==
          "truncation");
    CHECK(field_of_error(
              R"({"mass":1,"omega":1,"truncation":8,"dimension":3})") ==
          "dimension");
    CHECK(field_of_error(R"({"mass":1,"omega":1,"truncation":8,"dimension":1,)"
                         R"("guard_fraction":1.5})") == "guard_fraction");
    CHECK(field_of_error(R"({"mass":1,"omega":1,"truncation":8,"dimension":1,)"
                         R"("extra_sign":0.5})") == "extra_sign");
    CHECK(field_of_error(R"({"mass":1,"omega":1,"truncation":8,"dimension":1,)"
                         R"("kappa_q":0})") == "kappa_q");
    CHECK(field_of_error(R"({"mass":1,"omega":1,"truncation":8,"dimension":1,)"
                         R"("tolerance":0})") == "tolerance");
    CHECK(field_of_error(R"({"mass":1,"omega":1,"truncation":8,"dimension":1,)"
                         R"("phi":[1,2]})") == "phi");
    CHECK(field_of_error(R"({"mass":1,"omega":1,"truncation":8,"dimension":1,)"
                         R"("E0":[1,2,3]})") == "E0");
    CHECK(field_of_error(
              R"({"mass":1,"omega":1,"truncation":2000,"dimension":1})") ==
          "truncation");
    CHECK(field_of_error(R"({"omega":1,"truncation":8,"dimension":1})") ==
          "mass");
}

TEST_CASE("unknown keys are rejected") {
    CHECK(field_of_error(R"({"mass":1,"omega":1,"truncation":8,"dimension":1,)"
                         R"("bogus":3})") == "bogus");
}

TEST_CASE("malformed JSON is a parse error") {
    CHECK_THROWS_AS(parse_config("{\"mass\": "), ConfigError);
    CHECK_THROWS_AS(parse_config("[1,2,3]"), ConfigError);
}

TEST_CASE("serialization round-trips randomized configurations") {
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> pos(0.1, 3.0);
    std::uniform_real_distribution<double> sym(-2.0, 2.0);
    std::uniform_int_distribution<int> dim(1, 2);
    std::uniform_int_distribution<std::size_t> trunc(1, 30);
    for (int rep = 0; rep < 50; ++rep) {
        RunConfig c;
        c.dimension = dim(rng);
        c.mass = pos(rng);
        c.omega = pos(rng);
        c.eta = sym(rng);
        c.lambda = sym(rng);
        c.phi = {sym(rng), sym(rng), sym(rng)};
        c.b0 = sym(rng);
        c.e0 = {sym(rng), sym(rng)};
        c.kappa = pos(rng);
        c.e_charge = pos(rng);
        c.q_charge = pos(rng);
        c.truncation = trunc(rng);
        c.extra_sign = rep % 2 ? 1.0 : -1.0;
        c.kappa_q = pos(rng);
        c.guard_fraction = 0.25 + 0.75 * (pos(rng) / 3.0);
        c.tolerance = 1e-12 * pos(rng) * 100;
        const RunConfig back = parse_config(config_to_json(c));
        CHECK(back == c);
    }
}

TEST_CASE("tolerance override parses strictly") {
    RunConfig c = parse_config(
        R"({"mass":1,"omega":1,"truncation":8,"dimension":1})");
    apply_tolerance_override(c, "1e-8");
    CHECK(c.tolerance == 1e-8);
    CHECK_THROWS_AS(apply_tolerance_override(c, "zero"), ConfigError);
    CHECK_THROWS_AS(apply_tolerance_override(c, "-1e-8"), ConfigError);
    CHECK_THROWS_AS(apply_tolerance_override(c, "1e-8junk"), ConfigError);
}

TEST_CASE("parameter conversion carries every field") {
    const RunConfig c = parse_config(
        R"({"mass":2,"omega":3,"truncation":5,"dimension":2,"eta":0.5,)"
        R"("lambda":1.5,"phi":[1,2,3],"B0":4,"E0":[5,6],"kappa":7,)"
        R"("e_charge":8,"q_charge":9,"extra_sign":1,"kappa_q":0.25,)"
        R"("guard_fraction":0.4,"tolerance":1e-9})");
    const GaugeParams gp = to_gauge_params(c);
    CHECK(gp.mass == 2.0);
    CHECK(gp.omega == 3.0);
    CHECK(gp.eta == 0.5);
    CHECK(gp.lambda == 1.5);
    CHECK(gp.phi == std::array<double, 3>{1.0, 2.0, 3.0});
    CHECK(gp.b0 == 4.0);
    CHECK(gp.e0 == std::array<double, 2>{5.0, 6.0});
    CHECK(gp.kappa == 7.0);
    CHECK(gp.e_charge == 8.0);
    CHECK(gp.q_charge == 9.0);

    const OscParams op = to_osc_params(c);
    CHECK(op.dimension == 2);
    CHECK(op.truncation == 5);
    CHECK(op.extra_sign == 1.0);
    CHECK(op.guard_fraction == 0.4);
    CHECK(op.tolerance == 1e-9);
}

TEST_CASE("spectrum serialization is deterministic and shaped as documented") {
    OscParams p;
    p.truncation = 1;
    p.mass = 1.5;
    const HamiltonianMatrix h = assemble_hamiltonian(p);
    const SpectrumResult r = spectrum(h, false);

    const std::string json1 = spectrum_to_json(r);
    const std::string json2 = spectrum_to_json(r);
    CHECK(json1 == json2);
    CHECK(json1.find("\"eigenvalues\": [-1.5, -1.5, -1.5, -1.5, 1.5, 1.5, "
                     "1.5, 1.5]") != std::string::npos);
    CHECK(json1.find("\"converged\"") == std::string::npos);

    const std::string csv = spectrum_to_csv(r);
    CHECK(csv.rfind("index,eigenvalue,converged\n", 0) == 0);
    CHECK(csv.find("\n0,-1.5,0\n") != std::string::npos);
}

}  // TEST_SUITE
