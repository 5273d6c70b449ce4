#include "nadosc/config.hpp"

#include <cmath>
#include <cstdlib>
#include <set>

#include "json.hpp"
#include "nadosc/report.hpp"

namespace nadosc {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& field) {
    if (!j.is_number())
        throw ConfigError(field, "field '" + field + "' must be a number");
    return j.get<double>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("", "configuration must be a JSON object");

    static const std::set<std::string> known = {
        "dimension", "mass",       "omega",      "eta",
        "lambda",    "phi",        "B0",         "E0",
        "kappa",     "e_charge",   "q_charge",   "truncation",
        "extra_sign", "kappa_q",   "guard_fraction", "tolerance"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key()))
            throw ConfigError(it.key(), "unknown key '" + it.key() + "'");

    for (const char* req : {"dimension", "mass", "omega", "truncation"})
        if (!doc.contains(req))
            throw ConfigError(req,
                              std::string("required field '") + req + "' missing");

    RunConfig c;

    {
        const json& j = doc["dimension"];
        if (!j.is_number_integer())
            throw ConfigError("dimension", "field 'dimension' must be an integer");
        c.dimension = j.get<int>();
        if (c.dimension != 1 && c.dimension != 2)
            throw ConfigError("dimension", "field 'dimension' must be 1 or 2");
    }
    c.mass = require_number(doc["mass"], "mass");
    if (!(c.mass > 0.0)) throw ConfigError("mass", "field 'mass' must be > 0");
    c.omega = require_number(doc["omega"], "omega");
    if (!(c.omega > 0.0)) throw ConfigError("omega", "field 'omega' must be > 0");
    {
        const json& j = doc["truncation"];
        if (!j.is_number_integer() || j.get<long long>() < 1)
            throw ConfigError("truncation",
                              "field 'truncation' must be an integer >= 1");
        c.truncation = j.get<std::size_t>();
    }

    if (doc.contains("eta")) c.eta = require_number(doc["eta"], "eta");
    if (doc.contains("lambda")) c.lambda = require_number(doc["lambda"], "lambda");
    if (doc.contains("phi")) {
        const json& j = doc["phi"];
        if (!j.is_array() || j.size() != 3)
            throw ConfigError("phi", "field 'phi' must be an array of 3 numbers");
        for (int k = 0; k < 3; ++k) c.phi[k] = require_number(j[k], "phi");
    }
    if (doc.contains("B0")) c.b0 = require_number(doc["B0"], "B0");
    if (doc.contains("E0")) {
        const json& j = doc["E0"];
        if (!j.is_array() || j.size() != 2)
            throw ConfigError("E0", "field 'E0' must be an array of 2 numbers");
        for (int k = 0; k < 2; ++k) c.e0[k] = require_number(j[k], "E0");
    }
    if (doc.contains("kappa")) c.kappa = require_number(doc["kappa"], "kappa");
    if (doc.contains("e_charge"))
        c.e_charge = require_number(doc["e_charge"], "e_charge");
    if (doc.contains("q_charge"))
        c.q_charge = require_number(doc["q_charge"], "q_charge");
    if (doc.contains("extra_sign")) {
        c.extra_sign = require_number(doc["extra_sign"], "extra_sign");
        if (c.extra_sign != 1.0 && c.extra_sign != -1.0)
            throw ConfigError("extra_sign",
                              "field 'extra_sign' must be +1 or -1");
    }
    if (doc.contains("kappa_q")) {
        c.kappa_q = require_number(doc["kappa_q"], "kappa_q");
        if (c.kappa_q == 0.0)
            throw ConfigError("kappa_q", "field 'kappa_q' must be nonzero");
    }
    if (doc.contains("guard_fraction")) {
        c.guard_fraction = require_number(doc["guard_fraction"], "guard_fraction");
        if (!(c.guard_fraction > 0.0) || c.guard_fraction > 1.0)
            throw ConfigError("guard_fraction",
                              "field 'guard_fraction' must be in (0,1]");
    }
    if (doc.contains("tolerance")) {
        c.tolerance = require_number(doc["tolerance"], "tolerance");
        if (!(c.tolerance > 0.0))
            throw ConfigError("tolerance", "field 'tolerance' must be > 0");
    }

    // Dense size cap, enforced at parse time so the CLI reports it as an
    // input error.
    const std::size_t fock =
        c.dimension == 1 ? c.truncation : c.truncation * c.truncation;
    if (fock * 8 > kMaxHilbertDim)
        throw ConfigError("truncation",
                          "field 'truncation' exceeds the size cap N^d*8 <= " +
                              std::to_string(kMaxHilbertDim));
    return c;
}

std::string config_to_json(const RunConfig& c) {
    std::string out = "{\n";
    out += "  \"dimension\": " + std::to_string(c.dimension) + ",\n";
    out += "  \"mass\": " + format_double(c.mass) + ",\n";
    out += "  \"omega\": " + format_double(c.omega) + ",\n";
    out += "  \"eta\": " + format_double(c.eta) + ",\n";
    out += "  \"lambda\": " + format_double(c.lambda) + ",\n";
    out += "  \"phi\": [" + format_double(c.phi[0]) + ", " +
           format_double(c.phi[1]) + ", " + format_double(c.phi[2]) + "],\n";
    out += "  \"B0\": " + format_double(c.b0) + ",\n";
    out += "  \"E0\": [" + format_double(c.e0[0]) + ", " +
           format_double(c.e0[1]) + "],\n";
    out += "  \"kappa\": " + format_double(c.kappa) + ",\n";
    out += "  \"e_charge\": " + format_double(c.e_charge) + ",\n";
    out += "  \"q_charge\": " + format_double(c.q_charge) + ",\n";
    out += "  \"truncation\": " + std::to_string(c.truncation) + ",\n";
    out += "  \"extra_sign\": " + format_double(c.extra_sign) + ",\n";
    out += "  \"kappa_q\": " + format_double(c.kappa_q) + ",\n";
    out += "  \"guard_fraction\": " + format_double(c.guard_fraction) + ",\n";
    out += "  \"tolerance\": " + format_double(c.tolerance) + "\n";
    out += "}\n";
    return out;
}

void apply_tolerance_override(RunConfig& c, const std::string& value) {
    char* end = nullptr;
    const double tol = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !(tol > 0.0) ||
        !std::isfinite(tol))
        throw ConfigError("NADOSC_TOL",
                          "NADOSC_TOL must be a positive finite number");
    c.tolerance = tol;
}

GaugeParams to_gauge_params(const RunConfig& c) {
    GaugeParams p;
    p.b0 = c.b0;
    p.e0 = c.e0;
    p.eta = c.eta;
    p.lambda = c.lambda;
    p.phi = c.phi;
    p.kappa = c.kappa;
    p.e_charge = c.e_charge;
    p.q_charge = c.q_charge;
    p.mass = c.mass;
    p.omega = c.omega;
    return p;
}

OscParams to_osc_params(const RunConfig& c) {
    OscParams p;
    p.dimension = c.dimension;
    p.mass = c.mass;
    p.omega = c.omega;
    p.eta = c.eta;
    p.phi = c.phi;
    p.extra_sign = c.extra_sign;
    p.truncation = c.truncation;
    p.guard_fraction = c.guard_fraction;
    p.tolerance = c.tolerance;
    return p;
}

}  // namespace nadosc
