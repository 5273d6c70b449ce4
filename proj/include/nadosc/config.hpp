// Run configuration: JSON parsing with strict validation, canonical
// serialization, and conversion to the per-module parameter structs.

#ifndef NADOSC_CONFIG_HPP
#define NADOSC_CONFIG_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "nadosc/hamiltonian.hpp"
#include "nadosc/nonabelian_fields.hpp"

namespace nadosc {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

struct RunConfig {
    int dimension = 1;
    double mass = 1.0;
    double omega = 1.0;
    double eta = 0.0;
    double lambda = 0.0;
    std::array<double, 3> phi{0.0, 0.0, 0.0};
    double b0 = 0.0;
    std::array<double, 2> e0{0.0, 0.0};
    double kappa = 1.0;
    double e_charge = 1.0;
    double q_charge = 1.0;
    std::size_t truncation = 1;
    double extra_sign = -1.0;
    double kappa_q = 1.0;
    double guard_fraction = 0.5;
    double tolerance = 1e-10;

    bool operator==(const RunConfig&) const = default;
};

// Strict parse: unknown keys rejected, required fields (dimension, mass,
// omega, truncation) must be present, constraint violations raise
// ConfigError naming the offending field.
RunConfig parse_config(const std::string& json_text);

// Canonical serialization: fixed key order, floats with 17 significant
// digits; parse_config(config_to_json(c)) == c.
std::string config_to_json(const RunConfig& c);

// Overrides tolerance from a NADOSC_TOL-style string; rejects garbage.
void apply_tolerance_override(RunConfig& c, const std::string& value);

GaugeParams to_gauge_params(const RunConfig& c);
OscParams to_osc_params(const RunConfig& c);

}  // namespace nadosc

#endif  // NADOSC_CONFIG_HPP
