#include "nadosc/results_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace nadosc {

std::string spectrum_to_json(const SpectrumResult& r) {
    const OscParams& p = r.params;
    std::string out = "{\n";
    out += "  \"params\": {\n";
    out += "    \"dimension\": " + std::to_string(p.dimension) + ",\n";
    out += "    \"mass\": " + format_double(p.mass) + ",\n";
    out += "    \"omega\": " + format_double(p.omega) + ",\n";
    out += "    \"eta\": " + format_double(p.eta) + ",\n";
    out += "    \"phi\": [" + format_double(p.phi[0]) + ", " +
           format_double(p.phi[1]) + ", " + format_double(p.phi[2]) + "],\n";
    out += "    \"extra_sign\": " + format_double(p.extra_sign) + ",\n";
    out += "    \"truncation\": " + std::to_string(p.truncation) + ",\n";
    out += "    \"guard_fraction\": " + format_double(p.guard_fraction) + ",\n";
    out += "    \"tolerance\": " + format_double(p.tolerance) + ",\n";
    out += "    \"kappa_q\": " + format_double(r.kappa_q) + "\n";
    out += "  },\n";
    out += "  \"matrix_dimension\": " + std::to_string(r.eigenvalues.size()) +
           ",\n";
    out += "  \"hermiticity_residual\": " +
           format_double(r.hermiticity_residual) + ",\n";
    out += "  \"solver_residual\": " + format_double(r.solver_residual) + ",\n";
    out += "  \"converged_count\": " + std::to_string(r.converged_count) + ",\n";
    out += "  \"eigenvalues\": [";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
        if (i) out += ", ";
        out += format_double(r.eigenvalues[i]);
    }
    out += "]";
    if (!r.converged.empty()) {
        out += ",\n  \"converged\": [";
        for (std::size_t i = 0; i < r.converged.size(); ++i) {
            if (i) out += ", ";
            out += r.converged[i] ? "true" : "false";
        }
        out += "]";
    }
    out += "\n}\n";
    return out;
}

std::string spectrum_to_csv(const SpectrumResult& r) {
    std::string out = "index,eigenvalue,converged\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(r.eigenvalues[i]);
        out += ',';
        out += (i < r.converged.size() && r.converged[i]) ? '1' : '0';
        out += '\n';
    }
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to stdout");
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << content;
    f.flush();
    if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace nadosc
