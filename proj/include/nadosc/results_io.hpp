// Deterministic serialization of spectra and check reports. Identical
// inputs produce byte-identical output: fixed key order, floats rendered
// with 17 significant digits.

#ifndef NADOSC_RESULTS_IO_HPP
#define NADOSC_RESULTS_IO_HPP

#include <string>

#include "nadosc/hamiltonian.hpp"
#include "nadosc/report.hpp"

namespace nadosc {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string spectrum_to_json(const SpectrumResult& r);

// Columns: index,eigenvalue,converged (converged rendered as 0/1; 0 when no
// convergence check was requested).
std::string spectrum_to_csv(const SpectrumResult& r);

// Writes to the path, or to stdout when path is "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace nadosc

#endif  // NADOSC_RESULTS_IO_HPP
