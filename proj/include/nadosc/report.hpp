// Uniform result rows for all verify-style operations. CHECK rows carry a
// pass/fail verdict against a pinned threshold; FINDING rows report measured
// discrepancies without affecting the overall verdict.

#ifndef NADOSC_REPORT_HPP
#define NADOSC_REPORT_HPP

#include <string>
#include <vector>

namespace nadosc {

enum class RowKind { Check, Finding };

// How a CHECK compares its value to the threshold.
enum class RowCmp { LessEq, Greater };

struct CheckRow {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = true;
    RowKind kind = RowKind::Check;
    RowCmp cmp = RowCmp::LessEq;
    std::string note;
};

class CheckReport {
public:
    void add_check(std::string name, double value, double threshold,
                   std::string note = {});
    // A lower-bound check: passes when value exceeds the threshold.
    void add_check_exceeds(std::string name, double value, double threshold,
                           std::string note = {});
    void add_finding(std::string name, double value, std::string note = {});
    void append(const CheckReport& other);

    const std::vector<CheckRow>& rows() const noexcept { return rows_; }
    bool all_passed() const noexcept;
    std::size_t check_count() const noexcept;
    std::size_t failure_count() const noexcept;

private:
    std::vector<CheckRow> rows_;
};

// Deterministic plain-text rendering, one row per line.
std::string report_to_text(const CheckReport& report);

// %.17g rendering shared by every serializer in the project.
std::string format_double(double x);

}  // namespace nadosc

#endif  // NADOSC_REPORT_HPP
