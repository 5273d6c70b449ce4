#include "nadosc/report.hpp"

#include <cstdio>

namespace nadosc {

void CheckReport::add_check(std::string name, double value, double threshold,
                            std::string note) {
    CheckRow row;
    row.name = std::move(name);
    row.value = value;
    row.threshold = threshold;
    row.pass = value <= threshold;
    row.kind = RowKind::Check;
    row.cmp = RowCmp::LessEq;
    row.note = std::move(note);
    rows_.push_back(std::move(row));
}

void CheckReport::add_check_exceeds(std::string name, double value,
                                    double threshold, std::string note) {
    CheckRow row;
    row.name = std::move(name);
    row.value = value;
    row.threshold = threshold;
    row.pass = value > threshold;
    row.kind = RowKind::Check;
    row.cmp = RowCmp::Greater;
    row.note = std::move(note);
    rows_.push_back(std::move(row));
}

void CheckReport::add_finding(std::string name, double value,
                              std::string note) {
    CheckRow row;
    row.name = std::move(name);
    row.value = value;
    row.kind = RowKind::Finding;
    row.note = std::move(note);
    rows_.push_back(std::move(row));
}

void CheckReport::append(const CheckReport& other) {
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

bool CheckReport::all_passed() const noexcept {
    for (const CheckRow& row : rows_)
        if (row.kind == RowKind::Check && !row.pass) return false;
    return true;
}

std::size_t CheckReport::check_count() const noexcept {
    std::size_t n = 0;
    for (const CheckRow& row : rows_)
        if (row.kind == RowKind::Check) ++n;
    return n;
}

std::size_t CheckReport::failure_count() const noexcept {
    std::size_t n = 0;
    for (const CheckRow& row : rows_)
        if (row.kind == RowKind::Check && !row.pass) ++n;
    return n;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

std::string report_to_text(const CheckReport& report) {
    std::string out;
    for (const CheckRow& row : report.rows()) {
        if (row.kind == RowKind::Check) {
            out += row.pass ? "CHECK   pass  " : "CHECK   FAIL  ";
            out += row.name;
            out += "  value=";
            out += format_double(row.value);
            out += row.cmp == RowCmp::LessEq ? "  max_allowed=" : "  min_required=";
            out += format_double(row.threshold);
        } else {
            out += "FINDING       ";
            out += row.name;
            out += "  value=";
            out += format_double(row.value);
        }
        if (!row.note.empty()) {
            out += "  # ";
            out += row.note;
        }
        out += '\n';
    }
    out += "summary: ";
    out += std::to_string(report.check_count() - report.failure_count());
    out += "/";
    out += std::to_string(report.check_count());
    out += " checks passed\n";
    return out;
}

}  // namespace nadosc
