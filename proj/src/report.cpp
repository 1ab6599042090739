#include "tjoin/report.hpp"

#include <cstdio>
#include <limits>
#include <stdexcept>

namespace tjoin {

double BoundReportRow::min_ub() const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ub : {harmonic_ub, tsp_ub, ear_ub})
        if (ub && *ub < best) best = *ub;
    if (best == std::numeric_limits<double>::infinity())
        throw std::logic_error("bound row has no upper bound");
    return best;
}

double BoundReportRow::ratio() const { return min_ub() / lower; }

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& body, TableFormat format) {
    std::string out;
    auto emit_row = [&](const std::vector<std::string>& cells) {
        if (format == TableFormat::Markdown) {
            out += '|';
            for (const std::string& c : cells) {
                out += ' ';
                out += c;
                out += " |";
            }
        } else {
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i) out += ',';
                out += cells[i];
            }
        }
        out += '\n';
    };
    emit_row(header);
    if (format == TableFormat::Markdown) {
        out += '|';
        for (size_t i = 0; i < header.size(); ++i) out += "---|";
        out += '\n';
    }
    for (const auto& row : body) emit_row(row);
    return out;
}

}  // namespace

std::string render_bounds_table(const std::vector<BoundReportRow>& rows, TableFormat format) {
    std::vector<std::vector<std::string>> body;
    for (const BoundReportRow& row : rows)
        body.push_back({std::to_string(row.size), format_number(row.lower),
                        format_number(row.min_ub()), format_number(row.ratio())});
    return render_table({"n", "LB", "UB", "ratio"}, body, format);
}

std::string render_mu2k_table(const std::vector<BoundReportRow>& rows, TableFormat format) {
    std::vector<std::vector<std::string>> body;
    for (const BoundReportRow& row : rows)
        body.push_back({std::to_string(row.size), format_number(row.lower),
                        row.opt_prefix ? format_number(*row.opt_prefix) : std::string(),
                        row.harmonic_ub ? format_number(*row.harmonic_ub) : std::string(),
                        row.tsp_ub ? format_number(*row.tsp_ub) : std::string(),
                        format_number(row.ratio())});
    return render_table({"2k", "mwm", "opt2k", "harmonicUB", "tspUB", "ratio"}, body, format);
}

}  // namespace tjoin
