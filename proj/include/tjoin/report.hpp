#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tjoin/common.hpp"

namespace tjoin {

// One table row: a size column (n or 2k), a lower bound, and the upper
// bounds that were computed for it.
struct BoundReportRow {
    int size = 0;
    double lower = 0.0;
    std::optional<double> opt_prefix;   // opt_2k column of the mu2k table
    std::optional<double> harmonic_ub;
    std::optional<double> tsp_ub;
    std::optional<double> ear_ub;

    double min_ub() const;           // min over present upper bounds
    double ratio() const;            // min_ub / lower
};

enum class TableFormat { Csv, Markdown };

// Stable short decimal rendering used for all table output.
std::string format_number(double v);

// Header n,LB,UB,ratio.
std::string render_bounds_table(const std::vector<BoundReportRow>& rows, TableFormat format);

// Header 2k,mwm,opt2k,harmonicUB,tspUB,ratio; absent tspUB prints empty.
std::string render_mu2k_table(const std::vector<BoundReportRow>& rows, TableFormat format);

}  // namespace tjoin
