#ifndef FRACSTOKES_CSV_HPP
#define FRACSTOKES_CSV_HPP

#include <string>
#include <vector>

/// Tiny deterministic CSV writer. Every table carries a '#'-prefixed
/// config stamp line (full run configuration) followed by a header row;
/// numbers are formatted with a fixed "%.12g" so identical configs always
/// produce byte-identical files.

namespace fracstokes::csv {

struct Table {
    std::string name;          // file stem, e.g. "fig2a"
    std::string config_stamp;  // stamped as "# <config_stamp>"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Fixed-format numeric cell ("%.12g").
std::string cell(double v);

std::string to_string(const Table& table);

void write_file(const Table& table, const std::string& path);

}  // namespace fracstokes::csv

#endif  // FRACSTOKES_CSV_HPP
