#include "fracstokes/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fracstokes::csv {

std::string cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string to_string(const Table& table) {
    std::string out;
    out.reserve(64 * (table.rows.size() + 2));
    out += "# ";
    out += table.config_stamp;
    out += '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

void write_file(const Table& table, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("csv: cannot open output file: " + path);
    }
    f << to_string(table);
    if (!f.good()) {
        throw std::runtime_error("csv: write failed: " + path);
    }
}

}  // namespace fracstokes::csv
