#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "struvebound/scaled_real.hpp"

namespace testsupport {

inline std::string data_path(const std::string& name) { return std::string(STRUVEBOUND_TEST_DATA_DIR) + "/" + name; }

struct GoldenRow {
    std::string function;
    double nu = 0.0;
    double beta = 0.0;  // integrals.csv only
    double x = 0.0;
    struvebound::ScaledReal value;
};

// golden.csv has no beta column; integrals.csv does.
inline std::vector<GoldenRow> load_golden(const std::string& name, bool has_beta) {
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing golden file " + name);
    std::vector<GoldenRow> rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::vector<std::string> f;
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        GoldenRow r;
        std::size_t i = 0;
        r.function = f.at(i++);
        r.nu = std::stod(f.at(i++));
        if (has_beta) r.beta = std::stod(f.at(i++));
        r.x = std::stod(f.at(i++));
        const double m = std::stod(f.at(i++));
        r.value = struvebound::ScaledReal(m, std::stod(f.at(i++)));
        rows.push_back(r);
    }
    return rows;
}

inline double rel_err(const struvebound::ScaledReal& got, const struvebound::ScaledReal& want) {
    return std::fabs(ratio(got, want) - 1.0);
}

inline double rel_err(double got, double want) { return std::fabs(got / want - 1.0); }

inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1)));
    return xs;
}

}  // namespace testsupport
