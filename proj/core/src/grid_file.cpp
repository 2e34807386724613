#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "struvebound/harness.hpp"

namespace struvebound::harness {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<double> parse_numbers(const std::string& key, const std::string& value, int line) {
    std::vector<double> out;
    for (const auto& item : split_list(value)) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || !std::isfinite(v)) {
            throw std::invalid_argument("grid line " + std::to_string(line) + ": bad number '" + item + "' for " + key);
        }
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("grid line " + std::to_string(line) + ": empty list for " + key);
    return out;
}

}  // namespace

GridSpec default_grid() {
    GridSpec g;
    g.nu_values = {-0.49, -0.25, -0.1, 0.0, 0.25, 0.5, 1.0, 1.5, 2.5, 5.0, 10.0};
    g.beta_values = {0.1, 0.25, 0.5, 0.75, 0.9};
    constexpr int n = 25;
    const double lo = std::log(0.05);
    const double hi = std::log(100.0);
    for (int i = 0; i < n; ++i) {
        g.x_values.push_back(std::exp(lo + (hi - lo) * i / (n - 1)));
    }
    g.x_values.front() = 0.05;
    g.x_values.back() = 100.0;
    return g;
}

GridSpec parse_grid(std::istream& in) {
    GridSpec g = default_grid();
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        raw = trim(raw);
        if (raw.empty()) continue;
        const auto eq = raw.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("grid line " + std::to_string(line) + ": expected key=value");
        }
        const std::string key = trim(raw.substr(0, eq));
        const std::string value = raw.substr(eq + 1);
        if (key == "nu") {
            g.nu_values = parse_numbers(key, value, line);
        } else if (key == "beta") {
            g.beta_values = parse_numbers(key, value, line);
        } else if (key == "x") {
            g.x_values = parse_numbers(key, value, line);
        } else if (key == "bounds") {
            g.bound_filter.clear();
            for (const auto& name : split_list(value)) {
                const auto id = bounds::parse_bound_id(name);
                if (!id) throw std::invalid_argument("grid line " + std::to_string(line) + ": unknown bound " + name);
                g.bound_filter.push_back(*id);
            }
        } else {
            throw std::invalid_argument("grid line " + std::to_string(line) + ": unknown key '" + key + "'");
        }
    }
    return g;
}

GridSpec load_grid(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open grid file " + path.string());
    return parse_grid(in);
}

}  // namespace struvebound::harness
