#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "struvebound/bounds.hpp"

/// Table reproduction, catalog sweeps, tightness profiles and asymptotic
/// checks, plus their CSV / Markdown serialization.
namespace struvebound::harness {

/// Printed tables carry 4 decimals.
inline constexpr double kTableTolerance = 1.5e-4;

struct Point {
    double nu = 0.0;
    /// NaN for bounds that do not involve beta.
    double beta = 0.0;
    double x = 0.0;
};

struct CheckRow {
    bounds::BoundId id;
    Point point;
    bounds::Margin margin;
};

struct TableRow {
    int table = 1;
    double nu = 0.0;
    double beta = 0.0;
    double x = 0.0;
    /// 1 - L5/F for table 1, U/F - 1 for table 2.
    double metric = 0.0;
    double printed = 0.0;
    double deviation = 0.0;
    bool within = false;
};

struct AsymptoticRow {
    std::string form;
    double nu = 0.0;
    double beta = 0.0;
    double x = 0.0;
    double observed = 0.0;
    /// Limit, with the first-order correction where one is known.
    double expected = 0.0;
    double tolerance = 0.0;
    /// observed - 1, i.e. the deviation from the bare limit.
    double leading_deviation = 0.0;
    bool pass = false;
};

struct Summary {
    int checked = 0;
    int strict = 0;
    int inconclusive = 0;
    int violated = 0;
};

struct Report {
    std::vector<CheckRow> checks;
    std::vector<TableRow> cells;
    std::vector<AsymptoticRow> asymptotics;
    Summary summary;
    double max_table_deviation = 0.0;
    int table_failures = 0;
    int asymptotic_failures = 0;

    /// No violations, no table cell outside tolerance, no failed asymptotic row.
    bool ok() const { return summary.violated == 0 && table_failures == 0 && asymptotic_failures == 0; }
};

struct GridSpec {
    std::vector<double> nu_values;
    std::vector<double> beta_values;
    std::vector<double> x_values;
    /// Empty means every catalog entry.
    std::vector<bounds::BoundId> bound_filter;
};

/// nu in {-0.49, -0.25, -0.1, 0, 0.25, 0.5, 1, 1.5, 2.5, 5, 10},
/// beta in {0.1, 0.25, 0.5, 0.75, 0.9}, 25 log-spaced x in [0.05, 100].
GridSpec default_grid();

/// Lines of `nu=`, `beta=`, `x=`, `bounds=` with comma-separated values; `#`
/// starts a comment. Keys left out keep the default grid's values.
/// Throws std::invalid_argument on malformed input.
GridSpec parse_grid(std::istream& in);
GridSpec load_grid(const std::filesystem::path& path);

struct PrintedCell {
    int table = 1;
    double nu = 0.0;
    double beta = 0.0;
    double x = 0.0;
    double value = 0.0;
};

/// The 168 printed cells, in fixture order.
const std::vector<PrintedCell>& printed_cells();

double table_metric(int table, double nu, double beta, double x);

/// which = 1, 2, or 0 for both.
Report reproduce_table(int which);

/// check() at every in-validity (id, point). Rows come back sorted by
/// (id, nu, beta, x) whatever the thread count; threads = 0 picks the hardware count.
/// A failed evaluation throws std::runtime_error naming the point.
Report verify_all(const GridSpec& grid, unsigned threads = 0);

struct TightnessPoint {
    double x = 0.0;
    ScaledReal bound;
    ScaledReal reference;
    /// bound / reference.
    double ratio = 0.0;
};

std::vector<TightnessPoint> tightness_profile(bounds::BoundId id, double nu, double beta,
                                              const std::vector<double>& xs,
                                              const bounds::BoundOptions& opts = {});

/// Large- and small-x limiting forms of F, e^{-beta x} x^nu L_{nu+n}, L_nu,
/// K_nu and x K_{nu+1} L_nu at fixed designated points.
Report asymptotic_check();

/// %.17g, with "nan" for NaN.
std::string format_number(double v);

void write_checks_csv(std::ostream& out, const Report& report);
void write_table_csv(std::ostream& out, const Report& report);
/// Rows (nu, beta), columns x; one block per table.
void write_table_markdown(std::ostream& out, const Report& report);
void write_asymptotics_csv(std::ostream& out, const Report& report);

}  // namespace struvebound::harness
