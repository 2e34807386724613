#include "struvebound/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <thread>
#include <tuple>

#include "struvebound/integral.hpp"
#include "struvebound/specfun.hpp"

namespace struvebound::harness {

namespace detail {
extern const std::string_view kTableFixture;
}

namespace {

using bounds::BoundId;

constexpr double kLogSqrtPi = 0.57236494292470008707;

std::vector<PrintedCell> parse_fixture(std::string_view text) {
    std::vector<PrintedCell> cells;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        PrintedCell c;
        if (fields >> c.table >> c.nu >> c.beta >> c.x >> c.value) cells.push_back(c);
    }
    return cells;
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void tally(Summary& s, bounds::Status status) {
    ++s.checked;
    switch (status) {
        case bounds::Status::strict: ++s.strict; break;
        case bounds::Status::inconclusive: ++s.inconclusive; break;
        case bounds::Status::violated: ++s.violated; break;
    }
}

std::string describe(BoundId id, const Point& p) {
    return std::string(bounds::to_string(id)) + " at nu=" + format_number(p.nu) + " beta=" + format_number(p.beta) +
           " x=" + format_number(p.x);
}

AsymptoticRow make_row(std::string form, double nu, double beta, double x, double observed, double expected,
                       double tolerance) {
    AsymptoticRow r;
    r.form = std::move(form);
    r.nu = nu;
    r.beta = beta;
    r.x = x;
    r.observed = observed;
    r.expected = expected;
    r.tolerance = tolerance;
    r.leading_deviation = observed - 1.0;
    r.pass = std::fabs(observed - expected) <= tolerance;
    return r;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const std::vector<PrintedCell>& printed_cells() {
    static const std::vector<PrintedCell> cells = parse_fixture(detail::kTableFixture);
    return cells;
}

double table_metric(int table, double nu, double beta, double x) {
    const ScaledReal f = integral::F(nu, beta, x);
    if (table == 1) {
        bounds::BoundOptions opts;
        opts.truncation = 5;
        const ScaledReal l5 = bounds::eval_bound(BoundId::LB_2_3, nu, beta, x, opts).value();
        return ratio(f - l5, f);
    }
    if (table == 2) {
        const ScaledReal u = bounds::eval_bound(BoundId::UB_GAU2, nu, beta, x).value();
        return ratio(u - f, f);
    }
    throw std::invalid_argument("table must be 1 or 2");
}

Report reproduce_table(int which) {
    if (which < 0 || which > 2) throw std::invalid_argument("table must be 1, 2 or 0 for both");
    Report r;
    for (const auto& c : printed_cells()) {
        if (which != 0 && c.table != which) continue;
        TableRow row;
        row.table = c.table;
        row.nu = c.nu;
        row.beta = c.beta;
        row.x = c.x;
        row.printed = c.value;
        row.metric = table_metric(c.table, c.nu, c.beta, c.x);
        row.deviation = std::fabs(row.metric - c.value);
        row.within = row.deviation <= kTableTolerance;
        r.max_table_deviation = std::max(r.max_table_deviation, row.deviation);
        if (!row.within) ++r.table_failures;
        r.cells.push_back(row);
    }
    return r;
}

Report verify_all(const GridSpec& grid, unsigned threads) {
    if (grid.nu_values.empty() || grid.beta_values.empty() || grid.x_values.empty()) {
        throw std::invalid_argument("verify_all: grid lists must be nonempty");
    }
    const auto nus = sorted_unique(grid.nu_values);
    const auto betas = sorted_unique(grid.beta_values);
    const auto xs = sorted_unique(grid.x_values);
    std::vector<BoundId> ids = grid.bound_filter;
    if (ids.empty()) {
        for (const auto& s : bounds::list_bounds()) ids.push_back(s.id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    // enumerated in (id, nu, beta, x) order; results are written by index
    Report r;
    for (BoundId id : ids) {
        const bool uses_beta = bounds::spec(id).uses_beta;
        const std::vector<double> beta_list =
            uses_beta ? betas : std::vector<double>{std::numeric_limits<double>::quiet_NaN()};
        for (double nu : nus) {
            for (double beta : beta_list) {
                for (double x : xs) {
                    if (!bounds::is_valid(id, nu, beta, x)) continue;
                    r.checks.push_back({id, {nu, beta, x}, {}});
                }
            }
        }
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, r.checks.size()));
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::string failure;
    auto worker = [&] {
        for (std::size_t i = next++; i < r.checks.size(); i = next++) {
            auto& row = r.checks[i];
            try {
                row.margin = bounds::check(row.id, row.point.nu, row.point.beta, row.point.x);
            } catch (const std::exception& e) {
                std::lock_guard lock(failure_mutex);
                if (failure.empty()) failure = describe(row.id, row.point) + ": " + e.what();
                next = r.checks.size();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (!failure.empty()) throw std::runtime_error(failure);

    for (const auto& row : r.checks) tally(r.summary, row.margin.status);
    return r;
}

std::vector<TightnessPoint> tightness_profile(BoundId id, double nu, double beta, const std::vector<double>& xs,
                                              const bounds::BoundOptions& opts) {
    std::vector<TightnessPoint> out;
    for (double x : xs) {
        TightnessPoint p;
        p.x = x;
        p.bound = bounds::eval_bound(id, nu, beta, x, opts).value();
        p.reference = bounds::reference_value(id, nu, beta, x);
        p.ratio = ratio(p.bound, p.reference);
        out.push_back(p);
    }
    return out;
}

Report asymptotic_check() {
    Report r;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto add = [&](AsymptoticRow row) {
        if (!row.pass) ++r.asymptotic_failures;
        r.asymptotics.push_back(std::move(row));
    };

    // F ~ x^{nu-1/2} e^{(1-beta)x} / (sqrt(2 pi)(1-beta)); the first-order
    // correction is not small at x = 400 once nu is a few units
    for (double nu : {0.0, 1.0, 5.0}) {
        for (double beta : {0.25, 0.5}) {
            const double x = 400.0;
            const double observed =
                integral::F(nu, beta, x)
                    .times_exp(0.5 * std::log(2.0 * std::numbers::pi) + std::log(1.0 - beta) +
                               (0.5 - nu) * std::log(x) - (1.0 - beta) * x)
                    .to_double();
            const double c1 = -((nu - 0.5) / (1.0 - beta) + (4.0 * nu * nu - 1.0) / 8.0);
            add(make_row("F-large-x", nu, beta, x, observed, 1.0 + c1 / x, 0.02));
        }
    }

    // e^{-beta x} x^nu L_{nu+n} ~ x^{nu-1/2} e^{(1-beta)x} / sqrt(2 pi); beta cancels
    for (double nu : {0.0, 1.0}) {
        for (double n : {0.0, 1.0, 3.0}) {
            const double x = 400.0;
            const double mu = nu + n;
            const double observed =
                specfun::struve_l_scaled(mu, x).times_exp(0.5 * std::log(2.0 * std::numbers::pi * x)).to_double();
            add(make_row("weighted-L-large-x n=" + format_number(n), nu, 0.5, x, observed,
                         1.0 - (4.0 * mu * mu - 1.0) / (8.0 * x), 0.01));
        }
    }

    // L_nu ~ x^{nu+1}/(sqrt(pi) 2^nu Gamma(nu+3/2)) (1 + x^2/(3(2nu+3)))
    for (double nu : {-0.5, 0.0, 1.0, 2.5, 5.0}) {
        const double x = 1e-2;
        const double observed =
            specfun::struve_l_wide(nu, x)
                .times_exp(kLogSqrtPi + nu * std::numbers::ln2 + specfun::log_gamma(nu + 1.5) - (nu + 1.0) * std::log(x))
                .to_double();
        add(make_row("L-small-x", nu, nan, x, observed, 1.0 + x * x / (3.0 * (2.0 * nu + 3.0)), 1e-4));
    }

    // e^{-x} L_nu sqrt(2 pi x) and e^{x} K_nu sqrt(2x/pi) against 1 -+ (4nu^2-1)/(8x);
    // the window is twice the next term of the expansion
    for (double nu : {0.0, 1.0, 2.5, 5.0}) {
        const double mu = 4.0 * nu * nu;
        const double second = std::fabs((mu - 1.0) * (mu - 9.0)) / 128.0;
        for (double x : {200.0, 400.0, 1000.0}) {
            const double tol = (2.0 * second + 1e-2) / (x * x);
            const double l = specfun::struve_l_scaled(nu, x).to_double() * std::sqrt(2.0 * std::numbers::pi * x);
            add(make_row("L-large-x", nu, nan, x, l, 1.0 - (mu - 1.0) / (8.0 * x), tol));
            const double k = specfun::bessel_k_scaled(nu, x).to_double() * std::sqrt(2.0 * x / std::numbers::pi);
            add(make_row("K-large-x", nu, nan, x, k, 1.0 + (mu - 1.0) / (8.0 * x), tol));
        }
    }

    // K_nu ~ 2^{nu-1} Gamma(nu) / x^nu
    for (double nu : {0.5, 1.0, 2.0, 5.0}) {
        const double x = 1e-4;
        const double observed =
            specfun::bessel_k_wide(nu, x)
                .times_exp(nu * std::log(x) - (nu - 1.0) * std::numbers::ln2 - specfun::log_gamma(nu))
                .to_double();
        add(make_row("K-small-x", nu, nan, x, observed, 1.0, 1e-3));
    }

    // x K_{nu+1} L_nu -> 1/2 + (2nu+1)/(4x)
    for (double nu : {0.0, 1.0}) {
        const double x = 500.0;
        const auto a = bounds::product_asymptote(bounds::AsymptoteKind::large_x, nu);
        const double observed =
            (specfun::bessel_k_scaled(nu + 1.0, x) * specfun::struve_l_scaled(nu, x)).to_double() * x;
        auto row = make_row("xKL-large-x", nu, nan, x, observed, a.limit + a.first_order / x, 1e-3);
        row.leading_deviation = observed - a.limit;
        add(std::move(row));
    }
    return r;
}

void write_checks_csv(std::ostream& out, const Report& report) {
    out << "bound_id,nu,beta,x,bound_value_log,reference_value_log,rel_margin,status\n";
    for (const auto& row : report.checks) {
        out << bounds::to_string(row.id) << ',' << format_number(row.point.nu) << ','
            << format_number(row.point.beta) << ',' << format_number(row.point.x) << ','
            << format_number(row.margin.bound_value.log_abs()) << ','
            << format_number(row.margin.reference_value.log_abs()) << ',' << format_number(row.margin.signed_margin)
            << ',' << bounds::to_string(row.margin.status) << '\n';
    }
}

void write_table_csv(std::ostream& out, const Report& report) {
    out << "table,nu,beta,x,metric,printed,deviation,status\n";
    for (const auto& c : report.cells) {
        out << c.table << ',' << format_number(c.nu) << ',' << format_number(c.beta) << ',' << format_number(c.x)
            << ',' << format_number(c.metric) << ',' << format_number(c.printed) << ','
            << format_number(c.deviation) << ',' << (c.within ? "ok" : "deviation") << '\n';
    }
}

void write_table_markdown(std::ostream& out, const Report& report) {
    // rows keyed by (table, beta, nu) in first-appearance order
    std::vector<std::pair<int, std::pair<double, double>>> rows;
    std::map<int, std::vector<double>> columns;
    std::map<std::tuple<int, double, double, double>, const TableRow*> cell;
    for (const auto& c : report.cells) {
        const auto key = std::make_pair(c.table, std::make_pair(c.nu, c.beta));
        if (std::find(rows.begin(), rows.end(), key) == rows.end()) rows.push_back(key);
        auto& cols = columns[c.table];
        if (std::find(cols.begin(), cols.end(), c.x) == cols.end()) cols.push_back(c.x);
        cell[{c.table, c.nu, c.beta, c.x}] = &c;
    }
    char buf[32];
    for (const auto& [table, xs] : columns) {
        out << "Table " << table << (table == 1 ? ": 1 - L5/F" : ": U/F - 1") << "\n\n";
        out << "| nu | beta |";
        for (double x : xs) out << " x=" << x << " |";
        out << "\n|---|---|";
        for (std::size_t i = 0; i < xs.size(); ++i) out << "---|";
        out << '\n';
        for (const auto& [t, key] : rows) {
            if (t != table) continue;
            out << "| " << key.first << " | " << key.second << " |";
            for (double x : xs) {
                const auto it = cell.find({table, key.first, key.second, x});
                if (it == cell.end()) {
                    out << "  |";
                    continue;
                }
                std::snprintf(buf, sizeof buf, " %.4f%s |", it->second->metric, it->second->within ? "" : " (!)");
                out << buf;
            }
            out << '\n';
        }
        out << '\n';
    }
}

void write_asymptotics_csv(std::ostream& out, const Report& report) {
    out << "form,nu,beta,x,observed,expected,tolerance,leading_deviation,status\n";
    for (const auto& a : report.asymptotics) {
        out << a.form << ',' << format_number(a.nu) << ',' << format_number(a.beta) << ',' << format_number(a.x)
            << ',' << format_number(a.observed) << ',' << format_number(a.expected) << ','
            << format_number(a.tolerance) << ',' << format_number(a.leading_deviation) << ','
            << (a.pass ? "pass" : "fail") << '\n';
    }
}

}  // namespace struvebound::harness
