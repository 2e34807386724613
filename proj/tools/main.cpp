// struvebound: reproduce the relative-error tables, sweep the bound catalog,
// profile tightness and evaluate single quantities.
//
// Data goes to stdout, the human summary to stderr.
// Exit status: 0 clean, 1 violation / table deviation / numerical failure, 2 usage.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "struvebound/bounds.hpp"
#include "struvebound/errors.hpp"
#include "struvebound/harness.hpp"
#include "struvebound/integral.hpp"
#include "struvebound/specfun.hpp"

namespace sb = struvebound;
namespace hn = struvebound::harness;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        try {
            out.push_back(std::stod(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw UsageError("not a number: '" + item + "'");
    }
    if (out.empty()) throw UsageError("empty list: '" + text + "'");
    return out;
}

sb::bounds::BoundId parse_id(const std::string& name) {
    const auto id = sb::bounds::parse_bound_id(name);
    if (!id) throw UsageError("unknown bound id '" + name + "'");
    return *id;
}

void print_scaled(const sb::ScaledReal& v) {
    std::cout << "mantissa=" << hn::format_number(v.mantissa()) << " exponent=" << hn::format_number(v.exponent())
              << " log_abs=" << hn::format_number(v.log_abs()) << " value=" << hn::format_number(v.to_double())
              << '\n';
}

int run_tables(int which, const std::string& format) {
    const hn::Report r = hn::reproduce_table(which);
    if (format == "md") {
        hn::write_table_markdown(std::cout, r);
    } else {
        hn::write_table_csv(std::cout, r);
    }
    std::fprintf(stderr, "tables: %zu cells, %d outside %.1e, max deviation %.3e\n", r.cells.size(),
                 r.table_failures, hn::kTableTolerance, r.max_table_deviation);
    for (const auto& c : r.cells) {
        if (!c.within) {
            std::fprintf(stderr, "  table %d nu=%g beta=%g x=%g: computed %.6f printed %.4f\n", c.table, c.nu,
                         c.beta, c.x, c.metric, c.printed);
        }
    }
    return r.ok() ? 0 : kExitFailure;
}

int run_verify(const std::string& grid_file, const std::string& bound_list, unsigned threads) {
    hn::GridSpec grid;
    try {
        grid = grid_file.empty() ? hn::default_grid() : hn::load_grid(grid_file);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!bound_list.empty()) {
        grid.bound_filter.clear();
        std::stringstream ss(bound_list);
        std::string name;
        while (std::getline(ss, name, ',')) {
            if (!name.empty()) grid.bound_filter.push_back(parse_id(name));
        }
    }
    const hn::Report r = hn::verify_all(grid, threads);
    hn::write_checks_csv(std::cout, r);
    const auto& s = r.summary;
    std::fprintf(stderr, "verify: checked %d, strict %d, inconclusive %d, violated %d\n", s.checked, s.strict,
                 s.inconclusive, s.violated);
    for (const auto& row : r.checks) {
        if (row.margin.status == sb::bounds::Status::violated) {
            std::fprintf(stderr, "  VIOLATED %s nu=%g beta=%g x=%g margin=%.3e\n",
                         std::string(sb::bounds::to_string(row.id)).c_str(), row.point.nu, row.point.beta,
                         row.point.x, row.margin.signed_margin);
        }
    }
    return r.ok() ? 0 : kExitFailure;
}

int run_eval(const std::string& fn, double nu, double beta, double x, std::optional<double> x_star,
             std::optional<int> truncation) {
    namespace sf = sb::specfun;
    if (fn == "F") {
        print_scaled(sb::integral::F(nu, beta, x));
    } else if (fn == "G") {
        print_scaled(sb::integral::G(nu, beta, x));
    } else if (fn == "L" || fn == "struve_l") {
        print_scaled(sf::struve_l_wide(nu, x));
    } else if (fn == "I" || fn == "bessel_i") {
        print_scaled(sf::bessel_i_wide(nu, x));
    } else if (fn == "K" || fn == "bessel_k") {
        print_scaled(sf::bessel_k_wide(nu, x));
    } else if (fn == "gamma") {
        print_scaled(sb::ScaledReal::from_log(sf::log_gamma(x)));
    } else if (fn == "lower_gamma") {
        print_scaled(sf::lower_incomplete_gamma_wide(nu, x));
    } else if (const auto id = sb::bounds::parse_bound_id(fn)) {
        const sb::bounds::BoundOptions opts{x_star, truncation};
        const auto v = sb::bounds::eval_bound(*id, nu, beta, x, opts);
        if (v.lower) print_scaled(*v.lower);
        if (v.upper) print_scaled(*v.upper);
    } else {
        throw UsageError("unknown function '" + fn + "' (F, G, L, I, K, gamma, lower_gamma or a bound id)");
    }
    return 0;
}

int run_tightness(const std::string& bound, double nu, double beta, const std::string& xs,
                  std::optional<double> x_star, std::optional<int> truncation) {
    const auto id = parse_id(bound);
    const sb::bounds::BoundOptions opts{x_star, truncation};
    const auto profile = hn::tightness_profile(id, nu, beta, parse_list(xs), opts);
    std::cout << "x,bound_value_log,reference_value_log,ratio\n";
    for (const auto& p : profile) {
        std::cout << hn::format_number(p.x) << ',' << hn::format_number(p.bound.log_abs()) << ','
                  << hn::format_number(p.reference.log_abs()) << ',' << hn::format_number(p.ratio) << '\n';
    }
    std::fprintf(stderr, "tightness: %zu points for %s\n", profile.size(), bound.c_str());
    return 0;
}

int run_asymptotics() {
    const hn::Report r = hn::asymptotic_check();
    hn::write_asymptotics_csv(std::cout, r);
    std::fprintf(stderr, "asymptotics: %zu forms checked, %d failed\n", r.asymptotics.size(),
                 r.asymptotic_failures);
    return r.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds and tables for the integral of e^{-beta t} t^nu L_nu(t)"};
    app.require_subcommand(1);

    int which = 0;
    std::string format = "csv";
    auto* tables = app.add_subcommand("tables", "Reproduce the relative-error tables");
    tables->add_option("--which", which, "1, 2, or 0 for both")->check(CLI::IsMember({0, 1, 2}));
    tables->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}));

    std::string grid_file;
    std::string bound_list;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "Check every catalog bound over a grid");
    verify->add_option("--grid", grid_file, "key=value grid file")->check(CLI::ExistingFile);
    verify->add_option("--bounds", bound_list, "comma-separated bound ids");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");

    std::string fn;
    double nu = 0.0;
    double beta = 0.0;
    double x = 0.0;
    std::optional<double> x_star;
    std::optional<int> truncation;
    auto* eval = app.add_subcommand("eval", "Evaluate one quantity");
    eval->add_option("--fn", fn, "F, G, L, I, K, gamma, lower_gamma or a bound id")->required();
    eval->add_option("--nu", nu, "order (the a parameter for lower_gamma)");
    eval->add_option("--beta", beta);
    eval->add_option("--x", x)->required();
    eval->add_option("--x-star", x_star, "UB-3.8 threshold");
    eval->add_option("--truncation", truncation, "LB-2.3 term count");

    std::string bound;
    std::string xs;
    auto* tight = app.add_subcommand("tightness", "Bound/reference ratio along a list of x");
    tight->add_option("--bound", bound)->required();
    tight->add_option("--nu", nu)->required();
    tight->add_option("--beta", beta);
    tight->add_option("--xs", xs, "comma-separated x values")->required();
    tight->add_option("--x-star", x_star, "UB-3.8 threshold");
    tight->add_option("--truncation", truncation, "LB-2.3 term count");

    auto* asym = app.add_subcommand("asymptotics", "Check the limiting forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*tables) return run_tables(which, format);
        if (*verify) return run_verify(grid_file, bound_list, threads);
        if (*eval) return run_eval(fn, nu, beta, x, x_star, truncation);
        if (*tight) return run_tightness(bound, nu, beta, xs, x_star, truncation);
        if (*asym) return run_asymptotics();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const sb::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
