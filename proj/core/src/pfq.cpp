#include <cmath>
#include <string>

#include "struvebound/errors.hpp"
#include "struvebound/specfun.hpp"

namespace struvebound::specfun {

namespace {

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

double term_ratio(std::span<const double> upper, std::span<const double> lower, double x, int k) {
    double r = x / (k + 1.0);
    for (double a : upper) r *= a + k;
    for (double b : lower) r /= b + k;
    return r;
}

}  // namespace

SeriesResult pfq(std::span<const double> upper, std::span<const double> lower, double x,
                 double tolerance) {
    const std::size_t p = upper.size();
    const std::size_t q = lower.size();
    if (p > q + 1) {
        throw DomainError("pfq: p > q + 1 diverges for every x != 0");
    }
    for (double b : lower) {
        if (is_nonpositive_integer(b)) {
            throw DomainError("pfq: lower parameter " + std::to_string(b) + " is a nonpositive integer");
        }
    }
    if (p == q + 1 && !(std::fabs(x) < 1.0)) {
        throw DomainError("pfq: p = q + 1 requires |x| < 1");
    }
    if (x == 0.0) {
        return {ScaledReal::from_double(1.0), 1, 0.0};
    }

    constexpr double kRescale = 1e13;  // ~e^30
    double term = 1.0;
    double sum = 1.0;
    double exponent = 0.0;
    double prev_ratio = term_ratio(upper, lower, x, 0);
    for (int k = 0; k < kSeriesTermCap; ++k) {
        const double r = prev_ratio;
        if (r == 0.0) {
            return {ScaledReal(sum, exponent), k + 1, 0.0};
        }
        term *= r;
        sum += term;
        if (std::fabs(sum) > kRescale || std::fabs(term) > kRescale) {
            term /= kRescale;
            sum /= kRescale;
            exponent += std::log(kRescale);
        }
        const double next = term_ratio(upper, lower, x, k + 1);
        const double an = std::fabs(next);
        // once the ratio is below one and no longer growing, the tail is
        // dominated by a geometric series
        if (an < 1.0 && an <= std::fabs(r) && sum != 0.0) {
            const double est = std::fabs(term) * an / (1.0 - an) / std::fabs(sum);
            if (est < tolerance) {
                return {ScaledReal(sum, exponent), k + 2, est};
            }
        }
        prev_ratio = next;
    }
    throw ConvergenceError("pfq: term ratio did not fall below one within the term cap");
}

}  // namespace struvebound::specfun
