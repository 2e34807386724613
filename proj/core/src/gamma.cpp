#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "struvebound/errors.hpp"
#include "struvebound/specfun.hpp"

namespace struvebound::specfun {

namespace {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kSqrt2Pi = 2.5066282746310005024;

double lanczos_sum(double z) {
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        a += kLanczos[i] / (z + static_cast<double>(i));
    }
    return a;
}

void require_positive(double x, const char* what) {
    if (!(x > 0.0)) {
        throw DomainError(std::string(what) + ": argument must be positive, got " + std::to_string(x));
    }
}

}  // namespace

double gamma_fn(double x) {
    require_positive(x, "gamma_fn");
    if (x < 0.5) {
        return gamma_fn(x + 1.0) / x;
    }
    if (x > 171.6) {
        throw OverflowError("gamma_fn: Gamma(" + std::to_string(x) + ") overflows; use log_gamma");
    }
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    // split the power so t^(z+1/2) does not overflow before e^-t is applied
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return kSqrt2Pi * half * std::exp(-t) * half * lanczos_sum(z);
}

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x < 0.5) {
        return log_gamma(x + 1.0) - std::log(x);
    }
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

ScaledReal lower_incomplete_gamma_wide(double a, double x) {
    if (!(a > 0.0)) {
        throw DomainError("lower_incomplete_gamma: a must be positive");
    }
    if (!(x >= 0.0)) {
        throw DomainError("lower_incomplete_gamma: x must be nonnegative");
    }
    if (x == 0.0) {
        return ScaledReal::zero();
    }
    const double log_prefactor = a * std::log(x) - x;
    if (x < a + 1.0) {
        // gamma(a,x) = x^a e^-x sum_n x^n / (a (a+1) ... (a+n))
        double term = 1.0 / a;
        double sum = term;
        for (int n = 1; n < kSeriesTermCap; ++n) {
            term *= x / (a + n);
            sum += term;
            if (term < sum * 1e-17) {
                return ScaledReal(sum, log_prefactor);
            }
        }
        throw ConvergenceError("lower_incomplete_gamma: series term cap exceeded");
    }
    // Gamma(a,x) = e^-x x^a / (x+1-a- 1(1-a)/(x+3-a- ...)), modified Lentz
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int n = 1; n < kSeriesTermCap; ++n) {
        const double an = -n * (n - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) {
            const double lg = log_gamma(a);
            const double q = std::exp(log_prefactor - lg) * h;
            return ScaledReal::from_log(lg + std::log1p(-q));
        }
    }
    throw ConvergenceError("lower_incomplete_gamma: continued fraction cap exceeded");
}

double lower_incomplete_gamma(double a, double x) {
    return lower_incomplete_gamma_wide(a, x).value();
}

}  // namespace struvebound::specfun
