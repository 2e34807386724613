#include <cmath>
#include <numbers>
#include <string>

#include "struvebound/errors.hpp"
#include "struvebound/specfun.hpp"

namespace struvebound::specfun {

namespace {

constexpr double kRescale = 1e13;

// Sums term_0 * (1 + r_0 + r_0 r_1 + ...) with r_k = (x/2)^2 / ((k + c1)(k + c2)).
// All terms are positive when c1, c2 > 0; the running sum is rescaled so the
// result never overflows. log_term0 is log of the first term.
ScaledReal positive_bessel_type_series(double log_term0, double x, double c1, double c2) {
    const double y = 0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    double exponent = log_term0;
    for (int k = 0; k < kSeriesTermCap; ++k) {
        const double r = y / ((k + c1) * (k + c2));
        term *= r;
        sum += term;
        if (sum > kRescale) {
            term /= kRescale;
            sum /= kRescale;
            exponent += std::log(kRescale);
        }
        const double rn = y / ((k + 1 + c1) * (k + 1 + c2));
        // ratios decrease monotonically, so the tail is below term * rn / (1 - rn)
        if (rn < 1.0 && term * rn / (1.0 - rn) < 1e-17 * sum) {
            return ScaledReal(sum, exponent);
        }
    }
    throw ConvergenceError("series term cap exceeded");
}

}  // namespace

ScaledReal struve_l_wide(double nu, double x) {
    if (!(nu > -1.5)) {
        throw DomainError("struve_l: order must exceed -3/2, got " + std::to_string(nu));
    }
    if (!(x >= 0.0)) {
        throw DomainError("struve_l: x must be nonnegative");
    }
    if (x == 0.0) {
        if (nu > -1.0) return ScaledReal::zero();
        if (nu == -1.0) return ScaledReal::from_double(2.0 / std::numbers::pi);
        throw DomainError("struve_l: L_nu(0) is infinite for nu < -1");
    }
    // first term (x/2)^(nu+1) / (Gamma(3/2) Gamma(nu + 3/2))
    const double log_t0 = (nu + 1.0) * std::log(0.5 * x) - log_gamma(1.5) - log_gamma(nu + 1.5);
    return positive_bessel_type_series(log_t0, x, 1.5, nu + 1.5);
}

ScaledReal struve_l_scaled(double nu, double x) {
    return struve_l_wide(nu, x).times_exp(-x);
}

double struve_l(double nu, double x) {
    return struve_l_wide(nu, x).value();
}

ScaledReal bessel_i_wide(double nu, double x) {
    if (!(nu >= -1.0)) {
        throw DomainError("bessel_i: order must be >= -1, got " + std::to_string(nu));
    }
    if (!(x >= 0.0)) {
        throw DomainError("bessel_i: x must be nonnegative");
    }
    if (nu == -1.0) {
        nu = 1.0;  // I_{-n} = I_n
    }
    if (x == 0.0) {
        if (nu == 0.0) return ScaledReal::from_double(1.0);
        if (nu > 0.0) return ScaledReal::zero();
        throw DomainError("bessel_i: I_nu(0) is infinite for -1 < nu < 0");
    }
    const double log_t0 = nu * std::log(0.5 * x) - log_gamma(nu + 1.0);
    return positive_bessel_type_series(log_t0, x, 1.0, nu + 1.0);
}

ScaledReal bessel_i_scaled(double nu, double x) {
    return bessel_i_wide(nu, x).times_exp(-x);
}

double bessel_i(double nu, double x) {
    return bessel_i_wide(nu, x).value();
}

}  // namespace struvebound::specfun
