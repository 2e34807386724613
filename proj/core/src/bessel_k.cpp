#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "struvebound/errors.hpp"
#include "struvebound/specfun.hpp"

namespace struvebound::specfun {

namespace {

double log_cosh(double y) {
    const double a = std::fabs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

// log of the integrand of e^x K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt
double log_integrand(double nu, double x, double t) {
    const double s = std::sinh(0.5 * t);
    return -2.0 * x * s * s + log_cosh(nu * t);
}

}  // namespace

ScaledReal bessel_k_scaled(double nu, double x) {
    if (!(x > 0.0)) {
        throw DomainError("bessel_k: x must be positive, got " + std::to_string(x));
    }
    nu = std::fabs(nu);

    // The integrand decays double-exponentially in t, so the trapezoidal rule
    // converges geometrically in 1/h^2. Width of the peak is ~1/sqrt(x) for large x.
    double h = std::min(0.5, 1.0 / std::sqrt(x));

    // locate the truncation point and the peak (for the log shift)
    double peak = log_integrand(nu, x, 0.0);
    double prev = peak;
    int n = 0;
    for (int k = 1;; ++k) {
        if (k > kQuadratureNodeCap) {
            throw ConvergenceError("bessel_k: truncation point not reached within node cap");
        }
        const double lf = log_integrand(nu, x, k * h);
        peak = std::max(peak, lf);
        if (lf < prev && lf < peak - 45.0) {
            n = k;
            break;
        }
        prev = lf;
    }
    const double t_max = n * h;
    const double shift = peak;

    auto f = [&](double t) { return std::exp(log_integrand(nu, x, t) - shift); };

    double sum = 0.5 * f(0.0);
    for (int k = 1; k <= n; ++k) {
        sum += f(k * h);
    }
    double estimate = h * sum;
    int nodes = n + 1;
    for (int level = 0;; ++level) {
        double mid = 0.0;
        const int m = static_cast<int>(std::lround(t_max / h));
        for (int k = 0; k < m; ++k) {
            mid += f((k + 0.5) * h);
        }
        nodes += m;
        sum += mid;
        h *= 0.5;
        const double refined = h * sum;
        const double diff = std::fabs(refined - estimate);
        estimate = refined;
        if (level >= 1 && diff <= 1e-14 * refined) {
            break;
        }
        if (nodes > kQuadratureNodeCap) {
            throw ConvergenceError("bessel_k: quadrature node cap exceeded at nu=" + std::to_string(nu) +
                                   ", x=" + std::to_string(x));
        }
    }
    return ScaledReal(estimate, shift);
}

ScaledReal bessel_k_wide(double nu, double x) {
    return bessel_k_scaled(nu, x).times_exp(-x);
}

double bessel_k(double nu, double x) {
    return bessel_k_wide(nu, x).value();
}

}  // namespace struvebound::specfun
