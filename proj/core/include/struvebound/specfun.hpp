#pragma once

#include <span>

#include "struvebound/scaled_real.hpp"

/// Real-argument special functions used by the integral and bound modules.
///
/// Naming convention for the wide-range variants:
///   *_wide(nu, x)    the function value itself as a ScaledReal (never overflows)
///   *_scaled(nu, x)  the exponentially scaled value: e^{-x} L, e^{-x} I, e^{x} K
///   plain            a double; throws OverflowError when it would not fit
///
/// Every function is a pure function of its arguments.
namespace struvebound::specfun {

inline constexpr int kSeriesTermCap = 40000;
inline constexpr int kQuadratureNodeCap = 2000;

struct SeriesResult {
    ScaledReal value;
    int terms_used = 0;
    /// Estimated relative size of the discarded tail.
    double truncation_estimate = 0.0;
};

/// Gamma function for x > 0 (Lanczos, g = 7, nine coefficients).
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Lower incomplete gamma gamma(a, x) = int_0^x e^-t t^(a-1) dt, a > 0, x >= 0.
double lower_incomplete_gamma(double a, double x);
ScaledReal lower_incomplete_gamma_wide(double a, double x);

/// Generalized hypergeometric series pFq(upper; lower; x).
///
/// Requires p <= q + 1, no lower parameter a nonpositive integer, and |x| < 1
/// when p == q + 1. Throws ConvergenceError past kSeriesTermCap terms.
SeriesResult pfq(std::span<const double> upper, std::span<const double> lower, double x,
                 double tolerance = 1e-16);

/// Modified Struve function L_nu(x), nu > -3/2, x >= 0.
double struve_l(double nu, double x);
ScaledReal struve_l_wide(double nu, double x);
/// e^{-x} L_nu(x).
ScaledReal struve_l_scaled(double nu, double x);

/// Modified Bessel function of the first kind, nu >= -1, x >= 0.
double bessel_i(double nu, double x);
ScaledReal bessel_i_wide(double nu, double x);
/// e^{-x} I_nu(x).
ScaledReal bessel_i_scaled(double nu, double x);

/// Modified Bessel function of the second kind, any real nu, x > 0.
double bessel_k(double nu, double x);
ScaledReal bessel_k_wide(double nu, double x);
/// e^{x} K_nu(x).
ScaledReal bessel_k_scaled(double nu, double x);

}  // namespace struvebound::specfun
