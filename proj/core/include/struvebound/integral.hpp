#pragma once

#include "struvebound/scaled_real.hpp"

/// F_{nu,beta}(x) = int_0^x e^{-beta t} t^nu L_nu(t) dt and its companion
/// G_{nu,beta}(x) = int_0^x e^{-beta t} t^nu L_{nu+1}(t) dt.
///
/// Four independent routes are provided: adaptive quadrature (any beta), the
/// incomplete-gamma series (0 < beta < 1), the closed form at beta = 1 and the
/// 2F3 form at beta = 0. F() and G() dispatch between them.
namespace struvebound::integral {

/// Identifies int_0^upper e^{-beta t} t^weight_power L_order(t) dt.
struct IntegralSpec {
    double weight_power = 0.0;
    double order = 0.0;
    double beta = 0.0;
    double upper = 0.0;
};

struct QuadratureResult {
    ScaledReal value;
    ScaledReal abs_error_estimate;
    int node_count = 0;
};

/// Throws DomainError unless the integral exists: order > -3/2,
/// weight_power + order > -2, beta in [0, 1], upper >= 0.
void validate(const IntegralSpec& spec);

/// Adaptive quadrature. The range [0, min(1, x)] uses a tanh-sinh rule, which
/// absorbs the t^(a+mu+1) endpoint behaviour; the rest uses adaptive
/// Gauss-Kronrod. The integrand is evaluated in exponentially scaled form, so
/// x up to ~1e3 and beyond is fine. tol >= 1e-13.
QuadratureResult integral_quad(const IntegralSpec& spec, double tol = 1e-13);

/// sum_k 2^{-nu-2k-1} beta^{-2k-2nu-2} gamma(2k+2nu+2, beta x) / (Gamma(k+3/2) Gamma(k+nu+3/2)),
/// nu > -1, 0 < beta < 1, x > 0. With max_terms > 0 only the first max_terms
/// terms are summed; otherwise summation stops once a rigorous tail bound falls
/// below 1e-15 of the partial sum.
ScaledReal integral_series(double nu, double beta, double x, int max_terms = 0);

/// Closed form at beta = 1, nu > -1/2:
/// e^{-x} x^{nu+1} (L_nu + L_{nu+1}) / (2nu+1) - gamma(2nu+2, x) / (sqrt(pi) 2^nu (2nu+1) Gamma(nu+3/2)).
ScaledReal integral_beta1(double nu, double x);

/// beta = 0, nu > -1: x^{2nu+2} 2F3(1, nu+1; 3/2, nu+3/2, nu+2; x^2/4) / (sqrt(pi) 2^{nu+1} (nu+1) Gamma(nu+3/2)).
ScaledReal integral_beta0(double nu, double x);

enum class Route { beta0, beta1, series, quadrature };

const char* to_string(Route route);

/// Route F() takes for the given arguments (series may still fall back to quadrature).
Route f_route(double nu, double beta, double x);

/// Smallest beta for which F() prefers the series over quadrature.
inline constexpr double kSeriesBetaThreshold = 0.05;

ScaledReal F(double nu, double beta, double x);
ScaledReal G(double nu, double beta, double x);

}  // namespace struvebound::integral
