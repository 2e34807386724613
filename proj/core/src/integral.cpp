#include "struvebound/integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "struvebound/errors.hpp"
#include "struvebound/specfun.hpp"

namespace struvebound::integral {

namespace {

constexpr double kLogSqrtPi = 0.57236494292470008707;

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

}  // namespace

void validate(const IntegralSpec& spec) {
    require(spec.order > -1.5, "integral: Struve order must exceed -3/2");
    require(spec.weight_power + spec.order > -2.0,
            "integral: integrand ~ t^(a+mu+1) is not integrable at 0 (need a + mu > -2)");
    require(spec.beta >= 0.0 && spec.beta <= 1.0, "integral: beta must lie in [0, 1]");
    require(spec.upper >= 0.0 && std::isfinite(spec.upper), "integral: upper limit must be finite and >= 0");
}

QuadratureResult integral_quad(const IntegralSpec& spec, double tol) {
    validate(spec);
    require(tol >= 1e-13, "integral_quad: tolerance below 1e-13 is not attainable");
    const double x = spec.upper;
    if (x == 0.0) {
        return {};
    }
    const double decay = 1.0 - spec.beta;
    int nodes = 0;
    // e^{-beta t} t^a L_mu(t) = e^{(1-beta) x} * [t^a e^{-(1-beta)(x-t)} e^{-t} L_mu(t)];
    // the bracket is further divided by e^{shift} so each piece is O(1)
    auto log_integrand = [&](double t) {
        return specfun::struve_l_scaled(spec.order, t)
            .times_exp(spec.weight_power * std::log(t) - decay * (x - t));
    };

    // head: [0, split] mapped onto u in [0, 1]; the tanh-sinh error estimate
    // is only reliable on a unit-scale interval
    const double split = std::min(1.0, x);
    const double head_shift = log_integrand(split).log_abs();
    auto head_integrand = [&](double u) -> double {
        ++nodes;
        if (!(u > 0.0)) return 0.0;
        return split * log_integrand(split * u).times_exp(-head_shift).to_double();
    };
    boost::math::quadrature::tanh_sinh<double> ts(12);
    double err_head = 0.0;
    const double head = ts.integrate(head_integrand, 0.0, 1.0, tol, &err_head);
    ScaledReal total(head, head_shift);
    ScaledReal err(err_head, head_shift);

    if (x > split) {
        const double tail_shift = log_integrand(x).log_abs();
        auto tail_integrand = [&](double t) -> double {
            ++nodes;
            return log_integrand(t).times_exp(-tail_shift).to_double();
        };
        double err_tail = 0.0;
        const double tail = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            tail_integrand, split, x, 30, tol, &err_tail);
        total += ScaledReal(tail, tail_shift);
        err += ScaledReal(err_tail, tail_shift);
    }
    if (!(total.sign() > 0)) {
        throw ConvergenceError("integral_quad: non-positive result at x=" + std::to_string(x));
    }
    const double rel_err = ratio(err, total);
    if (!(rel_err <= 1e3 * tol)) {
        throw ConvergenceError("integral_quad: relative error estimate " + std::to_string(rel_err) +
                               " did not reach tolerance " + std::to_string(tol));
    }
    const double scale = decay * x;
    return {total.times_exp(scale), err.times_exp(scale), nodes};
}

ScaledReal integral_series(double nu, double beta, double x, int max_terms) {
    require(nu > -1.0, "integral_series: requires nu > -1");
    require(beta > 0.0 && beta < 1.0, "integral_series: requires 0 < beta < 1");
    require(x > 0.0, "integral_series: requires x > 0");
    const double z = beta * x;
    const double log_beta = std::log(beta);
    const double y = 0.25 * x * x;
    ScaledReal sum;
    for (int k = 0; k < specfun::kSeriesTermCap; ++k) {
        const double a = 2.0 * k + 2.0 * nu + 2.0;
        const double log_coeff = -(nu + 2.0 * k + 1.0) * std::numbers::ln2 - a * log_beta -
                                 specfun::log_gamma(k + 1.5) - specfun::log_gamma(k + nu + 1.5);
        const ScaledReal term = specfun::lower_incomplete_gamma_wide(a, z).times_exp(log_coeff);
        sum += term;
        if (max_terms > 0) {
            if (k + 1 >= max_terms) return sum;
            continue;
        }
        // gamma(a+2, z) <= z^2 gamma(a, z), so consecutive terms shrink by at
        // most rho_k = (x/2)^2 / ((k+3/2)(k+nu+3/2)), which decreases in k
        const double rho = y / ((k + 2.5) * (k + nu + 2.5));
        if (rho < 1.0 && ratio(term, sum) * rho / (1.0 - rho) < 1e-15) {
            return sum;
        }
    }
    throw ConvergenceError("integral_series: term cap exceeded");
}

ScaledReal integral_beta1(double nu, double x) {
    require(nu > -0.5, "integral_beta1: requires nu > -1/2");
    require(x > 0.0, "integral_beta1: requires x > 0");
    const ScaledReal boundary = (specfun::struve_l_scaled(nu, x) + specfun::struve_l_scaled(nu + 1.0, x))
                                    .times_exp((nu + 1.0) * std::log(x)) /
                                (2.0 * nu + 1.0);
    const ScaledReal gamma_part = specfun::lower_incomplete_gamma_wide(2.0 * nu + 2.0, x)
                                      .times_exp(-kLogSqrtPi - nu * std::numbers::ln2 -
                                                 specfun::log_gamma(nu + 1.5)) /
                                  (2.0 * nu + 1.0);
    return boundary - gamma_part;
}

ScaledReal integral_beta0(double nu, double x) {
    require(nu > -1.0, "integral_beta0: requires nu > -1");
    require(x > 0.0, "integral_beta0: requires x > 0");
    const double upper[] = {1.0, nu + 1.0};
    const double lower[] = {1.5, nu + 1.5, nu + 2.0};
    const specfun::SeriesResult s = specfun::pfq(upper, lower, 0.25 * x * x);
    return s.value.times_exp((2.0 * nu + 2.0) * std::log(x) - kLogSqrtPi - (nu + 1.0) * std::numbers::ln2 -
                             std::log(nu + 1.0) - specfun::log_gamma(nu + 1.5));
}

const char* to_string(Route route) {
    switch (route) {
        case Route::beta0: return "beta0";
        case Route::beta1: return "beta1";
        case Route::series: return "series";
        case Route::quadrature: return "quadrature";
    }
    return "?";
}

Route f_route(double nu, double beta, double x) {
    (void)x;
    if (beta == 0.0) return Route::beta0;
    if (beta == 1.0) return nu > -0.5 ? Route::beta1 : Route::quadrature;
    return beta >= kSeriesBetaThreshold ? Route::series : Route::quadrature;
}

ScaledReal F(double nu, double beta, double x) {
    require(nu > -1.0, "F: requires nu > -1");
    validate({nu, nu, beta, x});
    if (x == 0.0) {
        return ScaledReal::zero();
    }
    switch (f_route(nu, beta, x)) {
        case Route::beta0: return integral_beta0(nu, x);
        case Route::beta1: return integral_beta1(nu, x);
        case Route::series:
            try {
                return integral_series(nu, beta, x);
            } catch (const ConvergenceError&) {
                return integral_quad({nu, nu, beta, x}).value;
            }
        case Route::quadrature: break;
    }
    return integral_quad({nu, nu, beta, x}).value;
}

ScaledReal G(double nu, double beta, double x) {
    require(nu > -1.0, "G: requires nu > -1");
    const IntegralSpec spec{nu, nu + 1.0, beta, x};
    validate(spec);
    if (x == 0.0) {
        return ScaledReal::zero();
    }
    return integral_quad(spec).value;
}

}  // namespace struvebound::integral
