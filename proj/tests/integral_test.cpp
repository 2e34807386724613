#include <doctest.h>

#include <cmath>
#include <numbers>

#include "struvebound/errors.hpp"
#include "struvebound/integral.hpp"
#include "struvebound/specfun.hpp"
#include "support.hpp"

using namespace struvebound;
using namespace struvebound::integral;
using testsupport::rel_err;

TEST_CASE("golden integrals") {
    const auto rows = testsupport::load_golden("integrals.csv", true);
    REQUIRE(rows.size() >= 150);
    for (const auto& r : rows) {
        INFO(r.function << " nu=" << r.nu << " beta=" << r.beta << " x=" << r.x);
        const bool is_f = r.function == "F";
        const ScaledReal dispatched = is_f ? F(r.nu, r.beta, r.x) : G(r.nu, r.beta, r.x);
        const ScaledReal quad = integral_quad({r.nu, is_f ? r.nu : r.nu + 1.0, r.beta, r.x}).value;
        CHECK(rel_err(dispatched, r.value) < 1e-11);
        CHECK(rel_err(quad, r.value) < 1e-11);
    }
}

TEST_CASE("series against quadrature on the 200-point grid") {
    int n = 0;
    double worst = 0.0;
    for (double nu : {-0.49, -0.25, 0.0, 0.5, 1.0, 2.5, 5.0, 10.0}) {
        for (double beta : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 25.0}) {
                const double e = rel_err(integral_series(nu, beta, x), integral_quad({nu, nu, beta, x}).value);
                worst = std::max(worst, e);
                ++n;
            }
        }
    }
    CHECK(n == 240);
    CHECK(worst <= 1e-8);
}

TEST_CASE("beta = 1 closed form against quadrature") {
    for (double nu : {-0.25, 0.5, 1.0, 2.5, 5.0}) {
        for (double x : {0.5, 1.0, 5.0, 10.0, 50.0}) {
            INFO("nu=" << nu << " x=" << x);
            CHECK(rel_err(integral_beta1(nu, x), integral_quad({nu, nu, 1.0, x}).value) <= 1e-10);
        }
    }
    CHECK(rel_err(integral_quad({1.0, 1.0, 1.0, 3.0}).value, integral_beta1(1.0, 3.0)) <= 1e-10);
    CHECK(rel_err(integral_beta1(10.0, 100.0), integral_quad({10.0, 10.0, 1.0, 100.0}).value) <= 1e-10);
    CHECK_THROWS_AS(integral_beta1(-0.5, 1.0), DomainError);
    // x -> 0: value / x^{2nu+2} -> 1/(sqrt(pi) 2^{nu+1} (nu+1) Gamma(nu+3/2))
    const double nu = 0.5;
    const double x = 1e-4;
    const double lead = 1.0 / (std::sqrt(std::numbers::pi) * std::pow(2.0, nu + 1.0) * (nu + 1.0) *
                               specfun::gamma_fn(nu + 1.5));
    CHECK(rel_err(integral_beta1(nu, x).to_double() / std::pow(x, 2.0 * nu + 2.0), lead) < 1e-3);
}

TEST_CASE("beta = 0 hypergeometric form against quadrature") {
    int n = 0;
    for (double nu : {-0.9, -0.25, 0.0, 1.0, 4.0}) {
        for (double x : {0.5, 2.0, 10.0, 30.0}) {
            INFO("nu=" << nu << " x=" << x);
            CHECK(rel_err(integral_beta0(nu, x), integral_quad({nu, nu, 0.0, x}).value) <= 1e-10);
            ++n;
        }
    }
    CHECK(n == 20);
    CHECK(integral_beta0(-0.9, 1.0).to_double() > 0.0);
}

TEST_CASE("series examples") {
    CHECK(rel_err(integral_series(2.5, 0.5, 10.0), integral_quad({2.5, 2.5, 0.5, 10.0}).value) <= 1e-9);
    CHECK(rel_err(integral_series(0.0, 0.5, 1.0), integral_quad({0.0, 0.0, 0.5, 1.0}).value) <= 1e-9);
    const ScaledReal edge = integral_series(-0.5 + 1e-6, 0.25, 2.0);
    CHECK(edge.to_double() > 0.0);
    CHECK(rel_err(edge, integral_quad({-0.5 + 1e-6, -0.5 + 1e-6, 0.25, 2.0}).value) <= 1e-9);
    // the k = 0 term alone carries the leading x^{2nu+2} order
    for (double nu : {-0.5, 0.0, 2.0}) {
        CHECK(rel_err(integral_series(nu, 0.5, 1e-3, 1), integral_quad({nu, nu, 0.5, 1e-3}).value) < 1e-2);
    }
    CHECK_THROWS_AS(integral_series(-1.0, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(integral_series(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("quadrature edge cases") {
    const auto tiny = integral_quad({1.0, 1.0, 0.25, 1e-8});
    CHECK(tiny.value.to_double() <= 1e-18);
    CHECK(tiny.value.to_double() > 0.0);
    CHECK(integral_quad({1.0, 1.0, 0.25, 0.0}).value.is_zero());
    CHECK_THROWS_AS(integral_quad({1.0, 1.0, 0.25, 1.0}, 1e-14), DomainError);
    CHECK_THROWS_AS(integral_quad({-1.0, -1.0, 0.25, 1.0}), DomainError);
    CHECK_THROWS_AS(integral_quad({0.0, 0.0, 1.5, 1.0}), DomainError);
    // monotone in the upper limit
    double prev = -INFINITY;
    for (double x : testsupport::log_grid(1e-3, 800.0, 40)) {
        const double lv = integral_quad({-0.7, -0.7, 0.3, x}).value.log_abs();
        CHECK(lv > prev);
        prev = lv;
    }
}

TEST_CASE("dispatcher") {
    CHECK(f_route(1.0, 0.0, 2.0) == Route::beta0);
    CHECK(f_route(1.0, 1.0, 2.0) == Route::beta1);
    CHECK(f_route(-0.75, 1.0, 2.0) == Route::quadrature);
    CHECK(f_route(1.0, 0.5, 2.0) == Route::series);
    CHECK(f_route(1.0, 0.01, 2.0) == Route::quadrature);
    CHECK(F(1.0, 0.25, 0.0).is_zero());
    CHECK(F(-0.5, 0.0, 0.0).is_zero());
    CHECK(G(0.5, 0.5, 2.0) < F(0.5, 0.5, 2.0));
    CHECK_THROWS_AS(F(-1.0, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(F(0.0, -0.1, 1.0), DomainError);
}

TEST_CASE("large-x law") {
    auto law = [](double nu, double beta, double x) {
        return F(nu, beta, x)
            .times_exp(0.5 * std::log(2.0 * std::numbers::pi) + std::log(1.0 - beta) + (0.5 - nu) * std::log(x) -
                       (1.0 - beta) * x)
            .to_double();
    };
    for (double beta : {0.25, 0.5}) {
        for (double nu : {0.0, 1.0}) {
            CHECK(std::fabs(law(nu, beta, 400.0) - 1.0) < 0.02);
        }
        // nu = 5 carries a 1/x correction of about 5% at x = 400; check it
        // against the first-order law instead
        const double nu = 5.0;
        const double c1 = -((nu - 0.5) / (1.0 - beta) + (4.0 * nu * nu - 1.0) / 8.0);
        CHECK(std::fabs(law(nu, beta, 400.0) - (1.0 + c1 / 400.0)) < 0.02);
        CHECK(std::fabs(law(nu, beta, 4000.0) - 1.0) < 0.02);
    }
}

TEST_CASE("F decreases in beta") {
    for (double nu : {-0.5, 0.0, 2.0}) {
        for (double x : {0.5, 5.0, 50.0}) {
            ScaledReal prev = F(nu, 0.0, x);
            for (double beta : {0.05, 0.1, 0.3, 0.5, 0.75, 0.9, 1.0}) {
                const ScaledReal v = F(nu, beta, x);
                INFO("nu=" << nu << " x=" << x << " beta=" << beta);
                CHECK(v < prev);
                prev = v;
            }
        }
    }
}
