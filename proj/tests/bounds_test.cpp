#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "struvebound/bounds.hpp"
#include "struvebound/errors.hpp"
#include "struvebound/integral.hpp"
#include "struvebound/specfun.hpp"
#include "support.hpp"

using namespace struvebound;
using namespace struvebound::bounds;
using testsupport::rel_err;

namespace {

double kl_upper(double nu) {
    return 2.0 * specfun::gamma_fn(nu + 2.0) / (std::sqrt(std::numbers::pi) * specfun::gamma_fn(nu + 1.5));
}

double product(double nu, double x, double k_shift) {
    return (specfun::bessel_k_scaled(nu + k_shift, x) * specfun::struve_l_scaled(nu, x)).to_double() * x;
}

}  // namespace

TEST_CASE("catalog") {
    const auto all = list_bounds();
    REQUIRE(all.size() == 28);
    std::set<std::string> names;
    for (int i = 0; i < kBoundCount; ++i) {
        CHECK(all[i].id == static_cast<BoundId>(i));
        names.insert(std::string(to_string(all[i].id)));
        CHECK(parse_bound_id(to_string(all[i].id)) == all[i].id);
        CHECK(!all[i].statement.empty());
        CHECK(!all[i].hypothesis.empty());
    }
    CHECK(names.size() == 28);
    CHECK(!parse_bound_id("LB-9.9"));

    const auto& lb23 = spec(BoundId::LB_2_3);
    CHECK(lb23.target == Target::f_integral);
    CHECK(lb23.side == Side::lower);
    CHECK(is_valid(BoundId::LB_2_3, -0.99, 0.5, 1.0));
    CHECK(!is_valid(BoundId::LB_2_3, -1.0, 0.5, 1.0));

    const auto& kl1 = spec(BoundId::PRB_KL1);
    CHECK(kl1.side == Side::two_sided);
    const auto v = eval_bound(BoundId::PRB_KL1, 1.0, 0.0, 2.0);
    CHECK(v.lower->to_double() == 0.5);
    CHECK(rel_err(v.upper->to_double(), kl_upper(1.0)) < 1e-14);
    CHECK(!spec(BoundId::RB_3_1).uses_beta);
}

TEST_CASE("validity gates follow the stated boundary conventions") {
    CHECK_THROWS_AS(eval_bound(BoundId::LB_2_1, 1.0, 0.5, 2.0), ValidityError);
    CHECK_NOTHROW(eval_bound(BoundId::LB_2_1, 0.0, 0.5, 2.0));
    CHECK_THROWS_AS(eval_bound(BoundId::LB_2_1, -0.5, 0.5, 2.0), ValidityError);
    CHECK_NOTHROW(eval_bound(BoundId::LB_2_2, 1.5, 0.5, 2.0));
    CHECK_THROWS_AS(eval_bound(BoundId::LB_2_6, 0.5, 0.5, 2.0), ValidityError);
    CHECK_NOTHROW(eval_bound(BoundId::UB_GAU2, 0.5, 0.5, 2.0));
    CHECK_NOTHROW(eval_bound(BoundId::PRB_G1, -0.5, 0.0, 2.0));
    CHECK_THROWS_AS(eval_bound(BoundId::NB_3_10, -0.5, 0.5, 2.0), ValidityError);
    CHECK_NOTHROW(eval_bound(BoundId::NB_3_10, 0.5, 0.5, 2.0));
    CHECK_THROWS_AS(eval_bound(BoundId::UB_2_5, 1.0, 1.0, 2.0), ValidityError);
    CHECK_THROWS_AS(eval_bound(BoundId::RB_3_1, 1.0, 0.5, 0.0), ValidityError);
    CHECK_NOTHROW(eval_bound(BoundId::RB_AUG18, 0.0, 0.0, 1.0));
    CHECK_THROWS_AS(eval_bound(BoundId::RB_3_1, 0.0, 0.0, 1.0), ValidityError);

    // UB-3.8: x* defaults to 2/(1-beta) and must exceed 1/(1-beta)
    CHECK_THROWS_AS(eval_bound(BoundId::UB_3_8, 1.0, 0.5, 3.0), ValidityError);  // x < x* = 4
    CHECK_NOTHROW(eval_bound(BoundId::UB_3_8, 1.0, 0.5, 4.0));
    CHECK_THROWS_AS(eval_bound(BoundId::UB_3_8, 1.0, 0.5, 5.0, {2.0, std::nullopt}), ValidityError);
    CHECK_NOTHROW(eval_bound(BoundId::UB_3_8, 1.0, 0.5, 5.0, {2.5, std::nullopt}));

    const auto failed = violated_hypothesis(BoundId::LB_2_2, 1.0, 0.5, 2.0);
    REQUIRE(failed);
    CHECK(*failed == "nu >= 3/2");
    try {
        eval_bound(BoundId::LB_2_2, 1.0, 0.5, 2.0);
    } catch (const ValidityError& e) {
        CHECK(std::string(e.what()).find("nu >= 3/2") != std::string::npos);
    }
}

TEST_CASE("bound values") {
    const double ub = eval_bound(BoundId::UB_GAU2, 1.0, 0.5, 2.0).value().to_double();
    CHECK(rel_err(ub, 2.0 * std::exp(-1.0) * 2.0 * specfun::struve_l(1.0, 2.0)) < 1e-14);
    CHECK(ub > integral::F(1.0, 0.5, 2.0).to_double());

    // five-term LB-2.3 gives the 0.3723 relative-error cell
    BoundOptions five;
    five.truncation = 5;
    const ScaledReal l5 = eval_bound(BoundId::LB_2_3, 1.0, 0.75, 10.0, five).value();
    const ScaledReal f = integral::F(1.0, 0.75, 10.0);
    CHECK(std::fabs(ratio(f - l5, f) - 0.3723) < 1.5e-4);

    CHECK(eval_bound(BoundId::NB_3_10, 0.25, 0.5, 1.0).value().to_double() == doctest::Approx(14.0 / (1.5 * 0.5)));
    CHECK(eval_bound(BoundId::NB_3_11, 0.25, 0.5, 1.0).value().to_double() == doctest::Approx(7.0 / (1.5 * 0.5)));
}

TEST_CASE("adaptive LB-2.3 converges to the full series") {
    for (double beta : {0.1, 0.5, 0.9}) {
        const ScaledReal adaptive = eval_bound(BoundId::LB_2_3, 1.0, beta, 20.0).value();
        const ScaledReal long_sum = eval_bound(BoundId::LB_2_3, 1.0, beta, 20.0, {std::nullopt, 2000}).value();
        CHECK(rel_err(adaptive, long_sum) < 1e-11);
        CHECK(adaptive < integral::F(1.0, beta, 20.0));
    }
}

TEST_CASE("check examples") {
    const Margin m = check(BoundId::UB_2_5, 0.0, 0.5, 5.0);
    CHECK(m.strict);
    CHECK(m.status == Status::strict);
    CHECK(m.signed_margin > 0.0);

    CHECK(check(BoundId::IMON, 0.5, 0.0, 3.0).strict);
    const double c = std::sqrt(2.0 / (std::numbers::pi * 3.0));
    CHECK(c * (std::cosh(3.0) - 1.0) < c * std::sinh(3.0));

    // tight at both ends
    const double small = check(BoundId::RB_3_1, 0.5, 0.0, 1e-4).signed_margin;
    const double mid = check(BoundId::RB_3_1, 0.5, 0.0, 2.0).signed_margin;
    const double large = check(BoundId::RB_3_1, 0.5, 0.0, 1000.0).signed_margin;
    CHECK(small > 0.0);
    CHECK(large > 0.0);
    CHECK(small < 1e-4);
    CHECK(large < 2e-3);
    CHECK(mid > 10.0 * std::max(small, large));
}

TEST_CASE("ratio-bound chain holds strictly") {
    for (double nu : {0.6, 1.0, 2.5, 7.0}) {
        for (double x : testsupport::log_grid(1e-3, 500.0, 30)) {
            INFO("nu=" << nu << " x=" << x);
            CHECK(check(BoundId::RB_NASELL, nu, 0.0, x).strict);
            CHECK(check(BoundId::RB_SEGURA, nu, 0.0, x).strict);
            CHECK(check(BoundId::RB_AUG18, nu, 0.0, x).strict);
            CHECK(check(BoundId::RB_3_1, nu, 0.0, x).strict);
            const double a = nu - 0.5;
            CHECK((a + std::hypot(a, x)) / x < 1.0 + (2.0 * nu - 1.0) / x);
        }
    }
}

TEST_CASE("LB-2.3 improves on LB-PRIOR") {
    for (double nu : {-0.49, 0.0, 1.0, 5.0}) {
        for (double beta : {0.1, 0.5, 0.9}) {
            for (double x : testsupport::log_grid(0.05, 100.0, 12)) {
                CHECK(eval_bound(BoundId::LB_2_3, nu, beta, x).value() >
                      eval_bound(BoundId::LB_PRIOR, nu, beta, x).value());
            }
        }
    }
}

TEST_CASE("G lies below F and the companion bounds hold") {
    for (double nu : {-0.49, -0.25, 0.0, 1.5, 3.0}) {
        for (double beta : {0.25, 0.75}) {
            for (double x : {0.1, 1.0, 10.0, 60.0}) {
                INFO("nu=" << nu << " beta=" << beta << " x=" << x);
                CHECK(integral::G(nu, beta, x) < integral::F(nu, beta, x));
                for (BoundId id : {BoundId::PB_2_7, BoundId::PB_2_8, BoundId::PB_2_9}) {
                    if (is_valid(id, nu, beta, x)) CHECK(check(id, nu, beta, x).strict);
                }
            }
        }
    }
}

TEST_CASE("integration-by-parts lower bounds are negative for small x") {
    CHECK(eval_bound(BoundId::LB_2_1, 0.0, 0.5, 0.05).value().sign() < 0);
    CHECK(eval_bound(BoundId::LB_2_1, -0.25, 0.25, 0.05).value().sign() < 0);
    CHECK(eval_bound(BoundId::LB_2_2, 2.0, 0.5, 0.5).value().sign() < 0);
    CHECK(eval_bound(BoundId::LB_2_2, 5.0, 0.1, 1.0).value().sign() < 0);
    // nu = 0: bound ~ -beta x^2 / (pi (1-beta)) as x -> 0
    const double x = 1e-3;
    const double beta = 0.5;
    const double v = eval_bound(BoundId::LB_2_1, 0.0, beta, x).value().to_double();
    CHECK(rel_err(v, -beta * x * x / (std::numbers::pi * (1.0 - beta))) < 1e-2);
}

TEST_CASE("tight as x grows") {
    struct Case {
        BoundId id;
        double nu;
        double beta;
    };
    const std::vector<double> xs{50.0, 100.0, 200.0, 400.0};
    for (const Case& c : {Case{BoundId::LB_2_1, 0.0, 0.25}, Case{BoundId::LB_2_1, -0.25, 0.5},
                          Case{BoundId::LB_2_2, 2.5, 0.5}, Case{BoundId::LB_2_3, 1.0, 0.5},
                          Case{BoundId::LB_2_6, 4.0, 0.05}}) {
        INFO(to_string(c.id) << " nu=" << c.nu << " beta=" << c.beta);
        double prev = -INFINITY;
        for (double x : xs) {
            const double r = ratio(eval_bound(c.id, c.nu, c.beta, x).value(), integral::F(c.nu, c.beta, x));
            CHECK(r > prev);
            prev = r;
        }
        CHECK(prev >= 0.9);
        CHECK(prev <= 1.0);
    }
}

TEST_CASE("K L products: monotone and bracketed") {
    const auto xs = testsupport::log_grid(1e-3, 200.0, 200);
    for (double nu : {-0.5, 0.0, 1.0, 5.0}) {
        INFO("nu=" << nu);
        double prev1 = INFINITY;
        double prev2 = INFINITY;
        for (double x : xs) {
            const double p1 = product(nu, x, 1.0) / x;
            const double p2 = product(nu, x, 2.0);
            CHECK(p1 < prev1);
            CHECK(p2 < prev2);
            CHECK(p2 > 0.5);
            CHECK(p2 < kl_upper(nu));
            prev1 = p1;
            prev2 = p2;
        }
        // left end approached at large x, right end at small x
        CHECK(std::fabs(product(nu, 1e-5, 2.0) - kl_upper(nu)) < 1e-3);
        CHECK(std::fabs(product(nu, 2000.0, 2.0) - 0.5) < 5e-3);
    }
}

TEST_CASE("factors and asymptotes") {
    CHECK(m_factor(0.5, 0.5, 4.0) == doctest::Approx(6.0));
    CHECK(m_factor(0.5, 0.5, 2.0 + 1e-6) > 1e5);
    for (double nu : {-0.25, 0.0, 2.0}) {
        for (double beta : {0.25, 0.75}) {
            const double xs = 2.0 / (1.0 - beta);
            const double first = (2.0 * nu + 3.0 + 4.0 / (1.0 - beta)) / (2.0 * nu + 1.0);
            CHECK(m_factor(nu, beta, xs) == doctest::Approx(std::max(first, 2.0 / (1.0 - beta))));
        }
    }
    CHECK_THROWS_AS(m_factor(0.5, 0.5, 2.0), DomainError);

    CHECK(a_factor(1.0) == 4.0);
    CHECK(a_factor(0.0) == 29.0);
    CHECK(a_factor(0.5) == 3.0);
    CHECK_THROWS_AS(a_factor(-0.5), DomainError);

    CHECK(product_asymptote(AsymptoteKind::large_x, 3.0).limit == 0.5);
    CHECK(product_asymptote(AsymptoteKind::large_x, 3.0).first_order == doctest::Approx(7.0 / 4.0));
    CHECK(product_asymptote(AsymptoteKind::small_x, 0.5).slope == doctest::Approx(0.5).epsilon(1e-13));
    const double nu = 1.0;
    CHECK(std::fabs(product(nu, 500.0, 1.0) - (0.5 + (2.0 * nu + 1.0) / 2000.0)) < 1e-3);
    // small x: x K_{nu+1} L_nu ~ slope * x
    const double x = 1e-4;
    CHECK(rel_err(product(0.25, x, 1.0), product_asymptote(AsymptoteKind::small_x, 0.25).slope * x) < 1e-3);
}
