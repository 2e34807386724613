#include "struvebound/bounds.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "struvebound/errors.hpp"
#include "struvebound/integral.hpp"
#include "struvebound/specfun.hpp"

namespace struvebound::bounds {

namespace {

constexpr double kLogSqrtPi = 0.57236494292470008707;
constexpr double kSeriesTailTolerance = 1e-12;
constexpr int kSeriesTermLimit = specfun::kSeriesTermCap;

// clang-format off
constexpr std::array<BoundSpec, kBoundCount> kCatalog{{
    {BoundId::LB_2_1, Side::lower, Target::f_integral, true,
     "F > (E L_nu - C) / (1-beta), E = e^{-beta x} x^nu, C = gamma(2nu+1, beta x) / (sqrt(pi) 2^nu beta^{2nu+1} Gamma(nu+3/2))",
     "-1/2 < nu <= 0, 0 < beta < 1, x > 0", "x->inf"},
    {BoundId::LB_2_2, Side::lower, Target::f_integral, true,
     "F > ((1 - 4nu^2/((2nu-1)(1-beta)x)) E L_nu - C) / (1-beta)",
     "nu >= 3/2, 0 < beta < 1, x > 0", "x->inf"},
    {BoundId::LB_2_3, Side::lower, Target::f_integral, true,
     "F > E sum_{k>=0} beta^k L_{nu+k+1}",
     "nu > -1, 0 < beta < 1, x > 0", "x->inf"},
    {BoundId::LB_2_6, Side::lower, Target::f_integral, true,
     "F > ((1 - 2nu(2nu+27)/((2nu-1)(1-beta)x)) E L_nu - C) / (1-beta)",
     "nu > 1/2, 0 < beta < 1, x > 0", "x->inf"},
    {BoundId::LB_PRIOR, Side::lower, Target::f_integral, true,
     "F > E L_{nu+1}",
     "nu > -1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::UB_2_4, Side::upper, Target::f_integral, true,
     "F < (2nu+29)/((2nu+1)(1-beta)) E L_{nu+1}",
     "nu > -1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::UB_2_5, Side::upper, Target::f_integral, true,
     "F < (2nu+15)/((2nu+1)(1-beta)) E L_nu",
     "nu > -1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::UB_GAU1, Side::upper, Target::f_integral, true,
     "F < 2(nu+1)/((2nu+1)(1-beta)) E L_{nu+1}",
     "nu >= 1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::UB_GAU1_FULL, Side::upper, Target::f_integral, true,
     "F < E/((2nu+1)(1-beta)) (2(nu+1) L_{nu+1} - L_{nu+3} - x^{nu+2}/(sqrt(pi) 2^{nu+2} (nu+1) Gamma(nu+5/2)))",
     "nu >= 1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::UB_GAU2, Side::upper, Target::f_integral, true,
     "F < E L_nu / (1-beta)",
     "nu >= 1/2, 0 < beta < 1, x > 0", "x->inf"},
    {BoundId::UB_ANU, Side::upper, Target::f_integral, true,
     "F < A_nu/((2nu+1)(1-beta)) E L_{nu+1}, A_nu = 2(nu+1) (nu >= 1/2), 2nu+29 (|nu| < 1/2)",
     "nu > -1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::UB_3_8, Side::upper, Target::f_integral, true,
     "F < M(x*) E L_{nu+1}, M(x*) = max{(2nu+3+2x*)/(2nu+1), x*/((1-beta)x* - 1)}",
     "nu > -1/2, 0 < beta < 1, x* > 1/(1-beta), x >= x*", ""},
    {BoundId::PB_2_7, Side::lower, Target::g_integral, true,
     "G > (E L_nu - C) / (1-beta)",
     "-1/2 < nu <= 0, 0 < beta < 1, x > 0", ""},
    {BoundId::PB_2_8, Side::lower, Target::g_integral, true,
     "G > ((1 - 4nu^2/((2nu-1)(1-beta)x)) E L_nu - C) / (1-beta)",
     "nu >= 3/2, 0 < beta < 1, x > 0", ""},
    {BoundId::PB_2_9, Side::lower, Target::g_integral, true,
     "G > ((1 - 2nu(2nu+27)/((2nu-1)(1-beta)x)) E L_nu - C) / (1-beta)",
     "nu > 1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::RB_3_1, Side::lower, Target::struve_ratio, false,
     "L_nu/L_{nu-1} > x/(2nu+1+x)",
     "nu > 0, x > 0", "x->0, x->inf"},
    {BoundId::RB_AUG18, Side::lower, Target::struve_ratio, false,
     "L_nu/L_{nu-1} > (I_{nu-1}/I_nu + 1/x)^{-1}",
     "nu >= 0, x > 0", ""},
    {BoundId::RB_NASELL, Side::lower, Target::bessel_i_ratio, false,
     "I_nu/I_{nu-1} > x/(2nu+x)",
     "nu > 0, x > 0", ""},
    {BoundId::RB_SEGURA, Side::upper, Target::bessel_k_ratio, false,
     "K_nu/K_{nu-1} < (nu-1/2+sqrt((nu-1/2)^2+x^2))/x < 1+(2nu-1)/x",
     "nu > 1/2, x > 0", ""},
    {BoundId::PRB_KL1, Side::two_sided, Target::kl_product, false,
     "1/2 < x K_{nu+2} L_nu < 2 Gamma(nu+2)/(sqrt(pi) Gamma(nu+3/2))",
     "nu >= -1/2, x > 0", "x->0, x->inf"},
    {BoundId::PRB_KL0, Side::upper, Target::kl_product, false,
     "x K_{nu+1} L_nu < 1",
     "nu >= -1/2, x > 0", ""},
    {BoundId::PRB_KL2, Side::upper, Target::kl_product, false,
     "x K_{nu+3} L_nu < 2 Gamma(nu+2)/(sqrt(pi) Gamma(nu+3/2)) (1 + (2nu+5)/x)",
     "nu >= -1/2, x > 0", ""},
    {BoundId::PRB_G1, Side::upper, Target::kl_product, false,
     "x K_{nu+2} L_nu < 3/2",
     "-1/2 <= nu <= 1/2, x > 0", ""},
    {BoundId::PRB_G2, Side::upper, Target::kl_product, false,
     "x K_{nu+3} L_nu < 3/2 + 9/x",
     "-1/2 <= nu <= 1/2, x > 0", ""},
    {BoundId::PRB_G3, Side::upper, Target::kl_product, false,
     "x K_{nu+3} L_{nu+1} < 15/8",
     "-1/2 <= nu <= 1/2, x > 0", ""},
    {BoundId::NB_3_10, Side::upper, Target::k_weighted_integral, true,
     "e^{beta x} K_{nu+3} x^{1-nu} F < 14/((2nu+1)(1-beta))",
     "-1/2 < nu <= 1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::NB_3_11, Side::upper, Target::k_weighted_integral, true,
     "e^{beta x} K_{nu+2} x^{1-nu} F < 7/((2nu+1)(1-beta))",
     "-1/2 < nu <= 1/2, 0 < beta < 1, x > 0", ""},
    {BoundId::IMON, Side::upper, Target::struve_ratio, false,
     "L_nu/L_{nu-1} < 1",
     "nu >= 1/2, x > 0", ""},
}};
// clang-format on

constexpr std::array<std::string_view, kBoundCount> kNames{
    "LB-2.1",   "LB-2.2",       "LB-2.3",    "LB-2.6",    "LB-PRIOR", "UB-2.4",    "UB-2.5",
    "UB-GAU1",  "UB-GAU1-FULL", "UB-GAU2",   "UB-ANU",    "UB-3.8",   "PB-2.7",    "PB-2.8",
    "PB-2.9",   "RB-3.1",       "RB-AUG18",  "RB-NASELL", "RB-SEGURA", "PRB-KL1", "PRB-KL0",
    "PRB-KL2",  "PRB-G1",       "PRB-G2",    "PRB-G3",    "NB-3.10",  "NB-3.11",   "IMON",
};

int index_of(BoundId id) { return static_cast<int>(id); }

double x_star_or_default(double beta, const BoundOptions& opts) {
    return opts.x_star ? *opts.x_star : 2.0 / (1.0 - beta);
}

// nu-interval helpers returning the failed clause or nothing
std::optional<std::string> need(bool ok, const char* clause) {
    if (ok) return std::nullopt;
    return std::string(clause);
}

std::optional<std::string> nu_hypothesis(BoundId id, double nu) {
    switch (id) {
        case BoundId::LB_2_1:
        case BoundId::PB_2_7: return need(nu > -0.5 && nu <= 0.0, "-1/2 < nu <= 0");
        case BoundId::LB_2_2:
        case BoundId::PB_2_8: return need(nu >= 1.5, "nu >= 3/2");
        case BoundId::LB_2_3: return need(nu > -1.0, "nu > -1");
        case BoundId::LB_2_6:
        case BoundId::PB_2_9: return need(nu > 0.5, "nu > 1/2");
        case BoundId::LB_PRIOR:
        case BoundId::UB_2_4:
        case BoundId::UB_2_5:
        case BoundId::UB_ANU:
        case BoundId::UB_3_8: return need(nu > -0.5, "nu > -1/2");
        case BoundId::UB_GAU1:
        case BoundId::UB_GAU1_FULL:
        case BoundId::UB_GAU2:
        case BoundId::IMON: return need(nu >= 0.5, "nu >= 1/2");
        case BoundId::RB_3_1:
        case BoundId::RB_NASELL: return need(nu > 0.0, "nu > 0");
        case BoundId::RB_AUG18: return need(nu >= 0.0, "nu >= 0");
        case BoundId::RB_SEGURA: return need(nu > 0.5, "nu > 1/2");
        case BoundId::PRB_KL1:
        case BoundId::PRB_KL0:
        case BoundId::PRB_KL2: return need(nu >= -0.5, "nu >= -1/2");
        case BoundId::PRB_G1:
        case BoundId::PRB_G2:
        case BoundId::PRB_G3: return need(nu >= -0.5 && nu <= 0.5, "-1/2 <= nu <= 1/2");
        case BoundId::NB_3_10:
        case BoundId::NB_3_11: return need(nu > -0.5 && nu <= 0.5, "-1/2 < nu <= 1/2");
    }
    return std::nullopt;
}

void require_valid(BoundId id, double nu, double beta, double x, const BoundOptions& opts) {
    if (auto failed = violated_hypothesis(id, nu, beta, x, opts)) {
        throw ValidityError(std::string(to_string(id)) + ": hypothesis " + *failed + " fails at nu=" +
                            std::to_string(nu) + " beta=" + std::to_string(beta) + " x=" + std::to_string(x));
    }
}

ScaledReal struve(double mu, double x) { return specfun::struve_l_scaled(mu, x).times_exp(x); }
ScaledReal bessel_k(double mu, double x) { return specfun::bessel_k_scaled(mu, x).times_exp(-x); }

// e^{-beta x} x^nu L_mu(x)
ScaledReal weighted_struve(double mu, double nu, double beta, double x) {
    return specfun::struve_l_scaled(mu, x).times_exp((1.0 - beta) * x + nu * std::log(x));
}

// gamma(2nu+1, beta x) / (sqrt(pi) 2^nu beta^{2nu+1} Gamma(nu+3/2))
ScaledReal gamma_term(double nu, double beta, double x) {
    return specfun::lower_incomplete_gamma_wide(2.0 * nu + 1.0, beta * x)
        .times_exp(-kLogSqrtPi - nu * std::numbers::ln2 - (2.0 * nu + 1.0) * std::log(beta) -
                   specfun::log_gamma(nu + 1.5));
}

// ((1 - c/((1-beta)x)) E L_nu - C) / (1-beta)
ScaledReal integration_by_parts_bound(double c, double nu, double beta, double x) {
    const double factor = 1.0 - c / ((1.0 - beta) * x);
    return (weighted_struve(nu, nu, beta, x) * factor - gamma_term(nu, beta, x)) / (1.0 - beta);
}

ScaledReal struve_sum(double nu, double beta, double x, const BoundOptions& opts) {
    ScaledReal sum;
    if (opts.truncation) {
        for (int k = 0; k < *opts.truncation; ++k) {
            sum += specfun::struve_l_scaled(nu + k + 1.0, x) * std::pow(beta, k);
        }
    } else {
        // L_{nu+k+1} decreases in k for nu > -1, so beta^K L_{nu+K+1}/(1-beta)
        // bounds everything from term K on
        int k = 0;
        for (;; ++k) {
            if (k >= kSeriesTermLimit) throw ConvergenceError("LB-2.3: series term cap reached");
            const ScaledReal term = specfun::struve_l_scaled(nu + k + 1.0, x) * std::pow(beta, k);
            if (k > 0 && term / (1.0 - beta) < sum * kSeriesTailTolerance) break;
            sum += term;
        }
    }
    return sum.times_exp((1.0 - beta) * x + nu * std::log(x));
}

double kl_constant(double nu) {
    return 2.0 * std::exp(specfun::log_gamma(nu + 2.0) - kLogSqrtPi - specfun::log_gamma(nu + 1.5));
}

// x K_{nu+k_shift}(x) L_{nu+l_shift}(x)
ScaledReal kl_product(double nu, double x, double k_shift, double l_shift) {
    return specfun::bessel_k_scaled(nu + k_shift, x) * specfun::struve_l_scaled(nu + l_shift, x) * x;
}

double segura_middle(double nu, double x) {
    const double a = nu - 0.5;
    return (a + std::hypot(a, x)) / x;
}

double relative_margin(Side side, const ScaledReal& bound, const ScaledReal& reference) {
    const ScaledReal diff = side == Side::lower ? reference - bound : bound - reference;
    if (diff.is_zero()) return 0.0;
    return ratio(diff, reference);
}

}  // namespace

std::string_view to_string(BoundId id) { return kNames[index_of(id)]; }

std::optional<BoundId> parse_bound_id(std::string_view name) {
    for (int i = 0; i < kBoundCount; ++i) {
        if (kNames[i] == name) return static_cast<BoundId>(i);
    }
    return std::nullopt;
}

std::string_view to_string(Side side) {
    switch (side) {
        case Side::lower: return "lower";
        case Side::upper: return "upper";
        case Side::two_sided: return "two-sided";
    }
    return "?";
}

std::string_view to_string(Target target) {
    switch (target) {
        case Target::f_integral: return "F-integral";
        case Target::g_integral: return "G-integral";
        case Target::struve_ratio: return "Struve-ratio";
        case Target::bessel_i_ratio: return "BesselI-ratio";
        case Target::bessel_k_ratio: return "BesselK-ratio";
        case Target::kl_product: return "KL-product";
        case Target::k_weighted_integral: return "K-weighted-integral";
    }
    return "?";
}

std::string_view to_string(Status status) {
    switch (status) {
        case Status::strict: return "strict";
        case Status::inconclusive: return "inconclusive";
        case Status::violated: return "violated";
    }
    return "?";
}

std::span<const BoundSpec> list_bounds() { return kCatalog; }

const BoundSpec& spec(BoundId id) { return kCatalog[index_of(id)]; }

std::optional<std::string> violated_hypothesis(BoundId id, double nu, double beta, double x,
                                               const BoundOptions& opts) {
    if (!std::isfinite(nu) || !std::isfinite(x)) return std::string("finite arguments");
    if (auto failed = nu_hypothesis(id, nu)) return failed;
    if (!(x > 0.0)) return std::string("x > 0");
    if (spec(id).uses_beta && !(beta > 0.0 && beta < 1.0)) return std::string("0 < beta < 1");
    if (id == BoundId::UB_3_8) {
        const double x_star = x_star_or_default(beta, opts);
        if (!(x_star > 1.0 / (1.0 - beta))) return std::string("x* > 1/(1-beta)");
        if (!(x >= x_star)) return std::string("x >= x*");
    }
    if (opts.truncation && id == BoundId::LB_2_3 && *opts.truncation < 1) {
        return std::string("truncation >= 1");
    }
    return std::nullopt;
}

bool is_valid(BoundId id, double nu, double beta, double x, const BoundOptions& opts) {
    return !violated_hypothesis(id, nu, beta, x, opts);
}

BoundValue eval_bound(BoundId id, double nu, double beta, double x, const BoundOptions& opts) {
    require_valid(id, nu, beta, x, opts);
    const auto plain = [](double v) { return ScaledReal::from_double(v); };
    const double two_nu_1 = 2.0 * nu + 1.0;
    BoundValue out;
    auto& lower = out.lower;
    auto& upper = out.upper;
    switch (id) {
        case BoundId::LB_2_1:
        case BoundId::PB_2_7:
            lower = integration_by_parts_bound(0.0, nu, beta, x);
            break;
        case BoundId::LB_2_2:
        case BoundId::PB_2_8:
            lower = integration_by_parts_bound(4.0 * nu * nu / (2.0 * nu - 1.0), nu, beta, x);
            break;
        case BoundId::LB_2_6:
        case BoundId::PB_2_9:
            lower = integration_by_parts_bound(2.0 * nu * (2.0 * nu + 27.0) / (2.0 * nu - 1.0), nu, beta, x);
            break;
        case BoundId::LB_2_3: lower = struve_sum(nu, beta, x, opts); break;
        case BoundId::LB_PRIOR: lower = weighted_struve(nu + 1.0, nu, beta, x); break;
        case BoundId::UB_2_4:
            upper = weighted_struve(nu + 1.0, nu, beta, x) * ((2.0 * nu + 29.0) / (two_nu_1 * (1.0 - beta)));
            break;
        case BoundId::UB_2_5:
            upper = weighted_struve(nu, nu, beta, x) * ((2.0 * nu + 15.0) / (two_nu_1 * (1.0 - beta)));
            break;
        case BoundId::UB_GAU1:
            upper = weighted_struve(nu + 1.0, nu, beta, x) * (2.0 * (nu + 1.0) / (two_nu_1 * (1.0 - beta)));
            break;
        case BoundId::UB_GAU1_FULL: {
            const ScaledReal power_term = ScaledReal::from_log(
                (nu + 2.0) * std::log(x) - kLogSqrtPi - (nu + 2.0) * std::numbers::ln2 - std::log(nu + 1.0) -
                specfun::log_gamma(nu + 2.5));
            const ScaledReal inner = struve(nu + 1.0, x) * (2.0 * (nu + 1.0)) - struve(nu + 3.0, x) - power_term;
            upper = inner.times_exp(-beta * x + nu * std::log(x)) / (two_nu_1 * (1.0 - beta));
            break;
        }
        case BoundId::UB_GAU2: upper = weighted_struve(nu, nu, beta, x) / (1.0 - beta); break;
        case BoundId::UB_ANU:
            upper = weighted_struve(nu + 1.0, nu, beta, x) * (a_factor(nu) / (two_nu_1 * (1.0 - beta)));
            break;
        case BoundId::UB_3_8:
            upper = weighted_struve(nu + 1.0, nu, beta, x) * m_factor(nu, beta, x_star_or_default(beta, opts));
            break;
        case BoundId::RB_3_1: lower = plain(x / (two_nu_1 + x)); break;
        case BoundId::RB_AUG18:
            lower = plain(1.0 / (ratio(specfun::bessel_i_scaled(nu - 1.0, x), specfun::bessel_i_scaled(nu, x)) +
                                 1.0 / x));
            break;
        case BoundId::RB_NASELL: lower = plain(x / (2.0 * nu + x)); break;
        case BoundId::RB_SEGURA: upper = plain(segura_middle(nu, x)); break;
        case BoundId::PRB_KL1:
            lower = plain(0.5);
            upper = plain(kl_constant(nu));
            break;
        case BoundId::PRB_KL0: upper = plain(1.0); break;
        case BoundId::PRB_KL2: upper = plain(kl_constant(nu) * (1.0 + (2.0 * nu + 5.0) / x)); break;
        case BoundId::PRB_G1: upper = plain(1.5); break;
        case BoundId::PRB_G2: upper = plain(1.5 + 9.0 / x); break;
        case BoundId::PRB_G3: upper = plain(15.0 / 8.0); break;
        case BoundId::NB_3_10: upper = plain(14.0 / (two_nu_1 * (1.0 - beta))); break;
        case BoundId::NB_3_11: upper = plain(7.0 / (two_nu_1 * (1.0 - beta))); break;
        case BoundId::IMON: upper = plain(1.0); break;
    }
    return out;
}

ScaledReal reference_value(BoundId id, double nu, double beta, double x) {
    switch (spec(id).target) {
        case Target::f_integral: return integral::F(nu, beta, x);
        case Target::g_integral: return integral::G(nu, beta, x);
        case Target::struve_ratio:
            return specfun::struve_l_scaled(nu, x) / specfun::struve_l_scaled(nu - 1.0, x);
        case Target::bessel_i_ratio:
            return specfun::bessel_i_scaled(nu, x) / specfun::bessel_i_scaled(nu - 1.0, x);
        case Target::bessel_k_ratio:
            return specfun::bessel_k_scaled(nu, x) / specfun::bessel_k_scaled(nu - 1.0, x);
        case Target::kl_product:
            switch (id) {
                case BoundId::PRB_KL0: return kl_product(nu, x, 1.0, 0.0);
                case BoundId::PRB_KL2:
                case BoundId::PRB_G2: return kl_product(nu, x, 3.0, 0.0);
                case BoundId::PRB_G3: return kl_product(nu, x, 3.0, 1.0);
                default: return kl_product(nu, x, 2.0, 0.0);
            }
        case Target::k_weighted_integral: {
            const double shift = id == BoundId::NB_3_10 ? 3.0 : 2.0;
            return bessel_k(nu + shift, x).times_exp(beta * x + (1.0 - nu) * std::log(x)) *
                   integral::F(nu, beta, x);
        }
    }
    throw DomainError("reference_value: unknown target");
}

double reference_accuracy(BoundId id) {
    switch (spec(id).target) {
        case Target::f_integral:
        case Target::g_integral:
        case Target::k_weighted_integral: return 1e-9;
        default: return 1e-10;
    }
}

Margin check(BoundId id, double nu, double beta, double x, const BoundOptions& opts) {
    const BoundValue bound = eval_bound(id, nu, beta, x, opts);
    Margin m;
    m.reference_value = reference_value(id, nu, beta, x);
    if (bound.lower && bound.upper) {
        const double lo = relative_margin(Side::lower, *bound.lower, m.reference_value);
        const double hi = relative_margin(Side::upper, *bound.upper, m.reference_value);
        m.signed_margin = std::min(lo, hi);
        m.bound_value = lo <= hi ? *bound.lower : *bound.upper;
    } else {
        m.bound_value = bound.value();
        m.signed_margin = relative_margin(bound.lower ? Side::lower : Side::upper, m.bound_value, m.reference_value);
    }
    if (id == BoundId::RB_SEGURA) {
        // the weaker right-hand form must also dominate the middle one
        const double middle = segura_middle(nu, x);
        const double weak = 1.0 + (2.0 * nu - 1.0) / x;
        m.signed_margin = std::min(m.signed_margin, (weak - middle) / m.reference_value.to_double());
    }
    m.strict = m.signed_margin > 0.0;
    if (m.strict) {
        m.status = Status::strict;
    } else if (-m.signed_margin < 10.0 * reference_accuracy(id)) {
        m.status = Status::inconclusive;
    } else {
        m.status = Status::violated;
    }
    return m;
}

double m_factor(double nu, double beta, double x_star) {
    if (!(nu > -0.5)) throw DomainError("m_factor: nu > -1/2 required");
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("m_factor: 0 < beta < 1 required");
    if (!(x_star > 1.0 / (1.0 - beta))) throw DomainError("m_factor: x* > 1/(1-beta) required");
    const double first = (2.0 * nu + 3.0 + 2.0 * x_star) / (2.0 * nu + 1.0);
    const double second = x_star / ((1.0 - beta) * x_star - 1.0);
    return std::max(first, second);
}

double a_factor(double nu) {
    if (!(nu > -0.5)) throw DomainError("a_factor: nu > -1/2 required");
    return nu >= 0.5 ? 2.0 * (nu + 1.0) : 2.0 * nu + 29.0;
}

ProductAsymptote product_asymptote(AsymptoteKind kind, double nu) {
    if (!(nu > -0.5)) throw DomainError("product_asymptote: nu > -1/2 required");
    ProductAsymptote a;
    if (kind == AsymptoteKind::small_x) {
        a.slope = std::exp(specfun::log_gamma(nu + 1.0) - kLogSqrtPi - specfun::log_gamma(nu + 1.5));
    } else {
        a.limit = 0.5;
        a.first_order = (2.0 * nu + 1.0) / 4.0;
    }
    return a;
}

}  // namespace struvebound::bounds
