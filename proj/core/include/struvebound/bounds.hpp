#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "struvebound/scaled_real.hpp"

/// Catalog of inequalities for F_{nu,beta}, G_{nu,beta}, Struve/Bessel ratios
/// and K*L products, each with its hypothesis and a margin check against an
/// independently computed reference.
namespace struvebound::bounds {

enum class BoundId {
    LB_2_1,
    LB_2_2,
    LB_2_3,
    LB_2_6,
    LB_PRIOR,
    UB_2_4,
    UB_2_5,
    UB_GAU1,
    UB_GAU1_FULL,
    UB_GAU2,
    UB_ANU,
    UB_3_8,
    PB_2_7,
    PB_2_8,
    PB_2_9,
    RB_3_1,
    RB_AUG18,
    RB_NASELL,
    RB_SEGURA,
    PRB_KL1,
    PRB_KL0,
    PRB_KL2,
    PRB_G1,
    PRB_G2,
    PRB_G3,
    NB_3_10,
    NB_3_11,
    IMON,
};

inline constexpr int kBoundCount = 28;

/// "LB-2.1" style name.
std::string_view to_string(BoundId id);
/// Inverse of to_string; nullopt for an unknown name.
std::optional<BoundId> parse_bound_id(std::string_view name);

enum class Side { lower, upper, two_sided };
enum class Target {
    f_integral,
    g_integral,
    struve_ratio,
    bessel_i_ratio,
    bessel_k_ratio,
    kl_product,
    k_weighted_integral,
};

std::string_view to_string(Side side);
std::string_view to_string(Target target);

struct BoundOptions {
    /// UB-3.8 only; defaults to 2/(1-beta).
    std::optional<double> x_star;
    /// LB-2.3 only: sum exactly this many terms (k = 0..K-1).
    std::optional<int> truncation;
};

struct BoundSpec {
    BoundId id;
    Side side;
    Target target;
    bool uses_beta;
    /// Human-readable statement of the inequality.
    std::string_view statement;
    /// Human-readable hypothesis.
    std::string_view hypothesis;
    /// Where the bound becomes tight, if anywhere ("x->inf", "x->0", "x->0, x->inf").
    std::string_view tight_limits;
};

std::span<const BoundSpec> list_bounds();
const BoundSpec& spec(BoundId id);

/// Failed hypothesis, or nullopt when (nu, beta, x, opts) is inside the validity region.
std::optional<std::string> violated_hypothesis(BoundId id, double nu, double beta, double x,
                                               const BoundOptions& opts = {});
bool is_valid(BoundId id, double nu, double beta, double x, const BoundOptions& opts = {});

/// One or both sides of a bound.
struct BoundValue {
    std::optional<ScaledReal> lower;
    std::optional<ScaledReal> upper;

    /// The single side of a one-sided bound.
    const ScaledReal& value() const { return lower ? *lower : *upper; }
};

/// Right-hand side of the inequality. Throws ValidityError outside the hypothesis.
BoundValue eval_bound(BoundId id, double nu, double beta, double x, const BoundOptions& opts = {});

/// Quantity the bound is asserted against (F, G, a ratio, a product, ...).
ScaledReal reference_value(BoundId id, double nu, double beta, double x);

/// Relative accuracy assumed for reference_value.
double reference_accuracy(BoundId id);

enum class Status { strict, inconclusive, violated };
std::string_view to_string(Status status);

struct Margin {
    ScaledReal bound_value;
    ScaledReal reference_value;
    /// (reference - bound)/reference for lower bounds, (bound - reference)/reference
    /// for upper bounds; the smaller side for two-sided bounds.
    double signed_margin = 0.0;
    bool strict = false;
    /// A nonpositive margin smaller in magnitude than 10x the reference accuracy
    /// is inconclusive rather than violated.
    Status status = Status::violated;
};

Margin check(BoundId id, double nu, double beta, double x, const BoundOptions& opts = {});

/// max{(2nu+3+2x*)/(2nu+1), x*/((1-beta)x* - 1)}; nu > -1/2, 0 < beta < 1, x* > 1/(1-beta).
double m_factor(double nu, double beta, double x_star);

/// 2(nu+1) for nu >= 1/2, 2nu+29 for -1/2 < nu < 1/2.
double a_factor(double nu);

enum class AsymptoteKind { small_x, large_x };

/// Behaviour of x K_{nu+1}(x) L_nu(x): ~ slope*x as x -> 0, ~ limit + first_order/x as x -> inf.
struct ProductAsymptote {
    double slope = 0.0;
    double limit = 0.0;
    double first_order = 0.0;
};

ProductAsymptote product_asymptote(AsymptoteKind kind, double nu);

}  // namespace struvebound::bounds
