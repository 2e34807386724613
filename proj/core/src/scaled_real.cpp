#include "struvebound/scaled_real.hpp"

#include <cstdio>
#include <limits>

#include "struvebound/errors.hpp"

namespace struvebound {

namespace {
constexpr double kE = 2.718281828459045235360287;
}  // namespace

ScaledReal::ScaledReal(double mantissa, double exponent) : mantissa_(mantissa), exponent_(exponent) {
    normalize();
}

void ScaledReal::normalize() {
    if (mantissa_ == 0.0) {
        exponent_ = 0.0;
        return;
    }
    if (!std::isfinite(mantissa_) || !std::isfinite(exponent_)) {
        throw OverflowError("ScaledReal: non-finite mantissa or exponent");
    }
    double a = std::fabs(mantissa_);
    if (a < 1e-300 || a > 1e300) {
        int q = 0;
        double f = std::frexp(mantissa_, &q);
        mantissa_ = f;
        exponent_ += q * 0.6931471805599453094172321;
        a = std::fabs(mantissa_);
    }
    const double k = std::floor(std::log(a));
    if (k != 0.0) {
        mantissa_ *= std::exp(-k);
        exponent_ += k;
    }
    // log/exp rounding can leave the mantissa a hair outside [1, e)
    a = std::fabs(mantissa_);
    if (a >= kE) {
        mantissa_ /= kE;
        exponent_ += 1.0;
    } else if (a < 1.0) {
        mantissa_ *= kE;
        exponent_ -= 1.0;
    }
}

ScaledReal ScaledReal::from_log(double log_value, int sign) {
    if (log_value == -std::numeric_limits<double>::infinity() || sign == 0) {
        return ScaledReal();
    }
    const double k = std::floor(log_value);
    return ScaledReal(sign * std::exp(log_value - k), k);
}

double ScaledReal::log_abs() const {
    if (mantissa_ == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log(std::fabs(mantissa_)) + exponent_;
}

double ScaledReal::to_double() const {
    if (mantissa_ == 0.0) {
        return 0.0;
    }
    if (exponent_ > 709.0) {
        return mantissa_ * std::exp(exponent_ - 1.0) * kE;
    }
    if (exponent_ < -708.0) {
        // go through two factors so gradual underflow still applies
        return mantissa_ * std::exp(exponent_ + 200.0) * std::exp(-200.0);
    }
    return mantissa_ * std::exp(exponent_);
}

double ScaledReal::value() const {
    const double v = to_double();
    if (!std::isfinite(v) || (v == 0.0 && !is_zero())) {
        throw OverflowError("value outside double range (log|v| = " + std::to_string(log_abs()) +
                            "); use the scaled variant");
    }
    return v;
}

ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    return ScaledReal(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    if (b.mantissa_ == 0.0) {
        throw DomainError("ScaledReal: division by zero");
    }
    return ScaledReal(a.mantissa_ / b.mantissa_, a.exponent_ - b.exponent_);
}

ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.mantissa_ == 0.0) {
        return b;
    }
    if (b.mantissa_ == 0.0) {
        return a;
    }
    if (a.exponent_ >= b.exponent_) {
        const double d = b.exponent_ - a.exponent_;
        return ScaledReal(a.mantissa_ + (d < -745.0 ? 0.0 : b.mantissa_ * std::exp(d)), a.exponent_);
    }
    const double d = a.exponent_ - b.exponent_;
    return ScaledReal(b.mantissa_ + (d < -745.0 ? 0.0 : a.mantissa_ * std::exp(d)), b.exponent_);
}

ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) {
    return a + (-b);
}

std::partial_ordering operator<=>(const ScaledReal& a, const ScaledReal& b) {
    const ScaledReal d = a - b;
    return d.mantissa_ <=> 0.0;
}

double ratio(const ScaledReal& a, const ScaledReal& b) {
    if (b.mantissa_ == 0.0) {
        throw DomainError("ScaledReal: ratio with zero denominator");
    }
    return (a.mantissa_ / b.mantissa_) * std::exp(a.exponent_ - b.exponent_);
}

std::string ScaledReal::to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g*exp(%.17g)", mantissa_, exponent_);
    return buf;
}

}  // namespace struvebound
