#pragma once

#include <cmath>
#include <compare>
#include <string>

namespace struvebound {

/// A real number stored as mantissa * exp(exponent).
///
/// Used wherever values such as L_nu(x) ~ e^x / sqrt(2 pi x) or K_nu(x) ~ e^-x
/// leave the double range (x beyond ~700). The normalized form keeps
/// |mantissa| in [1, e) or mantissa == 0 (which then means the value is 0).
/// The exponent is an arbitrary real; normalization only shifts it by whole
/// numbers so no precision is lost to log/exp round trips.
class ScaledReal {
public:
    constexpr ScaledReal() = default;

    /// Construct from mantissa and exponent; the pair is normalized.
    ScaledReal(double mantissa, double exponent);

    static ScaledReal from_double(double value) { return ScaledReal(value, 0.0); }
    /// exp(log_value) with the given sign (+1 / -1).
    static ScaledReal from_log(double log_value, int sign = 1);
    static ScaledReal zero() { return ScaledReal(); }

    double mantissa() const { return mantissa_; }
    double exponent() const { return exponent_; }

    bool is_zero() const { return mantissa_ == 0.0; }
    int sign() const { return (mantissa_ > 0.0) - (mantissa_ < 0.0); }

    /// log|value|; -inf for zero.
    double log_abs() const;

    /// Plain value; may be +-inf or 0 when out of double range.
    double to_double() const;

    /// Plain value; throws OverflowError if it does not fit in a double
    /// (overflow, or a nonzero value that would underflow to 0).
    double value() const;

    /// value * exp(shift).
    ScaledReal times_exp(double shift) const { return ScaledReal(mantissa_, exponent_ + shift); }

    ScaledReal abs() const { return ScaledReal(std::fabs(mantissa_), exponent_); }

    ScaledReal operator-() const { return ScaledReal(-mantissa_, exponent_); }

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator*(const ScaledReal& a, double b) { return ScaledReal(a.mantissa_ * b, a.exponent_); }
    friend ScaledReal operator*(double a, const ScaledReal& b) { return b * a; }
    friend ScaledReal operator/(const ScaledReal& a, double b) { return ScaledReal(a.mantissa_ / b, a.exponent_); }

    ScaledReal& operator*=(const ScaledReal& o) { return *this = *this * o; }
    ScaledReal& operator+=(const ScaledReal& o) { return *this = *this + o; }
    ScaledReal& operator-=(const ScaledReal& o) { return *this = *this - o; }

    friend std::partial_ordering operator<=>(const ScaledReal& a, const ScaledReal& b);
    friend bool operator==(const ScaledReal& a, const ScaledReal& b) { return (a <=> b) == 0; }

    /// a / b as a plain double (the quotient must be representable).
    friend double ratio(const ScaledReal& a, const ScaledReal& b);

    std::string to_string() const;

private:
    void normalize();

    double mantissa_ = 0.0;
    double exponent_ = 0.0;
};

}  // namespace struvebound
