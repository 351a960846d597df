#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace relclass {

namespace detail {
// One conservative ulp-scale slack per floating operation.  2^-50 is a
// few bits above the true double rounding error, so chains of operations
// stay rigorous without directed rounding.
inline double op_slack(double v) {
    return std::abs(v) * 0x1p-50 + std::numeric_limits<double>::denorm_min();
}
} // namespace detail

/// A floating value paired with a rigorous absolute error bound.
/// The true quantity lies in [value - abs_error, value + abs_error].
struct BoundedValue {
    double value = 0.0;
    double abs_error = 0.0;

    BoundedValue() = default;
    BoundedValue(double v, double e) : value(v), abs_error(e) {
        if (!(e >= 0.0) || !std::isfinite(e))
            throw std::invalid_argument("BoundedValue: error bound must be finite and >= 0");
    }
    static BoundedValue exact(double v) { return BoundedValue(v, 0.0); }

    double upper() const { return value + abs_error; }
    double lower() const { return value - abs_error; }
    bool contains(double x) const { return lower() <= x && x <= upper(); }
};

inline BoundedValue operator+(const BoundedValue& a, const BoundedValue& b) {
    double v = a.value + b.value;
    return {v, a.abs_error + b.abs_error + detail::op_slack(v)};
}
inline BoundedValue operator-(const BoundedValue& a, const BoundedValue& b) {
    double v = a.value - b.value;
    return {v, a.abs_error + b.abs_error + detail::op_slack(v)};
}
inline BoundedValue operator-(const BoundedValue& a) { return {-a.value, a.abs_error}; }
inline BoundedValue operator*(const BoundedValue& a, const BoundedValue& b) {
    double v = a.value * b.value;
    double e = std::abs(a.value) * b.abs_error + std::abs(b.value) * a.abs_error +
               a.abs_error * b.abs_error + detail::op_slack(v);
    return {v, e};
}
inline BoundedValue operator*(double c, const BoundedValue& a) {
    return BoundedValue::exact(c) * a;
}
inline BoundedValue operator/(const BoundedValue& a, const BoundedValue& b) {
    double denom_low = std::abs(b.value) - b.abs_error;
    if (denom_low <= 0.0) throw std::domain_error("BoundedValue: division by interval containing 0");
    double v = a.value / b.value;
    double e = (a.abs_error + std::abs(v) * b.abs_error) / denom_low + detail::op_slack(v);
    return {v, e};
}

inline BoundedValue bv_abs(const BoundedValue& a) { return {std::abs(a.value), a.abs_error}; }

/// log of a strictly positive interval.
inline BoundedValue bv_log(const BoundedValue& a) {
    double low = a.value - a.abs_error;
    if (low <= 0.0) throw std::domain_error("BoundedValue: log of interval reaching 0");
    double v = std::log(a.value);
    // |log(x) - log(v)| <= err/low on [low, high]
    double e = a.abs_error / low + detail::op_slack(v) + 4e-16;
    return {v, e};
}

inline BoundedValue bv_exp(const BoundedValue& a) {
    double v = std::exp(a.value);
    double e = v * std::expm1(a.abs_error) + detail::op_slack(v) + 4e-16 * v;
    if (!std::isfinite(v) || !std::isfinite(e))
        throw std::domain_error("BoundedValue: exp overflow");
    return {v, e};
}

inline BoundedValue bv_sqrt(const BoundedValue& a) {
    double low = a.value - a.abs_error;
    if (low < 0.0) throw std::domain_error("BoundedValue: sqrt of negative interval");
    double v = std::sqrt(a.value);
    double e = (v > 0 ? a.abs_error / (std::sqrt(low) + v) : std::sqrt(a.abs_error)) +
               detail::op_slack(v);
    return {v, e};
}

/// pi^2 as an interval (value correct to the last double bit).
inline BoundedValue bv_pi_squared() {
    return {9.869604401089358, 4e-15};
}

/// A quantity carried on the logarithmic scale; exp() of it may exceed
/// double range (relative class numbers grow like p^{m/4}).
struct LogBounded {
    double log_value = 0.0;
    double log_abs_error = 0.0;

    long double value_ld() const { return std::exp((long double)log_value); }

    /// Interval in value space; requires the value to fit in a double.
    BoundedValue to_bounded() const {
        double v = std::exp(log_value);
        if (!std::isfinite(v)) throw std::domain_error("LogBounded: value exceeds double range");
        double e = v * std::expm1(log_abs_error) + detail::op_slack(v);
        return {v, e};
    }
    bool representable() const { return std::isfinite(std::exp(log_value)); }
};

/// Complex value with a rigorous bound on |computed - true|.
struct ComplexBounded {
    std::complex<double> value;
    double abs_error = 0.0;

    BoundedValue modulus() const { return {std::abs(value), abs_error + detail::op_slack(std::abs(value))}; }
};

} // namespace relclass
