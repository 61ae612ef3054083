#pragma once

#include <cmath>

namespace rpnn {

enum class ActivationKind { logistic_sigmoid };

/// Logistic sigmoid 1/(1+exp(-z)); the branch on the sign of z keeps the
/// exponent non-positive so large |z| cannot overflow.
inline double logistic(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

/// d/dz logistic(z) = logistic(z) * (1 - logistic(z)), evaluated via the
/// symmetric form exp(-|z|)/(1+exp(-|z|))^2.
inline double logistic_derivative(double z) {
    const double e = std::exp(-std::abs(z));
    const double d = 1.0 + e;
    return e / (d * d);
}

/// Activation function tag plus scalar value/derivative maps. Only the
/// logistic sigmoid ships; the enumeration leaves room for more.
struct Activation {
    ActivationKind kind = ActivationKind::logistic_sigmoid;

    double value(double z) const { return logistic(z); }
    double derivative(double z) const { return logistic_derivative(z); }
};

} // namespace rpnn
