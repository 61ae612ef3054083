#pragma once

#include <cmath>
#include <stdexcept>

namespace rpnn {

/// Closed interval [lo, hi].
struct Interval {
    double lo = -1.0;
    double hi = 1.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
    bool degenerate() const { return !(hi > lo); }
};

/// Affine map [a,b] -> [-1,1]:  x~ = (2x - a - b) / (b - a).
inline double to_unit(const Interval& iv, double x) {
    if (iv.degenerate()) throw std::invalid_argument("interval is degenerate");
    return (2.0 * x - iv.lo - iv.hi) / iv.width();
}

/// Inverse of to_unit: [-1,1] -> [a,b].
inline double from_unit(const Interval& iv, double t) {
    if (iv.degenerate()) throw std::invalid_argument("interval is degenerate");
    return 0.5 * (iv.width() * t + iv.lo + iv.hi);
}

/// Output ranges of constant data are widened so the normalized values sit at 0.
inline Interval widen_if_degenerate(Interval iv) {
    if (iv.hi - iv.lo < 1e-13 * (1.0 + std::abs(iv.lo) + std::abs(iv.hi)))
        return {iv.lo - 1.0, iv.hi + 1.0};
    return iv;
}

} // namespace rpnn
